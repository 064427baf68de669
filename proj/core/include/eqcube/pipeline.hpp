#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqcube/alexander.hpp"
#include "eqcube/error.hpp"
#include "eqcube/rational.hpp"
#include "eqcube/surgery.hpp"
#include "eqcube/tri_var.hpp"

namespace eqcube {

struct SurgeryMove {
  SurgeryDatum datum;
  AlexanderPair after;  // (Delta, delta) of the surgered manifold
};
struct ConnectedSumMove {
  Rational lambda;  // Casson-Walker invariant of the summand
};
struct FramingMove {
  int n = 0;  // number of positive meridians added to the framing
};
struct KnotChangeMove {
  FramedKnotChange change;
};
using Move = std::variant<SurgeryMove, ConnectedSumMove, FramingMove, KnotChangeMove>;

std::string move_type(const Move& m);

struct Manifest {
  AlexanderPair initial;
  TriVarElem initial_Q;
  std::vector<Move> moves;
};

struct MoveRecord {
  std::string type;
  TriVarElem delta;
  AlexanderPair pair_after;
};

/// Running (Delta, delta, Q) along a sequence of moves.
class PipelineState {
 public:
  /// Throws Error{SymmetryViolation} if q is not symmetric.
  explicit PipelineState(AlexanderPair pair = {}, TriVarElem q = {});

  const AlexanderPair& pair() const { return pair_; }
  const TriVarElem& Q() const { return q_; }
  const std::vector<MoveRecord>& log() const { return log_; }

  /// Applies one move and re-checks the symmetries of Q.
  void apply(const Move& m);

 private:
  AlexanderPair pair_;
  TriVarElem q_;
  std::vector<MoveRecord> log_;
};

/// Error raised inside a pipeline move, tagged with the move index.
class MoveError : public Error {
 public:
  MoveError(std::size_t index, const Error& cause)
      : Error(cause.code(), "move " + std::to_string(index) + ": " + cause.what()), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

struct ReductionRequest {
  int k_max = 10;
  DegreeWindow window;
};

struct Report {
  TriVarElem Q;
  std::optional<Rational> eval_111;  // empty when the limit does not exist
  std::string eval_111_error;
  AlexanderPair final_pair;
  std::vector<MoveRecord> moves;
  /// delta(x) delta(y) delta(z) Q for the final delta.
  TriVarElem Q_cleared;
  std::vector<std::string> notes;
  std::optional<ReductionRequest> reduction_request;
  std::optional<QkReduction> reduction;
};

/// Folds the moves over the initial state. Errors in a move are rethrown as
/// MoveError.
Report run_pipeline(const Manifest& manifest, const std::optional<ReductionRequest>& reduction = std::nullopt);

}  // namespace eqcube
