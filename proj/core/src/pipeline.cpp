#include "eqcube/pipeline.hpp"

#include <type_traits>

namespace eqcube {

std::string move_type(const Move& m) {
  return std::visit(
      [](const auto& mv) -> std::string {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, SurgeryMove>) return "surgery";
        if constexpr (std::is_same_v<T, ConnectedSumMove>) return "connected_sum";
        if constexpr (std::is_same_v<T, FramingMove>) return "framing";
        if constexpr (std::is_same_v<T, KnotChangeMove>) return "knot_change";
      },
      m);
}

PipelineState::PipelineState(AlexanderPair pair, TriVarElem q) : pair_(std::move(pair)), q_(std::move(q)) {
  if (!check_symmetry(q_)) throw Error(ErrorCode::SymmetryViolation, "initial Q is not symmetric");
}

void PipelineState::apply(const Move& m) {
  TriVarElem delta;
  AlexanderPair after = pair_;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, SurgeryMove>) {
          delta = surgery_delta(mv.datum);
          after = mv.after;
        } else if constexpr (std::is_same_v<T, ConnectedSumMove>) {
          delta = connected_sum_delta(mv.lambda);
        } else if constexpr (std::is_same_v<T, FramingMove>) {
          delta = knot_change_delta(framing_V(pair_, mv.n), pair_);
        } else {
          delta = knot_change_delta(mv.change, pair_);
        }
      },
      m);
  TriVarElem next = q_ + delta;
  if (!check_symmetry(next)) throw Error(ErrorCode::SymmetryViolation, "Q lost its symmetry after a " + move_type(m) + " move");
  q_ = std::move(next);
  pair_ = std::move(after);
  log_.push_back({move_type(m), std::move(delta), pair_});
}

Report run_pipeline(const Manifest& manifest, const std::optional<ReductionRequest>& reduction) {
  PipelineState state(manifest.initial, manifest.initial_Q);
  Report report;
  for (std::size_t i = 0; i < manifest.moves.size(); ++i) {
    const AlexanderPair before = state.pair();
    try {
      state.apply(manifest.moves[i]);
    } catch (const Error& e) {
      throw MoveError(i, e);
    }
    if (!(state.pair().delta() == before.delta())) {
      report.notes.push_back("move " + std::to_string(i) +
                             " changes delta; Q is kept in the fraction field of Q(x, y) with z = 1/(xy)");
    }
  }
  report.Q = state.Q();
  report.final_pair = state.pair();
  report.moves = state.log();
  try {
    report.eval_111 = eval_at_111(report.Q);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoLimit) throw;
    report.eval_111_error = e.what();
  }
  const OneVarFrac d(integral_delta(report.final_pair.delta()));
  report.Q_cleared = report.Q * embed(d, Slot::X) * embed(d, Slot::Y) * embed(d, Slot::Z);
  if (reduction) {
    report.reduction_request = reduction;
    report.reduction = reduce_mod_Qk(report.Q, report.final_pair, reduction->k_max, reduction->window);
  }
  return report;
}

}  // namespace eqcube
