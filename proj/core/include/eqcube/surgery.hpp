#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "eqcube/alexander.hpp"
#include "eqcube/casson.hpp"
#include "eqcube/hlpoly.hpp"
#include "eqcube/one_var_frac.hpp"
#include "eqcube/rational.hpp"
#include "eqcube/tri_var.hpp"

namespace eqcube {

using FracMatrix = std::vector<std::vector<OneVarFrac>>;

/// Equivariant linking data of a symplectic basis (a_i, b_i) of a Seifert
/// surface of the surgery knot J, with the surgery coefficient p/q.
///
///   Laa[i][j] = lk_e(a_i, a_j^+)    Lab[i][j] = lk_e(a_i, b_j^+)
///   Lba[i][j] = lk_e(b_i, a_j^+)    Lbb[i][j] = lk_e(b_i, b_j^+)
///
/// lk_e(b_i^+, a_i)(t) defaults to Lab[i][i](t^{-1}); bpa overrides it.
struct SurgeryDatum {
  int genus = 0;
  FracMatrix Laa;
  FracMatrix Lab;
  FracMatrix Lba;
  FracMatrix Lbb;
  std::optional<std::vector<OneVarFrac>> bpa;
  SurgeryCoefficient coefficient{1, 1};

  /// Throws Error{InvalidDatum} on shape mismatches and Error{ZeroP} for p = 0.
  void validate() const;
};

/// Antisymmetric Laurent polynomial V(t^{-1}) = -V(t) describing a change
/// of framed knot.
class FramedKnotChange {
 public:
  FramedKnotChange() = default;
  /// Throws Error{NotAntisymmetric}.
  explicit FramedKnotChange(HLPoly v);
  const HLPoly& V() const { return v_; }

 private:
  HLPoly v_;
};

/// (1/12) sum_{i,j} sum_{S3} (alpha_ij(x,y) + alpha_ij(x^-1,y^-1) + beta_ij(x,y)).
TriVarElem lambda_e_prime(const SurgeryDatum& d);

/// 6 (q/p) lambda_e_prime(d) + 6 lambda(S^3(U; p/q)).
TriVarElem surgery_delta(const SurgeryDatum& d);

/// 6 lambda(N).
TriVarElem connected_sum_delta(const Rational& lambda_n);

/// -n (delta/2) J_Delta for n positive meridians. Throws
/// Error{NonPolynomialV} if delta J_Delta is not a Laurent polynomial.
FramedKnotChange framing_V(const AlexanderPair& pair, int n);

/// delta(t) sum_i (L_i(t) - L_i(t^{-1})) with L_i = lk_e(a_i, b_i^+).
/// Throws Error{NonPolynomialV}.
FramedKnotChange seifert_V(const AlexanderPair& pair, const std::vector<OneVarFrac>& diag);

/// sum_{S3} (V(x)/delta(x)) I_Delta(y).
TriVarElem knot_change_delta(const FramedKnotChange& v, const AlexanderPair& pair);

/// knot_change_delta for V = t^k - t^{-k}. Requires k >= 1.
TriVarElem q_k(const AlexanderPair& pair, int k);

/// Bounds on the x and y exponents of numerators after clearing the common
/// denominator D(x,y) = prod_{v in x,y,z} delta(v) (1 - v) Delta(v).
struct DegreeWindow {
  int lo = -15;
  int hi = 15;
};

struct QkReduction {
  TriVarElem representative;
  /// f = representative + sum_k coordinates[k-1] * Q_k.
  std::vector<Rational> coordinates;
  std::size_t rank = 0;
};

/// Echelon basis of span{Q_1, ..., Q_kmax} for repeated reductions.
class QkReducer {
 public:
  /// Throws Error{WindowOverflow} when some Q_k leaves the window.
  QkReducer(const AlexanderPair& pair, int k_max, const DegreeWindow& window);

  /// Canonical representative of f modulo the span. Linear and idempotent
  /// in f. Throws Error{WindowOverflow} when f leaves the window.
  QkReduction reduce(const TriVarElem& f) const;
  std::size_t rank() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// One-shot QkReducer(pair, k_max, window).reduce(f).
QkReduction reduce_mod_Qk(const TriVarElem& f, const AlexanderPair& pair, int k_max, const DegreeWindow& window);

}  // namespace eqcube
