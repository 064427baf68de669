#include "eqcube/surgery.hpp"

#include <string>

#include "eqcube/error.hpp"
#include "eqcube/linear_span.hpp"

namespace eqcube {

namespace {

void check_square(const FracMatrix& m, int g, const char* label) {
  const auto size = static_cast<std::size_t>(g);
  bool ok = m.size() == size;
  for (const auto& row : m) ok = ok && row.size() == size;
  if (!ok) throw Error(ErrorCode::InvalidDatum, std::string(label) + " must be " + std::to_string(g) + "x" + std::to_string(g));
}

TriVarElem poly_to_tri(const HLPoly& p, Slot slot) { return embed(OneVarFrac(p), slot); }

}  // namespace

void SurgeryDatum::validate() const {
  if (genus < 0) throw Error(ErrorCode::InvalidDatum, "negative genus");
  check_square(Laa, genus, "Laa");
  check_square(Lab, genus, "Lab");
  check_square(Lba, genus, "Lba");
  check_square(Lbb, genus, "Lbb");
  if (bpa && bpa->size() != static_cast<std::size_t>(genus)) {
    throw Error(ErrorCode::InvalidDatum, "override for lk_e(b_i^+, a_i) needs " + std::to_string(genus) + " entries");
  }
  if (coefficient.p() == 0) throw Error(ErrorCode::ZeroP, "surgery coefficient p/q with p = 0");
}

FramedKnotChange::FramedKnotChange(HLPoly v) : v_(std::move(v)) {
  if (v_.inverted() != -v_) throw Error(ErrorCode::NotAntisymmetric, to_string(v_) + " is not antisymmetric");
}

TriVarElem lambda_e_prime(const SurgeryDatum& d) {
  d.validate();
  const int g = d.genus;
  std::vector<OneVarFrac> diff(g);
  for (int i = 0; i < g; ++i) {
    const OneVarFrac back = d.bpa ? (*d.bpa)[i] : d.Lab[i][i].inverted();
    diff[i] = d.Lab[i][i] - back;
  }
  TriVarElem inner;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const TriVarElem alpha = embed(d.Laa[i][j], Slot::X) * embed(d.Lbb[i][j], Slot::Y) -
                               embed(d.Lab[i][j], Slot::X) * embed(d.Lba[i][j], Slot::Y);
      inner += alpha + alpha.inverted();
      if (!diff[i].is_zero() && !diff[j].is_zero()) inner += embed(diff[i], Slot::X) * embed(diff[j], Slot::Y);
    }
  }
  return symmetrize(inner) * TriVarElem(Rational(1, 12));
}

TriVarElem surgery_delta(const SurgeryDatum& d) {
  const Rational ratio = d.coefficient.q_over_p();
  return lambda_e_prime(d) * TriVarElem(6 * ratio) + TriVarElem(Rational(6 * lambda_lens(d.coefficient)));
}

TriVarElem connected_sum_delta(const Rational& lambda_n) { return TriVarElem(Rational(6 * lambda_n)); }

namespace {

FramedKnotChange checked_v(const OneVarFrac& v, const char* what) {
  if (!v.is_polynomial()) {
    throw Error(ErrorCode::NonPolynomialV, std::string(what) + " gives the non-polynomial " + to_string(v));
  }
  return FramedKnotChange(v.num());
}

}  // namespace

FramedKnotChange framing_V(const AlexanderPair& pair, int n) {
  const OneVarFrac v = OneVarFrac(pair.delta()) * j_delta(pair) * OneVarFrac(make_rational(-n, 2));
  return checked_v(v, "delta * J_Delta");
}

FramedKnotChange seifert_V(const AlexanderPair& pair, const std::vector<OneVarFrac>& diag) {
  OneVarFrac sum;
  for (const auto& l : diag) sum += l - l.inverted();
  return checked_v(OneVarFrac(pair.delta()) * sum, "delta * sum(L_i(t) - L_i(1/t))");
}

TriVarElem knot_change_delta(const FramedKnotChange& v, const AlexanderPair& pair) {
  if (v.V().is_zero()) return {};
  const OneVarFrac ratio = OneVarFrac(v.V()) / OneVarFrac(pair.delta());
  return symmetrize(embed(ratio, Slot::X) * embed(i_delta(pair), Slot::Y));
}

TriVarElem q_k(const AlexanderPair& pair, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidDatum, "Q_k needs k >= 1");
  return knot_change_delta(FramedKnotChange(HLPoly::t_pow(k) - HLPoly::t_pow(-k)), pair);
}

namespace {

using Key = BiLaurent::Key;
using Vector = SpanReducer<Key>::Vector;

BiLaurent clearing_denominator(const AlexanderPair& pair) {
  const HLPoly factor = integral_delta(pair.delta()) * (HLPoly(1) - HLPoly::t_pow(1)) * pair.Delta();
  BiLaurent d(1);
  for (Slot s : {Slot::X, Slot::Y, Slot::Z}) d = d * poly_to_tri(factor, s).num();
  return d;
}

Vector cleared(const TriVarElem& f, const BiLaurent& d, const DegreeWindow& w, const std::string& what) {
  const TriVarElem g = f * TriVarElem(d);
  if (!g.is_polynomial()) {
    throw Error(ErrorCode::WindowOverflow, what + " does not clear to a Laurent polynomial");
  }
  for (const auto& [key, c] : g.num().terms()) {
    if (key.first < w.lo || key.first > w.hi || key.second < w.lo || key.second > w.hi) {
      throw Error(ErrorCode::WindowOverflow, what + " has the cleared monomial x^" + std::to_string(key.first) + " y^" +
                                                 std::to_string(key.second) + " outside [" + std::to_string(w.lo) +
                                                 ", " + std::to_string(w.hi) + "]");
    }
  }
  return g.num().terms();
}

}  // namespace

struct QkReducer::Impl {
  DegreeWindow window;
  BiLaurent d;
  SpanReducer<Key> span;
};

QkReducer::QkReducer(const AlexanderPair& pair, int k_max, const DegreeWindow& window) {
  if (k_max < 0) throw Error(ErrorCode::InvalidDatum, "k_max must be nonnegative");
  if (window.lo > window.hi) throw Error(ErrorCode::InvalidDatum, "empty degree window");
  auto impl = std::make_shared<Impl>();
  impl->window = window;
  impl->d = clearing_denominator(pair);
  for (int k = 1; k <= k_max; ++k) impl->span.add(cleared(q_k(pair, k), impl->d, window, "Q_" + std::to_string(k)));
  impl_ = std::move(impl);
}

QkReduction QkReducer::reduce(const TriVarElem& f) const {
  const auto r = impl_->span.reduce(cleared(f, impl_->d, impl_->window, "input"));
  QkReduction out;
  out.representative = TriVarElem(BiLaurent::from_terms(r.remainder), impl_->d);
  out.coordinates = r.coordinates;
  out.rank = impl_->span.rank();
  return out;
}

std::size_t QkReducer::rank() const { return impl_->span.rank(); }

QkReduction reduce_mod_Qk(const TriVarElem& f, const AlexanderPair& pair, int k_max, const DegreeWindow& window) {
  return QkReducer(pair, k_max, window).reduce(f);
}

}  // namespace eqcube
