#include "eqcube/one_var_frac.hpp"

#include "detail/convert.hpp"
#include "eqcube/error.hpp"

namespace eqcube {

namespace detail {

ShiftedU to_dense(const HLPoly& p) {
  ShiftedU r;
  if (p.is_zero()) return r;
  r.shift = p.min_doubled();
  r.poly.c.assign(p.max_doubled() - r.shift + 1, Rational(0));
  for (const auto& [k, c] : p.terms()) r.poly.c[k - r.shift] = c;
  return r;
}

HLPoly from_dense(const UPoly& u, int shift) {
  HLPoly::Terms t;
  for (std::size_t i = 0; i < u.c.size(); ++i) {
    if (u.c[i] != 0) t.emplace(static_cast<int>(i) + shift, u.c[i]);
  }
  return HLPoly::from_terms(t);
}

}  // namespace detail

OneVarFrac::OneVarFrac(const HLPoly& num, const HLPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = HLPoly(1);
    return;
  }
  auto n = detail::to_dense(num);
  auto d = detail::to_dense(den);
  detail::UPoly g = detail::gcd(n.poly, d.poly);
  detail::UPoly nn = g.is_one() ? n.poly : detail::exact_div(n.poly, g);
  detail::UPoly dd = g.is_one() ? d.poly : detail::exact_div(d.poly, g);
  const Rational inv = 1 / dd.lead();
  nn = nn * inv;
  dd = dd * inv;
  num_ = detail::from_dense(nn, n.shift - d.shift);
  den_ = detail::from_dense(dd, 0);
}

OneVarFrac OneVarFrac::operator-() const {
  OneVarFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

OneVarFrac operator+(const OneVarFrac& a, const OneVarFrac& b) {
  if (a.den_ == b.den_) return OneVarFrac(a.num_ + b.num_, a.den_);
  return OneVarFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

OneVarFrac operator-(const OneVarFrac& a, const OneVarFrac& b) { return a + (-b); }

OneVarFrac operator*(const OneVarFrac& a, const OneVarFrac& b) {
  return OneVarFrac(a.num_ * b.num_, a.den_ * b.den_);
}

OneVarFrac operator/(const OneVarFrac& a, const OneVarFrac& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero fraction");
  return OneVarFrac(a.num_ * b.den_, a.den_ * b.num_);
}

OneVarFrac OneVarFrac::inverted() const { return OneVarFrac(num_.inverted(), den_.inverted()); }

std::string to_string(const OneVarFrac& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace eqcube
