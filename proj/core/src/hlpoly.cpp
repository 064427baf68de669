#include "eqcube/hlpoly.hpp"

#include <sstream>

namespace eqcube {

HLPoly::HLPoly(const Rational& c) { add_term(0, c); }

HLPoly HLPoly::monomial(int doubled, const Rational& c) {
  HLPoly p;
  p.add_term(doubled, c);
  return p;
}

HLPoly HLPoly::from_terms(const Terms& terms) {
  HLPoly p;
  for (const auto& [k, c] : terms) p.add_term(k, c);
  return p;
}

void HLPoly::add_term(int doubled, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(doubled, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool HLPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational HLPoly::coeff(int doubled) const {
  auto it = terms_.find(doubled);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool HLPoly::integral_exponents() const {
  for (const auto& [k, c] : terms_) {
    if (k % 2 != 0) return false;
  }
  return true;
}

bool HLPoly::half_odd_exponents() const {
  for (const auto& [k, c] : terms_) {
    if (k % 2 == 0) return false;
  }
  return true;
}

HLPoly HLPoly::operator-() const {
  HLPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

HLPoly& HLPoly::operator+=(const HLPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HLPoly& HLPoly::operator-=(const HLPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

HLPoly operator*(const HLPoly& a, const HLPoly& b) {
  HLPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  }
  return r;
}

HLPoly& HLPoly::operator*=(const HLPoly& o) { return *this = *this * o; }

HLPoly& HLPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

HLPoly HLPoly::shifted(int doubled) const {
  HLPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k + doubled, c);
  return r;
}

HLPoly HLPoly::derivative() const {
  HLPoly r;
  for (const auto& [k, c] : terms_) r.add_term(k - 2, c * make_rational(k, 2));
  return r;
}

HLPoly HLPoly::inverted() const {
  HLPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
  return r;
}

Rational HLPoly::at_one() const {
  Rational s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

HLPoly HLPoly::pow(unsigned e) const {
  HLPoly r(1);
  HLPoly base = *this;
  while (e != 0) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return r;
}

std::strong_ordering operator<=>(const HLPoly& a, const HLPoly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (int c = cmp(ia->second, ib->second); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

namespace {

std::string exponent_text(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return "(" + std::to_string(doubled) + "/2)";
}

}  // namespace

std::string to_string(const HLPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << "t";
    if (k != 2) out << "^" << exponent_text(k);
  }
  return out.str();
}

}  // namespace eqcube
