#include "eqcube/tri_var.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "detail/dense_poly.hpp"
#include "eqcube/error.hpp"

namespace eqcube {

const std::array<Permutation, 6> kAllPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// ---------------------------------------------------------------- BiLaurent

BiLaurent::BiLaurent(const Rational& c) { add_term({0, 0}, c); }

BiLaurent BiLaurent::monomial(int xexp, int yexp, const Rational& c) {
  BiLaurent p;
  p.add_term({xexp, yexp}, c);
  return p;
}

BiLaurent BiLaurent::from_terms(const Terms& terms) {
  BiLaurent p;
  for (const auto& [k, c] : terms) p.add_term(k, c);
  return p;
}

void BiLaurent::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BiLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
}

Rational BiLaurent::coeff(int xexp, int yexp) const {
  auto it = terms_.find({xexp, yexp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiLaurent::min_x() const { return terms_.begin()->first.first; }

int BiLaurent::min_y() const {
  int m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return r;
}

BiLaurent BiLaurent::shifted(int dx, int dy) const {
  BiLaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + dx, k.second + dy}, c);
  return r;
}

BiLaurent BiLaurent::permuted(const Permutation& sigma) const {
  BiLaurent r;
  for (const auto& [k, c] : terms_) {
    std::array<int, 3> e{0, 0, 0};
    e[sigma[0]] += k.first;
    e[sigma[1]] += k.second;
    r.add_term({e[0] - e[2], e[1] - e[2]}, c);
  }
  return r;
}

BiLaurent BiLaurent::inverted() const {
  BiLaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, -k.second}, c);
  return r;
}

std::strong_ordering operator<=>(const BiLaurent& a, const BiLaurent& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (int c = cmp(ia->second, ib->second); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ------------------------------------------------------------ dense bridge

namespace {

using detail::BPoly;
using detail::UPoly;

// p = x^dx y^dy * poly, poly free of monomial factors.
struct ShiftedB {
  int dx = 0;
  int dy = 0;
  BPoly poly;
};

ShiftedB to_dense(const BiLaurent& p) {
  ShiftedB r;
  if (p.is_zero()) return r;
  r.dx = p.min_x();
  r.dy = p.min_y();
  int max_y = r.dy;
  int max_x = r.dx;
  for (const auto& [k, c] : p.terms()) {
    max_y = std::max(max_y, k.second);
    max_x = std::max(max_x, k.first);
  }
  r.poly.c.resize(max_y - r.dy + 1);
  for (const auto& [k, c] : p.terms()) {
    UPoly& u = r.poly.c[k.second - r.dy];
    const auto i = static_cast<std::size_t>(k.first - r.dx);
    if (u.c.size() <= i) u.c.resize(i + 1, Rational(0));
    u.c[i] = c;
  }
  for (auto& u : r.poly.c) u.trim();
  r.poly.trim();
  return r;
}

BiLaurent from_dense(const BPoly& b, int dx, int dy) {
  BiLaurent::Terms t;
  for (std::size_t j = 0; j < b.c.size(); ++j) {
    const auto& u = b.c[j];
    for (std::size_t i = 0; i < u.c.size(); ++i) {
      if (u.c[i] != 0) t.emplace(BiLaurent::Key{static_cast<int>(i) + dx, static_cast<int>(j) + dy}, u.c[i]);
    }
  }
  return BiLaurent::from_terms(t);
}

BiLaurent dense_gcd(const BiLaurent& a, const BiLaurent& b) {
  return from_dense(detail::gcd(to_dense(a).poly, to_dense(b).poly), 0, 0);
}

// a / g where g is a monomial-free polynomial dividing a.
BiLaurent exact_quotient(const BiLaurent& a, const BiLaurent& g) {
  if (g.is_one()) return a;
  auto sa = to_dense(a);
  auto sg = to_dense(g);
  return from_dense(detail::exact_div(sa.poly, sg.poly), sa.dx - sg.dx, sa.dy - sg.dy);
}

}  // namespace

// -------------------------------------------------------------- TriVarElem

TriVarElem TriVarElem::from_coprime(const BiLaurent& num, const BiLaurent& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  TriVarElem r;
  if (num.is_zero()) return r;
  const int dx = den.min_x();
  const int dy = den.min_y();
  BiLaurent d = den.shifted(-dx, -dy);
  BiLaurent n = num.shifted(-dx, -dy);
  const Rational lead = d.lead();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    d *= inv;
    n *= inv;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

TriVarElem::TriVarElem(const BiLaurent& num, const BiLaurent& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = BiLaurent(1);
    return;
  }
  auto sn = to_dense(num);
  auto sd = to_dense(den);
  if (sd.poly.is_one()) {
    *this = from_coprime(num, den);
    return;
  }
  BPoly g = detail::gcd(sn.poly, sd.poly);
  BPoly n = g.is_one() ? sn.poly : detail::exact_div(sn.poly, g);
  BPoly d = g.is_one() ? sd.poly : detail::exact_div(sd.poly, g);
  *this = from_coprime(from_dense(n, sn.dx - sd.dx, sn.dy - sd.dy), from_dense(d, 0, 0));
}

bool TriVarElem::is_constant() const {
  return den_.is_one() && (num_.is_zero() || (num_.terms().size() == 1 && num_.terms().begin()->first == BiLaurent::Key{0, 0}));
}

TriVarElem TriVarElem::operator-() const {
  TriVarElem r = *this;
  r.num_ = -r.num_;
  return r;
}

TriVarElem operator+(const TriVarElem& a, const TriVarElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return TriVarElem(a.num_ + b.num_);
    return TriVarElem(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return TriVarElem::from_coprime(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return TriVarElem::from_coprime(a.num_ + b.num_ * a.den_, a.den_);
  // Henrici: with g = gcd(b, d), gcd(a d' + c b', b' d' g) = gcd(a d' + c b', g).
  const BiLaurent g = dense_gcd(a.den_, b.den_);
  if (g.is_one()) return TriVarElem::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  const BiLaurent bp = exact_quotient(a.den_, g);
  const BiLaurent dp = exact_quotient(b.den_, g);
  const BiLaurent t = a.num_ * dp + b.num_ * bp;
  if (t.is_zero()) return {};
  const BiLaurent h = dense_gcd(t, g);
  return TriVarElem::from_coprime(exact_quotient(t, h), bp * exact_quotient(b.den_, h));
}

TriVarElem operator-(const TriVarElem& a, const TriVarElem& b) { return a + (-b); }

TriVarElem operator*(const TriVarElem& a, const TriVarElem& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return TriVarElem(a.num_ * b.num_);
  const BiLaurent g1 = b.den_.is_one() ? BiLaurent(1) : dense_gcd(a.num_, b.den_);
  const BiLaurent g2 = a.den_.is_one() ? BiLaurent(1) : dense_gcd(b.num_, a.den_);
  return TriVarElem::from_coprime(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                                  exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1));
}

TriVarElem operator/(const TriVarElem& a, const TriVarElem& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in the three-variable ring");
  return a * TriVarElem::from_coprime(b.den_, b.num_);
}

TriVarElem TriVarElem::permuted(const Permutation& sigma) const {
  return from_coprime(num_.permuted(sigma), den_.permuted(sigma));
}

TriVarElem TriVarElem::inverted() const { return from_coprime(num_.inverted(), den_.inverted()); }

// ------------------------------------------------------------ free functions

TriVarElem embed(const OneVarFrac& f, Slot slot) {
  if (!f.num().integral_exponents() || !f.den().integral_exponents()) {
    throw Error(ErrorCode::HalfPowerResidue, "cannot embed " + to_string(f) + ": irreducible half-integer exponents");
  }
  auto lift = [slot](const HLPoly& p) {
    BiLaurent::Terms t;
    for (const auto& [k, c] : p.terms()) {
      const int e = k / 2;
      switch (slot) {
        case Slot::X: t.emplace(BiLaurent::Key{e, 0}, c); break;
        case Slot::Y: t.emplace(BiLaurent::Key{0, e}, c); break;
        case Slot::Z: t.emplace(BiLaurent::Key{-e, -e}, c); break;
      }
    }
    return BiLaurent::from_terms(t);
  };
  return TriVarElem::from_coprime(lift(f.num()), lift(f.den()));
}

TriVarElem symmetrize(const TriVarElem& f) {
  TriVarElem sum;
  for (const auto& sigma : kAllPermutations) sum += f.permuted(sigma);
  return sum;
}

namespace {

// Polynomial in s obtained by x = 1 + s, y = 1 + beta s from a monomial-free
// polynomial p.
UPoly restrict_to_line(const BiLaurent& p, const Rational& beta) {
  std::vector<UPoly> xpow{UPoly::constant(1)};
  std::vector<UPoly> ypow{UPoly::constant(1)};
  const UPoly xs({Rational(1), Rational(1)});
  const UPoly ys({Rational(1), beta});
  UPoly acc;
  for (const auto& [k, c] : p.terms()) {
    while (static_cast<int>(xpow.size()) <= k.first) xpow.push_back(xpow.back() * xs);
    while (static_cast<int>(ypow.size()) <= k.second) ypow.push_back(ypow.back() * ys);
    acc = acc + (xpow[k.first] * ypow[k.second]) * c;
  }
  return acc;
}

int order_at_zero(const UPoly& u) {
  int i = 0;
  while (u.c[i] == 0) ++i;
  return i;
}

}  // namespace

Rational eval_at_111(const TriVarElem& f) {
  if (f.is_zero()) return 0;
  // Monomial factors tend to 1 along every probe line, so only the
  // monomial-free parts matter.
  const BiLaurent n = f.num().shifted(-f.num().min_x(), -f.num().min_y());
  const BiLaurent d = f.den().shifted(-f.den().min_x(), -f.den().min_y());
  std::optional<Rational> common;
  for (int beta : {2, 3, 5}) {
    const UPoly ns = restrict_to_line(n, beta);
    const UPoly ds = restrict_to_line(d, beta);
    if (ds.is_zero()) throw Error(ErrorCode::NoLimit, "denominator vanishes identically on probe beta=" + std::to_string(beta));
    Rational value = 0;
    if (!ns.is_zero()) {
      const int on = order_at_zero(ns);
      const int od = order_at_zero(ds);
      if (on < od) throw Error(ErrorCode::NoLimit, "pole at (1,1,1) on probe beta=" + std::to_string(beta));
      value = on > od ? Rational(0) : Rational(ns.c[on] / ds.c[od]);
    }
    if (common && *common != value) {
      throw Error(ErrorCode::NoLimit, "probe values disagree (" + eqcube::to_string(*common) + " vs " + eqcube::to_string(value) + ")");
    }
    common = value;
  }
  return *common;
}

bool check_symmetry(const TriVarElem& f) {
  return f == f.permuted({1, 0, 2}) && f == f.permuted({2, 1, 0}) && f == f.inverted();
}

namespace {

void write_monomial(std::ostringstream& out, int xe, int ye) {
  bool any = false;
  auto var = [&](char v, int e) {
    if (e == 0) return;
    if (any) out << "*";
    out << v;
    if (e != 1) out << "^" << e;
    any = true;
  };
  var('x', xe);
  var('y', ye);
}

}  // namespace

std::string to_string(const BiLaurent& p) {
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
    if (k == BiLaurent::Key{0, 0}) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    write_monomial(out, k.first, k.second);
  }
  return out.str();
}

std::string to_string(const TriVarElem& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace eqcube
