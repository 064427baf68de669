#include "detail/dense_poly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace eqcube::detail {

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const Rational& s) {
  if (s == 0) return {};
  UPoly r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly division by zero");
  UPoly r = a;
  if (r.degree() < b.degree()) return {UPoly{}, r};
  UPoly q;
  q.c.assign(r.c.size() - b.c.size() + 1, Rational(0));
  const Rational inv_lead = 1 / b.lead();
  for (int d = r.degree(); d >= b.degree(); --d) {
    const Rational f = r.c[d] * inv_lead;
    if (f == 0) continue;
    const int shift = d - b.degree();
    q.c[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[shift + j] -= f * b.c[j];
  }
  q.trim();
  r.trim();
  return {q, r};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  assert(r.is_zero());
  return q;
}

UPoly monic(const UPoly& a) {
  if (a.is_zero() || a.lead() == 1) return a;
  return a * (1 / a.lead());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

BPoly operator+(const BPoly& a, const BPoly& b) {
  BPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  r.trim();
  return r;
}

BPoly operator-(const BPoly& a, const BPoly& b) {
  BPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  r.trim();
  return r;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BPoly r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

BPoly operator*(const BPoly& a, const UPoly& s) {
  if (s.is_zero()) return {};
  BPoly r;
  r.c.reserve(a.c.size());
  for (const auto& u : a.c) r.c.push_back(u * s);
  r.trim();
  return r;
}

UPoly content(const BPoly& a) {
  UPoly g;
  for (const auto& u : a.c) {
    if (u.is_zero()) continue;
    g = gcd(g, u);
    if (g.degree() == 0) break;
  }
  return g;
}

BPoly primitive_part(const BPoly& a) {
  if (a.is_zero()) return a;
  UPoly g = content(a);
  BPoly r;
  r.c.reserve(a.c.size());
  if (g.degree() == 0) {
    r = a;
  } else {
    for (const auto& u : a.c) r.c.push_back(u.is_zero() ? u : exact_div(u, g));
  }
  const Rational lead = r.lead().lead();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    for (auto& u : r.c) u = u * inv;
  }
  return r;
}

BPoly pseudo_remainder(const BPoly& a, const BPoly& b) {
  BPoly r = a;
  const UPoly& lb = b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const UPoly lr = r.lead();
    BPoly next;
    next.c.resize(r.c.size());
    for (std::size_t i = 0; i < r.c.size(); ++i) next.c[i] = r.c[i] * lb;
    for (std::size_t j = 0; j < b.c.size(); ++j) next.c[shift + j] = next.c[shift + j] - b.c[j] * lr;
    next.trim();
    r = std::move(next);
  }
  return r;
}

BPoly exact_div(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw std::domain_error("BPoly division by zero");
  BPoly r = a;
  BPoly q;
  if (r.is_zero()) return q;
  if (r.degree() < b.degree()) throw std::logic_error("BPoly exact_div: not divisible");
  q.c.resize(r.degree() - b.degree() + 1);
  while (!r.is_zero()) {
    if (r.degree() < b.degree()) throw std::logic_error("BPoly exact_div: not divisible");
    const int shift = r.degree() - b.degree();
    auto [f, rem] = divmod(r.lead(), b.lead());
    if (!rem.is_zero()) throw std::logic_error("BPoly exact_div: not divisible");
    q.c[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[shift + j] = r.c[shift + j] - b.c[j] * f;
    r.trim();
  }
  q.trim();
  return q;
}

namespace {

UPoly upow(const UPoly& a, int e) {
  UPoly r = UPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

// prem with the full factor lc(b)^(deg a - deg b + 1) that the subresultant
// recurrence relies on.
BPoly full_pseudo_remainder(const BPoly& a, const BPoly& b) {
  BPoly r = a;
  const UPoly& lb = b.lead();
  int steps = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const UPoly lr = r.lead();
    BPoly next;
    next.c.resize(r.c.size());
    for (std::size_t i = 0; i < r.c.size(); ++i) next.c[i] = r.c[i] * lb;
    for (std::size_t j = 0; j < b.c.size(); ++j) next.c[shift + j] = next.c[shift + j] - b.c[j] * lr;
    next.trim();
    r = std::move(next);
    --steps;
  }
  return steps > 0 && !r.is_zero() ? r * upow(lb, steps) : r;
}

// Modular coprimality certificate for primitive a, b. If lc_y(a) survives the
// evaluation x = x0 mod p, the y-degree of gcd(a(x0, y), b(x0, y)) over F_p
// bounds the y-degree of the true gcd from above. A gcd of y-degree zero lies
// in Q[x] and divides the content, which is one.
constexpr std::uint64_t kPrime = 2147483629;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::optional<std::uint64_t> reduce_mod(const Rational& q) {
  const auto m = [](const mpz_class& z) {
    return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), kPrime));
  };
  const std::uint64_t d = m(q.get_den());
  if (d == 0) return std::nullopt;
  return mulmod(m(q.get_num()), powmod(d, kPrime - 2));
}

using ModPoly = std::vector<std::uint64_t>;

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mod_gcd_degree(ModPoly a, ModPoly b) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = (a[shift + j] + kPrime - mulmod(f, b[j])) % kPrime;
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Coefficients of a(x0, y) as a polynomial in y, or nullopt if a denominator
// or lc_y(a) vanishes.
std::optional<ModPoly> eval_x(const BPoly& a, std::uint64_t x0) {
  ModPoly out(a.c.size(), 0);
  for (std::size_t j = 0; j < a.c.size(); ++j) {
    std::uint64_t acc = 0;
    for (auto it = a.c[j].c.rbegin(); it != a.c[j].c.rend(); ++it) {
      const auto v = reduce_mod(*it);
      if (!v) return std::nullopt;
      acc = (mulmod(acc, x0) + *v) % kPrime;
    }
    out[j] = acc;
  }
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

bool certified_coprime(const BPoly& a, const BPoly& b) {
  constexpr std::uint64_t kPoints[] = {1000003, 7919, 104729};
  for (const std::uint64_t pt : kPoints) {
    const auto ea = eval_x(a, pt);
    const auto eb = eval_x(b, pt);
    if (ea && eb) return mod_gcd_degree(*ea, *eb) == 0;
  }
  return false;
}

BPoly divide_coefficients(const BPoly& a, const UPoly& d) {
  if (d.is_one()) return a;
  BPoly r;
  r.c.reserve(a.c.size());
  for (const auto& u : a.c) r.c.push_back(u.is_zero() ? u : exact_div(u, d));
  return r;
}

}  // namespace

BPoly gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : primitive_part(b) * content(b);
  if (b.is_zero()) return primitive_part(a) * content(a);
  const UPoly cont = gcd(content(a), content(b));
  BPoly u = primitive_part(a);
  BPoly v = primitive_part(b);
  if (u == v) return u * cont;
  if (certified_coprime(u, v)) return BPoly{{cont}};
  if (u.degree() < v.degree()) std::swap(u, v);
  // Subresultant PRS over Q[x]: the divisions by g h^delta are exact and keep
  // the x-degrees of the remainders bounded without content computations.
  UPoly g = UPoly::constant(1);
  UPoly h = UPoly::constant(1);
  for (;;) {
    if (v.degree() == 0) {
      v = BPoly{{UPoly::constant(1)}};
      break;
    }
    const int delta = u.degree() - v.degree();
    BPoly r = full_pseudo_remainder(u, v);
    if (r.is_zero()) break;
    u = std::move(v);
    v = divide_coefficients(r, g * upow(h, delta));
    g = u.lead();
    h = delta == 0 ? h : exact_div(upow(g, delta), upow(h, delta - 1));
  }
  BPoly out = primitive_part(v) * cont;
  const Rational lead = out.lead().lead();
  return lead == 1 ? out : out * UPoly::constant(1 / lead);
}

}  // namespace eqcube::detail
