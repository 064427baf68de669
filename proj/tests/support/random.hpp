#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "eqcube/alexander.hpp"
#include "eqcube/diagram.hpp"
#include "eqcube/hlpoly.hpp"
#include "eqcube/one_var_frac.hpp"
#include "eqcube/tri_var.hpp"

namespace testing_support {

using Rng = std::mt19937_64;

inline int uniform(Rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }

inline eqcube::Rational small_rational(Rng& r) { return eqcube::make_rational(uniform(r, -4, 4), uniform(r, 1, 3)); }

inline eqcube::HLPoly random_poly(Rng& r, int degree, bool half = false) {
  eqcube::HLPoly::Terms terms;
  const int n = uniform(r, 1, 3);
  for (int i = 0; i < n; ++i) terms[2 * uniform(r, -degree, degree) + (half ? 1 : 0)] += small_rational(r);
  return eqcube::HLPoly::from_terms(terms);
}

inline eqcube::HLPoly nonzero_poly(Rng& r, int degree, bool half = false) {
  for (;;) {
    eqcube::HLPoly p = random_poly(r, degree, half);
    if (!p.is_zero()) return p;
  }
}

inline eqcube::OneVarFrac random_frac(Rng& r) { return {random_poly(r, 2), nonzero_poly(r, 2)}; }

inline eqcube::BiLaurent random_bi(Rng& r, bool nonzero) {
  for (;;) {
    eqcube::BiLaurent::Terms t;
    const int n = uniform(r, 1, 3);
    for (int i = 0; i < n; ++i) t[{uniform(r, -2, 2), uniform(r, -2, 2)}] += small_rational(r);
    eqcube::BiLaurent p = eqcube::BiLaurent::from_terms(t);
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline eqcube::TriVarElem random_tri(Rng& r) { return {random_bi(r, false), random_bi(r, true)}; }

// Symmetric with integer exponents, degree <= d and value 1 at t = 1.
inline eqcube::HLPoly random_symmetric(Rng& r, int d) {
  for (;;) {
    eqcube::HLPoly p(eqcube::Rational(uniform(r, -3, 3)));
    for (int k = 1; k <= d; ++k) {
      const eqcube::Rational c(uniform(r, -2, 2));
      p += eqcube::HLPoly::t_pow(k, c) + eqcube::HLPoly::t_pow(-k, c);
    }
    if (p.at_one() != 0) return p * (1 / p.at_one());
  }
}

inline eqcube::AlexanderPair random_pair(Rng& r, int d) {
  const eqcube::HLPoly p = random_symmetric(r, d);
  return {p, p};
}

// Configuration-model trivalent multigraph with random orders and beads.
inline eqcube::MonGraph random_graph(Rng& r, int n) {
  const int nv = 2 * n;
  std::vector<int> slots;
  for (int v = 0; v < nv; ++v) slots.insert(slots.end(), 3, v);
  std::shuffle(slots.begin(), slots.end(), r);
  eqcube::MonGraph g;
  g.vertices = nv;
  std::vector<std::vector<int>> at(nv);
  for (int e = 0; e < 3 * n; ++e) {
    g.edges.push_back({slots[2 * e], slots[2 * e + 1], uniform(r, -3, 3), uniform(r, 0, 2)});
    at[slots[2 * e]].push_back(2 * e);
    at[slots[2 * e + 1]].push_back(2 * e + 1);
  }
  for (auto& a : at) {
    std::shuffle(a.begin(), a.end(), r);
    g.orders.push_back({a[0], a[1], a[2]});
  }
  return g;
}

// Random sequence of value-preserving moves.
inline eqcube::MonGraph scramble(Rng& r, eqcube::MonGraph g, int count) {
  const int nv = g.vertices;
  const int ne = static_cast<int>(g.edges.size());
  for (int m = 0; m < count; ++m) {
    switch (uniform(r, 0, 4)) {
      case 0: g = eqcube::reverse_edge(g, uniform(r, 0, ne - 1)); break;
      case 1: g = eqcube::gauge_move(g, uniform(r, 0, nv - 1), uniform(r, -2, 2)); break;
      case 2: {
        std::vector<int> p(nv);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), r);
        g = eqcube::relabel_vertices(g, p);
        break;
      }
      case 3: {
        std::vector<int> p(ne);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), r);
        g = eqcube::relabel_edges(g, p);
        break;
      }
      default: g = eqcube::rotate_order(g, uniform(r, 0, nv - 1)); break;
    }
  }
  return g;
}

}  // namespace testing_support
