#include "eqcube/self_check.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

#include "eqcube/alexander.hpp"
#include "eqcube/casson.hpp"
#include "eqcube/codec.hpp"
#include "eqcube/diagram.hpp"
#include "eqcube/pipeline.hpp"
#include "eqcube/surgery.hpp"

namespace eqcube {

namespace {

using Rng = std::mt19937_64;
using Failure = std::optional<std::string>;

int uniform(Rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }

Rational small_rational(Rng& r) { return make_rational(uniform(r, -4, 4), uniform(r, 1, 3)); }

HLPoly random_poly(Rng& r, int degree, bool half = false) {
  HLPoly::Terms terms;
  const int n = uniform(r, 1, 3);
  for (int i = 0; i < n; ++i) terms[2 * uniform(r, -degree, degree) + (half ? 1 : 0)] += small_rational(r);
  return HLPoly::from_terms(terms);
}

HLPoly nonzero_poly(Rng& r, int degree) {
  for (;;) {
    HLPoly p = random_poly(r, degree);
    if (!p.is_zero()) return p;
  }
}

OneVarFrac random_frac(Rng& r) { return OneVarFrac(random_poly(r, 2), nonzero_poly(r, 2)); }

TriVarElem random_tri(Rng& r) {
  auto bi = [&](bool nonzero) {
    for (;;) {
      BiLaurent::Terms t;
      const int n = uniform(r, 1, 3);
      for (int i = 0; i < n; ++i) t[{uniform(r, -2, 2), uniform(r, -2, 2)}] += small_rational(r);
      BiLaurent p = BiLaurent::from_terms(t);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return TriVarElem(bi(false), bi(true));
}

// Symmetric, value 1 at t = 1, integer exponents, degree <= d.
HLPoly random_symmetric(Rng& r, int d) {
  for (;;) {
    HLPoly p(Rational(uniform(r, -3, 3)));
    for (int k = 1; k <= d; ++k) {
      const Rational c(uniform(r, -2, 2));
      p += HLPoly::t_pow(k, c) + HLPoly::t_pow(-k, c);
    }
    if (p.at_one() != 0) return p * (1 / p.at_one());
  }
}

AlexanderPair random_pair(Rng& r, int d) {
  const HLPoly p = random_symmetric(r, d);
  return AlexanderPair(p, p);
}

MonGraph random_graph(Rng& r, int n) {
  const int nv = 2 * n;
  std::vector<int> slots;
  for (int v = 0; v < nv; ++v) slots.insert(slots.end(), 3, v);
  std::shuffle(slots.begin(), slots.end(), r);
  MonGraph g;
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

MonGraph random_moves(Rng& r, MonGraph g, int count) {
  const int nv = g.vertices;
  const int ne = static_cast<int>(g.edges.size());
  for (int m = 0; m < count; ++m) {
    switch (uniform(r, 0, 4)) {
      case 0: g = reverse_edge(g, uniform(r, 0, ne - 1)); break;
      case 1: g = gauge_move(g, uniform(r, 0, nv - 1), uniform(r, -2, 2)); break;
      case 2: {
        std::vector<int> p(nv);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), r);
        g = relabel_vertices(g, p);
        break;
      }
      case 3: {
        std::vector<int> p(ne);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), r);
        g = relabel_edges(g, p);
        break;
      }
      default: g = rotate_order(g, uniform(r, 0, nv - 1)); break;
    }
  }
  return g;
}

SurgeryDatum random_datum(Rng& r) {
  SurgeryDatum d;
  d.genus = uniform(r, 0, 2);
  auto matrix = [&] {
    FracMatrix m(d.genus, std::vector<OneVarFrac>(d.genus));
    for (auto& row : m) {
      for (auto& x : row) x = OneVarFrac(HLPoly(Rational(uniform(r, -3, 3))));
    }
    return m;
  };
  d.Laa = matrix();
  d.Lab = matrix();
  d.Lba = matrix();
  d.Lbb = matrix();
  for (;;) {
    const int p = uniform(r, -7, 7);
    const int q = uniform(r, -7, 7);
    if (p != 0 && q != 0 && std::gcd(p, q) == 1) {
      d.coefficient = SurgeryCoefficient(p, q);
      return d;
    }
  }
}

struct Suite {
  std::string name;
  std::vector<std::pair<std::string, std::function<Failure(Rng&)>>> checks;
};

template <class F>
Failure repeat(int n, F&& f) {
  for (int i = 0; i < n; ++i) {
    if (Failure fail = f(i)) return fail;
  }
  return std::nullopt;
}

Failure expect(bool ok, const std::string& what) { return ok ? std::nullopt : Failure(what); }

std::vector<Suite> suites() {
  std::vector<Suite> out;

  out.push_back({"exact-algebra",
                 {{"HLPoly ring axioms",
                   [](Rng& r) {
                     return repeat(100, [&](int) {
                       const HLPoly a = random_poly(r, 3, uniform(r, 0, 1)), b = random_poly(r, 3), c = random_poly(r, 3);
                       return expect((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a + (-a) == HLPoly(),
                                     to_string(a) + ", " + to_string(b) + ", " + to_string(c));
                     });
                   }},
                  {"OneVarFrac ring axioms",
                   [](Rng& r) {
                     return repeat(60, [&](int) {
                       const OneVarFrac a = random_frac(r), b = random_frac(r), c = random_frac(r);
                       return expect((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c,
                                     to_string(a) + ", " + to_string(b) + ", " + to_string(c));
                     });
                   }},
                  {"TriVarElem ring axioms",
                   [](Rng& r) {
                     return repeat(30, [&](int) {
                       const TriVarElem a = random_tri(r), b = random_tri(r), c = random_tri(r);
                       return expect((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c,
                                     to_string(a) + ", " + to_string(b) + ", " + to_string(c));
                     });
                   }},
                  {"t -> 1/t is a ring automorphism of fractions",
                   [](Rng& r) {
                     return repeat(60, [&](int) {
                       const OneVarFrac a = random_frac(r), b = random_frac(r);
                       return expect((a + b).inverted() == a.inverted() + b.inverted() &&
                                         (a * b).inverted() == a.inverted() * b.inverted() && a.inverted().inverted() == a,
                                     to_string(a) + ", " + to_string(b));
                     });
                   }},
                  {"symmetrize output is permutation invariant",
                   [](Rng& r) {
                     return repeat(30, [&](int) {
                       const TriVarElem s = symmetrize(random_tri(r));
                       for (const auto& sigma : kAllPermutations) {
                         if (!(s.permuted(sigma) == s)) return Failure(to_string(s));
                       }
                       return Failure();
                     });
                   }},
                  {"inversion commutes with symmetrize",
                   [](Rng& r) {
                     return repeat(30, [&](int) {
                       const TriVarElem f = random_tri(r);
                       return expect(symmetrize(f).inverted() == symmetrize(f.inverted()), to_string(f));
                     });
                   }},
                  {"normal form is independent of construction order",
                   [](Rng& r) {
                     return repeat(40, [&](int) {
                       const TriVarElem a = random_tri(r), b = random_tri(r), c = random_tri(r);
                       const bool quotient_ok = b.is_zero() || (a * b) / b == a;
                       return expect((a + b) + c == c + (b + a) && quotient_ok,
                                     to_string(a) + ", " + to_string(b));
                     });
                   }}}});

  out.push_back({"alexander",
                 {{"I and J are odd under t -> 1/t",
                   [](Rng& r) {
                     return repeat(40, [&](int) {
                       const AlexanderPair p = random_pair(r, 3);
                       return expect(i_delta(p).inverted() == -i_delta(p) && j_delta(p).inverted() == -j_delta(p),
                                     to_string(p.Delta()));
                     });
                   }},
                  {"I - J = (1 + t)/(1 - t)",
                   [](Rng& r) {
                     const OneVarFrac pole(HLPoly(1) + HLPoly::t_pow(1), HLPoly(1) - HLPoly::t_pow(1));
                     return repeat(40, [&](int) {
                       const AlexanderPair p = random_pair(r, 3);
                       return expect(i_delta(p) - j_delta(p) == pole, to_string(p.Delta()));
                     });
                   }},
                  {"normalize_symmetric is idempotent and inversion fixed",
                   [](Rng& r) {
                     return repeat(40, [&](int) {
                       const HLPoly p = random_symmetric(r, 3).shifted(2 * uniform(r, -3, 3)) * Rational(uniform(r, 1, 5));
                       const HLPoly n = normalize_symmetric(p);
                       return expect(normalize_symmetric(n) == n && n.inverted() == n && n.at_one() == 1, to_string(p));
                     });
                   }}}});

  out.push_back({"diagram-algebra",
                 {{"canonical form is stable under random moves",
                   [](Rng& r) {
                     return repeat(20, [&](int i) {
                       const MonGraph g = random_graph(r, 1 + i % 3);
                       const CanonicalForm a = canonicalize(g);
                       const CanonicalForm b = canonicalize(random_moves(r, g, 1000));
                       return expect(a.graph == b.graph && a.sign == b.sign, to_string(g));
                     });
                   }},
                  {"a half-edge transposition flips the sign",
                   [](Rng& r) {
                     return repeat(20, [&](int i) {
                       const MonGraph g = random_graph(r, 1 + i % 3);
                       const CanonicalForm a = canonicalize(g);
                       const CanonicalForm b = canonicalize(transpose_half_edges(g, uniform(r, 0, g.vertices - 1)));
                       return expect(a.graph == b.graph && a.sign == -b.sign, to_string(g));
                     });
                   }},
                  {"psi is gauge invariant",
                   [](Rng& r) {
                     return repeat(30, [&](int) {
                       const HLPoly p = random_poly(r, 3), q = random_poly(r, 3), s = random_poly(r, 3);
                       const HLPoly t = HLPoly::t_pow(1);
                       return expect(psi(theta(p * t, q * t, s * t)) == psi(theta(p, q, s)), to_string(p));
                     });
                   }},
                  {"psi intertwines bead inversion with (x,y,z) -> 1/(x,y,z)",
                   [](Rng& r) {
                     return repeat(30, [&](int) {
                       const HLPoly p = random_poly(r, 3), q = random_poly(r, 3), s = random_poly(r, 3);
                       return expect(psi(theta(p.inverted(), q.inverted(), s.inverted())) == psi(theta(p, q, s)).inverted(),
                                     to_string(p));
                     });
                   }},
                  {"psi output is S3 symmetric",
                   [](Rng& r) {
                     return repeat(30, [&](int) {
                       const TriVarElem v = psi(theta(random_poly(r, 3), random_poly(r, 3), random_poly(r, 3)));
                       return expect(check_symmetry(v), to_string(v));
                     });
                   }}}});

  out.push_back({"casson",
                 {{"Dedekind reciprocity for 1 <= q < p <= 50",
                   [](Rng&) -> Failure {
                     for (int p = 2; p <= 50; ++p) {
                       for (int q = 1; q < p; ++q) {
                         if (std::gcd(p, q) != 1) continue;
                         const Rational rhs = Rational(-1, 4) + (make_rational(p, q) + make_rational(q, p) + make_rational(1, p * q)) / 12;
                         if (dedekind_sum(q, p) + dedekind_sum(p, q) != rhs) return "p=" + std::to_string(p) + " q=" + std::to_string(q);
                       }
                     }
                     return std::nullopt;
                   }},
                  {"s(-q,p) = -s(q,p) and s(q+p,p) = s(q,p)",
                   [](Rng&) -> Failure {
                     for (int p = 1; p <= 50; ++p) {
                       for (int q = 1; q <= 50; ++q) {
                         if (std::gcd(p, q) != 1) continue;
                         if (dedekind_sum(-q, p) != -dedekind_sum(q, p) || dedekind_sum(q + p, p) != dedekind_sum(q, p)) {
                           return "p=" + std::to_string(p) + " q=" + std::to_string(q);
                         }
                       }
                     }
                     return std::nullopt;
                   }},
                  {"lambda of p = 1 lens spaces vanishes",
                   [](Rng&) -> Failure {
                     for (int q = 1; q <= 20; ++q) {
                       if (lambda_lens(SurgeryCoefficient(1, q)) != 0) return "q=" + std::to_string(q);
                     }
                     return std::nullopt;
                   }}}});

  out.push_back({"surgery-calculus",
                 {{"lambda_e_prime is symmetric",
                   [](Rng& r) {
                     return repeat(20, [&](int) {
                       SurgeryDatum d = random_datum(r);
                       for (auto* m : {&d.Laa, &d.Lab, &d.Lba, &d.Lbb}) {
                         for (auto& row : *m) {
                           for (auto& x : row) x = OneVarFrac(random_poly(r, 2));
                         }
                       }
                       return expect(check_symmetry(lambda_e_prime(d)), "genus " + std::to_string(d.genus));
                     });
                   }},
                  {"constant Seifert data gives Delta''(1)/2",
                   [](Rng&) -> Failure {
                     struct Case {
                       long s[4];
                       Rational expected;
                     };
                     // Trefoil and figure-eight Seifert matrices.
                     for (const Case& c : {Case{{-1, 1, 0, -1}, Rational(1)}, Case{{-1, 1, 0, 1}, Rational(-1)}}) {
                       SurgeryDatum d;
                       d.genus = 1;
                       d.Laa = {{OneVarFrac(Rational(c.s[0]))}};
                       d.Lab = {{OneVarFrac(Rational(c.s[1]))}};
                       d.Lba = {{OneVarFrac(Rational(c.s[2]))}};
                       d.Lbb = {{OneVarFrac(Rational(c.s[3]))}};
                       if (!(lambda_e_prime(d) == TriVarElem(c.expected))) return to_string(lambda_e_prime(d));
                     }
                     return std::nullopt;
                   }},
                  {"knot_change_delta is additive in V",
                   [](Rng& r) {
                     return repeat(6, [&](int) {
                       const AlexanderPair p = random_pair(r, 2);
                       auto anti = [&] {
                         const HLPoly h = random_poly(r, 3);
                         return FramedKnotChange(h - h.inverted());
                       };
                       const FramedKnotChange a = anti(), b = anti();
                       return expect(knot_change_delta(FramedKnotChange(a.V() + b.V()), p) ==
                                         knot_change_delta(a, p) + knot_change_delta(b, p),
                                     to_string(a.V()));
                     });
                   }},
                  {"evaluation at (1,1,1) is consistent for surgery",
                   [](Rng& r) {
                     return repeat(20, [&](int) {
                       const SurgeryDatum d = random_datum(r);
                       return expect(eval_at_111(surgery_delta(d)) ==
                                         6 * d.coefficient.q_over_p() * eval_at_111(lambda_e_prime(d)) + 6 * lambda_lens(d.coefficient),
                                     "p/q = " + std::to_string(d.coefficient.p()) + "/" + std::to_string(d.coefficient.q()));
                     });
                   }},
                  {"reduction modulo Q_k is linear and idempotent",
                   [](Rng& r) {
                     const HLPoly trefoil = HLPoly::t_pow(1) - HLPoly(1) + HLPoly::t_pow(-1);
                     const AlexanderPair p(trefoil, trefoil);
                     const QkReducer red(p, 4, {-12, 12});
                     return repeat(8, [&](int) {
                       const TriVarElem f = symmetrize(TriVarElem(BiLaurent::monomial(uniform(r, -2, 2), uniform(r, -2, 2), small_rational(r))));
                       const TriVarElem g = q_k(p, uniform(r, 1, 4)) * TriVarElem(small_rational(r));
                       const Rational c = small_rational(r);
                       const TriVarElem rf = red.reduce(f).representative;
                       return expect(red.reduce(rf).representative == rf &&
                                         red.reduce(f * TriVarElem(c) + g).representative == rf * TriVarElem(c),
                                     to_string(f));
                     });
                   }},
                  {"pipeline is independent of the order of connected sums",
                   [](Rng& r) {
                     return repeat(10, [&](int) {
                       Manifest m;
                       m.initial = random_pair(r, 2);
                       for (int i = 0; i < 4; ++i) m.moves.push_back(ConnectedSumMove{small_rational(r)});
                       m.moves.push_back(FramingMove{uniform(r, -2, 2)});
                       Manifest shuffled = m;
                       std::shuffle(shuffled.moves.begin(), shuffled.moves.end() - 1, r);
                       return expect(run_pipeline(m).Q == run_pipeline(shuffled).Q, "connected sums");
                     });
                   }}}});

  out.push_back({"cli-io",
                 {{"report Q round-trips through JSON",
                   [](Rng& r) {
                     return repeat(10, [&](int) {
                       Manifest m;
                       m.initial = random_pair(r, 2);
                       m.moves.push_back(FramingMove{uniform(r, 1, 2)});
                       m.moves.push_back(ConnectedSumMove{small_rational(r)});
                       const Report rep = run_pipeline(m);
                       const Json j = parse_json_text(encode(rep).dump());
                       return expect(decode_trivar(j["Q"]) == rep.Q, to_string(rep.Q));
                     });
                   }},
                  {"identical manifests give identical reports",
                   [](Rng& r) {
                     return repeat(5, [&](int) {
                       Manifest m;
                       m.initial = random_pair(r, 2);
                       m.moves.push_back(FramingMove{1});
                       return expect(encode(run_pipeline(m)).dump(2) == encode(run_pipeline(m)).dump(2), "report bytes");
                     });
                   }}}});
  return out;
}

}  // namespace

std::vector<CheckResult> run_self_check(std::uint64_t seed) {
  std::vector<CheckResult> results;
  Rng rng(seed);
  for (const auto& suite : suites()) {
    for (const auto& [name, check] : suite.checks) {
      CheckResult res{suite.name, name, false, {}, 0};
      const auto start = std::chrono::steady_clock::now();
      try {
        const Failure f = check(rng);
        res.passed = !f;
        if (f) res.detail = *f;
      } catch (const std::exception& e) {
        res.detail = e.what();
      }
      res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results.push_back(std::move(res));
    }
  }
  return results;
}

}  // namespace eqcube
