#include "eqcube/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "eqcube/alexander.hpp"
#include "eqcube/error.hpp"

namespace eqcube {

namespace {

int half_edge_vertex(const MonGraph& g, int h) {
  const DiagramEdge& e = g.edges[h / 2];
  return h % 2 == 0 ? e.tail : e.head;
}

// +1 if (c0, c1, c2) is a rotation of its ascending sort, -1 otherwise.
int cyclic_parity(const std::array<int, 3>& c) {
  const bool even = (c[0] < c[1] && c[1] < c[2]) || (c[1] < c[2] && c[2] < c[0]) || (c[2] < c[0] && c[0] < c[1]);
  return even ? 1 : -1;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

using EdgeKey = std::array<int, 4>;  // (tail, head, a, b)

// One relabeled, reoriented and gauge-fixed copy of the input graph.
struct Labeling {
  std::vector<EdgeKey> keys;     // sorted
  std::vector<int> position;     // original edge -> index in keys
  std::vector<bool> reversed;    // original edge reversed?
  bool zero_loop = false;        // some loop has exponent 0
};

Labeling label(const MonGraph& g, const std::vector<int>& perm) {
  const int nv = g.vertices;
  const int ne = static_cast<int>(g.edges.size());
  Labeling out;
  out.reversed.assign(ne, false);

  std::vector<EdgeKey> oriented(ne);
  for (int e = 0; e < ne; ++e) {
    const DiagramEdge& d = g.edges[e];
    int u = perm[d.tail];
    int v = perm[d.head];
    int a = d.a;
    if (u > v) {
      std::swap(u, v);
      a = -a;
      out.reversed[e] = true;
    }
    oriented[e] = {u, v, a, d.b};
  }

  // Gauge: spanning forest over the distinct vertex pairs in sorted order;
  // along a tree pair the smallest parallel exponent is moved to 0.
  std::map<std::pair<int, int>, int> min_exp;
  for (const auto& k : oriented) {
    if (k[0] == k[1]) continue;
    auto [it, inserted] = min_exp.try_emplace({k[0], k[1]}, k[2]);
    if (!inserted) it->second = std::min(it->second, k[2]);
  }
  Dsu dsu(nv);
  std::vector<std::vector<std::pair<int, int>>> tree(nv);  // (neighbor, pair min exponent seen from u<v)
  for (const auto& [pair, m] : min_exp) {
    if (dsu.unite(pair.first, pair.second)) {
      tree[pair.first].push_back({pair.second, m});
      tree[pair.second].push_back({pair.first, m});
    }
  }
  std::vector<int> pot(nv, 0);
  std::vector<bool> seen(nv, false);
  for (int root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [w, m] : tree[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        // exponent of an edge lo->hi becomes a + pot[hi] - pot[lo]; make the
        // pair minimum vanish.
        pot[w] = u < w ? pot[u] - m : pot[u] + m;
        stack.push_back(w);
      }
    }
  }
  for (int e = 0; e < ne; ++e) {
    auto& k = oriented[e];
    if (k[0] == k[1]) {
      if (k[2] < 0) {
        k[2] = -k[2];
        out.reversed[e] = !out.reversed[e];
      } else if (k[2] == 0) {
        out.zero_loop = true;
      }
    } else {
      k[2] += pot[k[1]] - pot[k[0]];
    }
  }

  std::vector<int> idx(ne);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return oriented[x] < oriented[y]; });
  out.keys.resize(ne);
  out.position.resize(ne);
  for (int i = 0; i < ne; ++i) {
    out.keys[i] = oriented[idx[i]];
    out.position[idx[i]] = i;
  }
  return out;
}

int labeling_sign(const MonGraph& g, const std::vector<int>& perm, const Labeling& lab) {
  int sign = 1;
  for (int v = 0; v < g.vertices; ++v) {
    std::array<int, 3> mapped{};
    for (int j = 0; j < 3; ++j) {
      const int h = g.orders[v][j];
      const int e = h / 2;
      const int end = (h % 2) ^ (lab.reversed[e] ? 1 : 0);
      mapped[j] = 2 * lab.position[e] + end;
    }
    sign *= cyclic_parity(mapped);
  }
  (void)perm;
  return sign;
}

MonGraph graph_from_keys(int vertices, const std::vector<EdgeKey>& keys) {
  MonGraph g;
  g.vertices = vertices;
  g.edges.reserve(keys.size());
  std::vector<std::vector<int>> at(vertices);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto& k = keys[i];
    g.edges.push_back({k[0], k[1], k[2], k[3]});
    at[k[0]].push_back(static_cast<int>(2 * i));
    at[k[1]].push_back(static_cast<int>(2 * i + 1));
  }
  g.orders.resize(vertices);
  for (int v = 0; v < vertices; ++v) {
    std::sort(at[v].begin(), at[v].end());
    g.orders[v] = {at[v][0], at[v][1], at[v][2]};
  }
  return g;
}

}  // namespace

void validate(const MonGraph& g) {
  if (g.vertices < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex count");
  if (static_cast<int>(g.orders.size()) != g.vertices) {
    throw Error(ErrorCode::InvalidGraph, "expected one cyclic order per vertex");
  }
  if (2 * g.edges.size() != 3 * static_cast<std::size_t>(g.vertices)) {
    throw Error(ErrorCode::InvalidGraph, "a trivalent graph with " + std::to_string(g.vertices) + " vertices has " +
                                             std::to_string(3 * g.vertices / 2) + " edges");
  }
  for (const auto& e : g.edges) {
    if (e.tail < 0 || e.tail >= g.vertices || e.head < 0 || e.head >= g.vertices) {
      throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    }
    if (e.b < 0) throw Error(ErrorCode::InvalidGraph, "negative delta power");
  }
  std::vector<int> seen(2 * g.edges.size(), 0);
  for (int v = 0; v < g.vertices; ++v) {
    for (int h : g.orders[v]) {
      if (h < 0 || h >= static_cast<int>(seen.size())) throw Error(ErrorCode::InvalidGraph, "half-edge index out of range");
      if (seen[h]++) throw Error(ErrorCode::InvalidGraph, "half-edge " + std::to_string(h) + " listed twice");
      if (half_edge_vertex(g, h) != v) {
        throw Error(ErrorCode::InvalidGraph, "half-edge " + std::to_string(h) + " listed at vertex " + std::to_string(v) +
                                                 " but the edge list attaches it elsewhere");
      }
    }
  }
}

CanonicalForm canonicalize(const MonGraph& g) {
  validate(g);
  std::vector<int> perm(g.vertices);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<EdgeKey> best;
  int best_sign = 0;
  bool first = true;
  bool vanishes = false;
  do {
    Labeling lab = label(g, perm);
    if (lab.zero_loop) vanishes = true;
    if (first || lab.keys < best) {
      best = std::move(lab.keys);
      best_sign = labeling_sign(g, perm, lab);
      first = false;
    } else if (lab.keys == best && labeling_sign(g, perm, lab) != best_sign) {
      vanishes = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {graph_from_keys(g.vertices, best), vanishes ? 0 : best_sign};
}

// ------------------------------------------------------------------- beads

Bead Bead::from_fraction(const OneVarFrac& f, const HLPoly& delta) {
  if (delta.is_zero()) throw Error(ErrorCode::BadBead, "zero delta");
  const int den_span = f.den().is_zero() ? 0 : f.den().max_doubled() - f.den().min_doubled();
  const int delta_span = delta.max_doubled() - delta.min_doubled();
  const int limit = delta_span == 0 ? 0 : den_span / delta_span + 1;
  OneVarFrac scaled = f;
  for (int b = 0; b <= limit; ++b) {
    if (scaled.is_polynomial() && scaled.num().integral_exponents()) return Bead(scaled.num(), b);
    scaled *= OneVarFrac(delta);
  }
  throw Error(ErrorCode::BadBead, to_string(f) + " is not in Q[t^{±1}, 1/delta]");
}

// ---------------------------------------------------------- DiagramVector

void DiagramVector::add_canonical(const MonGraph& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void DiagramVector::add(const MonGraph& g, const Rational& c) {
  if (c == 0) return;
  CanonicalForm cf = canonicalize(g);
  if (cf.sign == 0) return;
  add_canonical(cf.graph, cf.sign > 0 ? c : Rational(-c));
}

DiagramVector DiagramVector::operator-() const {
  DiagramVector r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

DiagramVector& DiagramVector::operator+=(const DiagramVector& o) {
  for (const auto& [g, c] : o.terms_) add_canonical(g, c);
  return *this;
}

DiagramVector& DiagramVector::operator-=(const DiagramVector& o) {
  for (const auto& [g, c] : o.terms_) add_canonical(g, -c);
  return *this;
}

DiagramVector& DiagramVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

DiagramVector build_diagram(const MonGraph& shape, std::span<const Bead> beads) {
  validate(shape);
  if (beads.size() != shape.edges.size()) {
    throw Error(ErrorCode::BadBead, "expected " + std::to_string(shape.edges.size()) + " beads, got " + std::to_string(beads.size()));
  }
  for (const auto& bead : beads) {
    if (!bead.numerator.integral_exponents()) {
      throw Error(ErrorCode::BadBead, "bead numerator " + to_string(bead.numerator) + " has half-integer exponents");
    }
    if (bead.delta_power < 0) throw Error(ErrorCode::BadBead, "negative delta power");
  }
  DiagramVector out;
  MonGraph work = shape;
  std::function<void(std::size_t, const Rational&)> expand = [&](std::size_t e, const Rational& coeff) {
    if (e == beads.size()) {
      out.add(work, coeff);
      return;
    }
    const DiagramEdge saved = work.edges[e];
    for (const auto& [k, c] : beads[e].numerator.terms()) {
      work.edges[e].a = saved.a + k / 2;
      work.edges[e].b = saved.b + beads[e].delta_power;
      expand(e + 1, coeff * c);
    }
    work.edges[e] = saved;
  };
  expand(0, Rational(1));
  return out;
}

MonGraph theta_shape() {
  MonGraph g;
  g.vertices = 2;
  g.edges = {{0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}};
  // Counterclockwise in the planar picture: tails (P, R, Q), heads (P, Q, R).
  g.orders = {{0, 4, 2}, {1, 3, 5}};
  return g;
}

MonGraph dumbbell_shape() {
  MonGraph g;
  g.vertices = 2;
  g.edges = {{0, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 0, 0}};
  g.orders = {{4, 0, 1}, {3, 5, 2}};
  return g;
}

DiagramVector theta(const Bead& p, const Bead& q, const Bead& r) {
  const std::array<Bead, 3> beads{p, q, r};
  return build_diagram(theta_shape(), beads);
}

DiagramVector dumbbell(const Bead& p, const Bead& q) {
  const std::array<Bead, 3> beads{p, q, Bead()};
  return build_diagram(dumbbell_shape(), beads);
}

// --------------------------------------------------------------------- psi

TriVarElem theta_weight(const OneVarFrac& p, const OneVarFrac& q, const OneVarFrac& r) {
  const TriVarElem term = embed(p, Slot::X) * embed(q, Slot::Y) * embed(r, Slot::Z);
  return symmetrize(term + term.inverted());
}

namespace {

// Value of theta_weight on a canonical theta with monomial beads.
TriVarElem monomial_theta_weight(const MonGraph& g, const HLPoly& delta) {
  const auto& e = g.edges;
  const bool half = !delta.integral_exponents();
  int xe = e[0].a - e[2].a;
  int ye = e[1].a - e[2].a;
  if (half) {
    // delta(t)^{-b} = t^{b/2} D(t)^{-b} with D = t^{1/2} delta integral.
    if ((e[0].b - e[2].b) % 2 != 0 || (e[1].b - e[2].b) % 2 != 0) {
      throw Error(ErrorCode::HalfPowerResidue, "theta beads leave an uncancelled half power of delta");
    }
    xe += (e[0].b - e[2].b) / 2;
    ye += (e[1].b - e[2].b) / 2;
  }
  TriVarElem term(BiLaurent::monomial(xe, ye));
  if (e[0].b + e[1].b + e[2].b > 0) {
    const OneVarFrac d(integral_delta(delta));
    const std::array<Slot, 3> slots{Slot::X, Slot::Y, Slot::Z};
    for (int i = 0; i < 3; ++i) {
      if (e[i].b == 0) continue;
      const TriVarElem dv = embed(d, slots[i]);
      TriVarElem power(1);
      for (int k = 0; k < e[i].b; ++k) power *= dv;
      term = term / power;
    }
  }
  return symmetrize(term + term.inverted());
}

bool is_theta(const MonGraph& g) {
  return g.vertices == 2 && g.edges.size() == 3 &&
         std::none_of(g.edges.begin(), g.edges.end(), [](const DiagramEdge& e) { return e.is_loop(); });
}

}  // namespace

TriVarElem psi(const DiagramVector& v, const HLPoly& delta) {
  TriVarElem total;
  for (const auto& [g, c] : v.terms()) {
    if (!is_theta(g)) throw Error(ErrorCode::NonThetaSupport, "psi is only defined on theta graphs; got " + to_string(g));
    // Planar theta has opposite edge cyclic orders at its two vertices.
    std::array<int, 3> at0{};
    std::array<int, 3> at1{};
    for (int j = 0; j < 3; ++j) {
      at0[j] = g.orders[0][j] / 2;
      at1[j] = g.orders[1][j] / 2;
    }
    const int orientation = cyclic_parity(at0) == cyclic_parity(at1) ? -1 : 1;
    total += monomial_theta_weight(g, delta) * TriVarElem(orientation * c);
  }
  return total;
}

// --------------------------------------------------------------------- IHX

std::array<MonGraph, 3> ihx_terms(const MonGraph& g, int edge) {
  validate(g);
  if (edge < 0 || edge >= static_cast<int>(g.edges.size())) throw Error(ErrorCode::InvalidGraph, "edge index out of range");
  const DiagramEdge& chosen = g.edges[edge];
  if (chosen.is_loop()) throw Error(ErrorCode::InvalidGraph, "IHX needs an edge joining two distinct vertices");
  if (chosen.b != 0) throw Error(ErrorCode::InvalidGraph, "IHX needs an edge without delta powers");

  MonGraph t1 = g;
  // Gauge at the head so that the chosen edge carries bead 1.
  const int shift = -chosen.a;
  const int hv = chosen.head;
  for (auto& e : t1.edges) {
    if (e.is_loop()) continue;
    if (e.head == hv) e.a += shift;
    if (e.tail == hv) e.a -= shift;
  }

  const int va = chosen.tail;
  const int vb = chosen.head;
  const int ha = 2 * edge;
  const int hb = 2 * edge + 1;
  auto rotate_to = [](std::array<int, 3> o, int h, int pos) {
    while (o[pos] != h) std::rotate(o.begin(), o.begin() + 1, o.end());
    return o;
  };
  const auto oa = rotate_to(t1.orders[va], ha, 2);  // (h1, h2, e)
  const auto ob = rotate_to(t1.orders[vb], hb, 0);  // (e, h3, h4)
  const int h1 = oa[0], h2 = oa[1], h3 = ob[1], h4 = ob[2];

  auto build = [&](std::array<int, 2> at_a, std::array<int, 2> at_b) {
    MonGraph t = t1;
    t.orders[va] = {at_a[0], at_a[1], ha};
    t.orders[vb] = {hb, at_b[0], at_b[1]};
    for (int h : at_a) (h % 2 == 0 ? t.edges[h / 2].tail : t.edges[h / 2].head) = va;
    for (int h : at_b) (h % 2 == 0 ? t.edges[h / 2].tail : t.edges[h / 2].head) = vb;
    return t;
  };
  t1.orders[va] = oa;
  t1.orders[vb] = ob;
  return {t1, build({h2, h3}, {h1, h4}), build({h3, h1}, {h2, h4})};
}

namespace {

// Underlying trivalent multigraphs (loops allowed) on v labeled vertices,
// as sorted lists of vertex pairs.
void shapes_rec(int v, std::vector<int>& degree, std::vector<std::pair<int, int>>& current, int last_u, int last_w,
                std::vector<std::vector<std::pair<int, int>>>& out) {
  int u = 0;
  while (u < v && degree[u] == 3) ++u;
  if (u == v) {
    out.push_back(current);
    return;
  }
  // Vertex u is the smallest unsaturated vertex; every remaining edge at u
  // starts here, so enumerate its partner in nondecreasing order.
  for (int w = u; w < v; ++w) {
    if (std::pair(u, w) < std::pair(last_u, last_w)) continue;
    const int need = (w == u) ? 2 : 1;
    if (degree[u] + need > 3) continue;
    if (w != u && degree[w] + 1 > 3) continue;
    degree[u] += need;
    if (w != u) degree[w] += 1;
    current.push_back({u, w});
    shapes_rec(v, degree, current, u, w, out);
    current.pop_back();
    degree[u] -= need;
    if (w != u) degree[w] -= 1;
  }
}

std::vector<MonGraph> unique_shapes(int n) {
  const int v = 2 * n;
  std::vector<std::vector<std::pair<int, int>>> raw;
  std::vector<int> degree(v, 0);
  std::vector<std::pair<int, int>> current;
  shapes_rec(v, degree, current, -1, -1, raw);
  std::set<MonGraph> unique;
  for (const auto& pairs : raw) {
    std::vector<EdgeKey> keys;
    for (const auto& [a, b] : pairs) keys.push_back({a, b, 0, 0});
    unique.insert(canonicalize(graph_from_keys(v, keys)).graph);
  }
  return {unique.begin(), unique.end()};
}

}  // namespace

std::vector<MonGraph> window_graphs(const IhxWindow& w) {
  if (w.n < 1 || w.n > 3) throw Error(ErrorCode::WindowTooLarge, "IHX windows support 1 <= n <= 3");
  if (w.a_min > w.a_max || w.b_max < 0) return {};
  const auto shapes = unique_shapes(w.n);
  const std::size_t per_edge = static_cast<std::size_t>(w.a_max - w.a_min + 1) * static_cast<std::size_t>(w.b_max + 1);
  const std::size_t ne = 3 * static_cast<std::size_t>(w.n);
  long double raw = static_cast<long double>(shapes.size());
  for (std::size_t i = 0; i < ne; ++i) raw *= static_cast<long double>(per_edge);
  if (raw > static_cast<long double>(w.cap)) {
    throw Error(ErrorCode::WindowTooLarge, "window needs " + std::to_string(static_cast<double>(raw)) + " assignments, cap is " + std::to_string(w.cap));
  }
  std::set<MonGraph> out;
  for (const auto& shape : shapes) {
    MonGraph g = shape;
    std::function<void(std::size_t)> rec = [&](std::size_t e) {
      if (e == ne) {
        out.insert(canonicalize(g).graph);
        return;
      }
      for (int a = w.a_min; a <= w.a_max; ++a) {
        for (int b = 0; b <= w.b_max; ++b) {
          g.edges[e].a = a;
          g.edges[e].b = b;
          rec(e + 1);
        }
      }
    };
    rec(0);
  }
  return {out.begin(), out.end()};
}

std::vector<DiagramVector> ihx_relations(const IhxWindow& w) {
  std::set<DiagramVector::Terms> seen;
  std::vector<DiagramVector> out;
  for (const auto& g : window_graphs(w)) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      if (g.edges[e].is_loop() || g.edges[e].b != 0) continue;
      DiagramVector rel;
      for (const auto& t : ihx_terms(g, e)) rel.add(t);
      if (rel.is_zero()) continue;
      // Scale so the largest graph has coefficient 1.
      rel *= 1 / rel.terms().rbegin()->second;
      if (seen.insert(rel.terms()).second) out.push_back(std::move(rel));
    }
  }
  return out;
}

// ------------------------------------------------------------- enumeration

namespace {

bool connected(int nv, const std::vector<std::pair<int, int>>& edges) {
  Dsu dsu(nv);
  int components = nv;
  for (const auto& [u, v] : edges) {
    if (dsu.unite(u, v)) --components;
  }
  return components == 1;
}

}  // namespace

std::vector<LabeledGraph> enumerate_cs(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDatum, "n must be positive");
  if (n > 2) throw Error(ErrorCode::WindowTooLarge, "listing CS_n is limited to n <= 2; use count_cs");
  const int nv = 2 * n;
  const int ne = 3 * n;
  std::vector<LabeledGraph> out;
  std::vector<int> degree(nv, 0);
  std::vector<std::pair<int, int>> edges;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(edges.size()) == ne) {
      if (connected(nv, edges)) out.push_back({nv, edges});
      return;
    }
    for (int u = 0; u < nv; ++u) {
      if (degree[u] == 3) continue;
      for (int v = 0; v < nv; ++v) {
        if (v == u || degree[v] == 3) continue;
        ++degree[u];
        ++degree[v];
        edges.push_back({u, v});
        rec();
        edges.pop_back();
        --degree[u];
        --degree[v];
      }
    }
  };
  rec();
  return out;
}

Integer count_cs(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDatum, "n must be positive");
  if (n > 3) throw Error(ErrorCode::WindowTooLarge, "count_cs supports n <= 3");
  const int nv = 2 * n;
  const int ne = 3 * n;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) pairs.push_back({u, v});
  }
  Integer edge_factorial;
  mpz_fac_ui(edge_factorial.get_mpz_t(), ne);
  const Integer orientations = Integer(1) << ne;
  Integer total = 0;
  std::vector<int> degree(nv, 0);
  std::vector<int> mult(pairs.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pairs.size()) {
      if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 3; })) return;
      std::vector<std::pair<int, int>> edges;
      Integer denom = 1;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        for (int k = 0; k < mult[j]; ++k) edges.push_back(pairs[j]);
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), mult[j]);
        denom *= f;
      }
      if (connected(nv, edges)) total += edge_factorial * orientations / denom;
      return;
    }
    const auto [u, v] = pairs[i];
    for (int m = 0; degree[u] + m <= 3 && degree[v] + m <= 3; ++m) {
      mult[i] = m;
      degree[u] += m;
      degree[v] += m;
      rec(i + 1);
      degree[u] -= m;
      degree[v] -= m;
    }
    mult[i] = 0;
  };
  rec(0);
  return total;
}

Rational normalization_constant(int n) {
  Integer f3;
  Integer f2;
  mpz_fac_ui(f3.get_mpz_t(), 3 * n);
  mpz_fac_ui(f2.get_mpz_t(), 2 * n);
  Rational r(Integer(1), (Integer(1) << (3 * n)) * f3 * f2);
  r.canonicalize();
  return r;
}

// ------------------------------------------------------------------- moves

MonGraph reverse_edge(const MonGraph& g, int e) {
  MonGraph out = g;
  DiagramEdge& d = out.edges.at(e);
  std::swap(d.tail, d.head);
  d.a = -d.a;
  for (auto& o : out.orders) {
    for (int& h : o) {
      if (h / 2 == e) h ^= 1;
    }
  }
  return out;
}

MonGraph gauge_move(const MonGraph& g, int v, int n) {
  MonGraph out = g;
  for (auto& e : out.edges) {
    if (e.is_loop()) continue;
    if (e.head == v) e.a += n;
    if (e.tail == v) e.a -= n;
  }
  return out;
}

MonGraph relabel_vertices(const MonGraph& g, const std::vector<int>& perm) {
  MonGraph out = g;
  for (auto& e : out.edges) {
    e.tail = perm.at(e.tail);
    e.head = perm.at(e.head);
  }
  for (int v = 0; v < g.vertices; ++v) out.orders[perm.at(v)] = g.orders[v];
  return out;
}

MonGraph relabel_edges(const MonGraph& g, const std::vector<int>& perm) {
  MonGraph out = g;
  for (std::size_t e = 0; e < g.edges.size(); ++e) out.edges[perm.at(e)] = g.edges[e];
  for (auto& o : out.orders) {
    for (int& h : o) h = 2 * perm.at(h / 2) + h % 2;
  }
  return out;
}

MonGraph rotate_order(const MonGraph& g, int v) {
  MonGraph out = g;
  auto& o = out.orders.at(v);
  std::rotate(o.begin(), o.begin() + 1, o.end());
  return out;
}

MonGraph transpose_half_edges(const MonGraph& g, int v) {
  MonGraph out = g;
  auto& o = out.orders.at(v);
  std::swap(o[0], o[1]);
  return out;
}

std::string to_string(const MonGraph& g) {
  std::ostringstream out;
  out << "V=" << g.vertices << " E=[";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    out << (i ? " " : "") << "(" << e.tail << "->" << e.head << " a=" << e.a << " b=" << e.b << ")";
  }
  out << "] O=[";
  for (std::size_t v = 0; v < g.orders.size(); ++v) {
    const auto& o = g.orders[v];
    out << (v ? " " : "") << "(" << o[0] << "," << o[1] << "," << o[2] << ")";
  }
  out << "]";
  return out.str();
}

}  // namespace eqcube
