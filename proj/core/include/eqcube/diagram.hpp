#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqcube/hlpoly.hpp"
#include "eqcube/one_var_frac.hpp"
#include "eqcube/rational.hpp"
#include "eqcube/tri_var.hpp"

namespace eqcube {

/// Oriented edge carrying the bead t^a * delta(t)^{-b}.
struct DiagramEdge {
  int tail = 0;
  int head = 0;
  int a = 0;
  int b = 0;

  bool is_loop() const { return tail == head; }
  friend auto operator<=>(const DiagramEdge&, const DiagramEdge&) = default;
};

/// Monomial-beaded oriented trivalent graph.
///
/// Half-edge 2e is the tail end of edge e and 2e + 1 its head end. orders[v]
/// lists the three half-edges at v in the cyclic order of the vertex
/// orientation. Loops and multiple edges are allowed.
struct MonGraph {
  int vertices = 0;
  std::vector<DiagramEdge> edges;
  std::vector<std::array<int, 3>> orders;

  friend auto operator<=>(const MonGraph&, const MonGraph&) = default;
};

/// Throws Error{InvalidGraph} unless every vertex carries exactly the three
/// half-edges that the edge list attaches to it and b >= 0 everywhere.
void validate(const MonGraph& g);

/// Canonical representative under edge reversal (relation 1), the gauge
/// action of relation 3, vertex and edge relabeling and rotation of cyclic
/// orders. g = sign * graph in the diagram space. sign is 0 when g vanishes
/// by AS, i.e. g admits an automorphism reversing an odd number of vertex
/// orientations.
struct CanonicalForm {
  MonGraph graph;
  int sign = 1;
};
CanonicalForm canonicalize(const MonGraph& g);

/// numerator * delta^{-delta_power}, numerator in Q[t^{±1}].
struct Bead {
  HLPoly numerator;
  int delta_power = 0;

  Bead() : numerator(1) {}
  Bead(HLPoly p, int b = 0) : numerator(std::move(p)), delta_power(b) {}  // NOLINT(google-explicit-constructor)

  /// Writes f as P * delta^{-b} with b minimal. Throws Error{BadBead} when f
  /// is not in Q[t^{±1}, 1/delta].
  static Bead from_fraction(const OneVarFrac& f, const HLPoly& delta);
};

/// Q-linear combination of canonical MonGraphs.
class DiagramVector {
 public:
  using Terms = std::map<MonGraph, Rational>;

  DiagramVector() = default;

  /// Adds c * g after canonicalizing g.
  void add(const MonGraph& g, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  DiagramVector operator-() const;
  DiagramVector& operator+=(const DiagramVector& o);
  DiagramVector& operator-=(const DiagramVector& o);
  DiagramVector& operator*=(const Rational& c);
  friend DiagramVector operator+(DiagramVector a, const DiagramVector& b) { return a += b; }
  friend DiagramVector operator-(DiagramVector a, const DiagramVector& b) { return a -= b; }
  friend DiagramVector operator*(DiagramVector a, const Rational& c) { return a *= c; }

  friend bool operator==(const DiagramVector&, const DiagramVector&) = default;

 private:
  void add_canonical(const MonGraph& g, const Rational& c);
  Terms terms_;
};

/// Expands the beads (one per edge, multiplied into the edge's existing
/// monomial) by linearity and canonicalizes every resulting graph.
/// Throws Error{BadBead} on a bead with half-integer exponents or negative
/// delta power.
DiagramVector build_diagram(const MonGraph& shape, std::span<const Bead> beads);

/// Theta graph: three edges from vertex 0 to vertex 1 carrying P, Q, R, with
/// the vertex orientation of the standard planar picture (P above, Q in the
/// middle, R below, counterclockwise orientation at both vertices).
MonGraph theta_shape();
/// Dumbbell: loop 0 at vertex 0 (bead P), loop 1 at vertex 1 (bead Q) and
/// the bridge 2 from vertex 0 to vertex 1 (bead 1).
MonGraph dumbbell_shape();
DiagramVector theta(const Bead& p, const Bead& q, const Bead& r);
DiagramVector dumbbell(const Bead& p, const Bead& q);

/// sum_{S3(x,y,z)} (P(x) Q(y) R(z) + P(x^{-1}) Q(y^{-1}) R(z^{-1})) for
/// Laurent or rational beads with integer exponents.
TriVarElem theta_weight(const OneVarFrac& p, const OneVarFrac& q, const OneVarFrac& r);

/// Linear extension of theta_weight to A_1^h(delta). Throws
/// Error{NonThetaSupport} if a non-theta graph has nonzero coefficient.
TriVarElem psi(const DiagramVector& v, const HLPoly& delta = HLPoly(1));

/// The three IHX terms (T1 = g after gauging the chosen edge's exponent to
/// 0, T2, T3) around a non-loop edge with b = 0, such that
/// T1 + T2 + T3 = 0 in the diagram space.
std::array<MonGraph, 3> ihx_terms(const MonGraph& g, int edge);

struct IhxWindow {
  int n = 1;
  int a_min = 0;
  int a_max = 0;
  int b_max = 0;
  std::size_t cap = 200000;  // bound on raw (shape, bead) assignments
};

/// Every canonical graph with 2n vertices and edge exponents in
/// [a_min, a_max], delta powers in [0, b_max]. Throws Error{WindowTooLarge}
/// when the raw assignment count exceeds the cap.
std::vector<MonGraph> window_graphs(const IhxWindow& w);

/// Nonzero IHX relations around every bead-1 edge of the window graphs,
/// deduplicated up to scaling. An empty window yields an empty list.
std::vector<DiagramVector> ihx_relations(const IhxWindow& w);

/// Graph with 2n numbered vertices and 3n numbered oriented edges
/// (0-based here; printed 1-based).
struct LabeledGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (tail, head)

  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;
};

/// All connected loopless trivalent labeled graphs of size n in
/// lexicographic order. Listing is limited to n <= 2; larger n throws
/// Error{WindowTooLarge} (use count_cs).
std::vector<LabeledGraph> enumerate_cs(int n);

/// |CS_n| for n <= 3, summed over multiplicity patterns of labeled
/// multigraphs.
Integer count_cs(int n);

/// 1 / (2^{3n} (3n)! (2n)!)
Rational normalization_constant(int n);

// Elementary moves. All of them preserve the class of g in the diagram
// space except transpose_half_edges, which negates it.

/// Relation 1 on edge e: swap its ends and negate its exponent.
MonGraph reverse_edge(const MonGraph& g, int e);
/// Relation 3 applied n times at vertex v (n may be negative).
MonGraph gauge_move(const MonGraph& g, int v, int n);
/// Vertex v becomes perm[v].
MonGraph relabel_vertices(const MonGraph& g, const std::vector<int>& perm);
/// Edge e becomes perm[e].
MonGraph relabel_edges(const MonGraph& g, const std::vector<int>& perm);
/// Cyclic rotation of the order at v.
MonGraph rotate_order(const MonGraph& g, int v);
/// Swaps the first two half-edges at v, reversing the vertex orientation.
MonGraph transpose_half_edges(const MonGraph& g, int v);

std::string to_string(const MonGraph& g);

}  // namespace eqcube
