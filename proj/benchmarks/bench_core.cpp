#include <benchmark/benchmark.h>

#include "eqcube/diagram.hpp"
#include "eqcube/surgery.hpp"
#include "eqcube/tri_var.hpp"

namespace {

using namespace eqcube;

const HLPoly kTrefoil = HLPoly::t_pow(1) - HLPoly(1) + HLPoly::t_pow(-1);

// Theta-like graph on 2n vertices: a cycle with chords, beads varying by edge.
MonGraph ladder(int n) {
  MonGraph g;
  g.vertices = 2 * n;
  std::vector<std::vector<int>> at(g.vertices);
  auto add = [&](int u, int v, int a) {
    const int e = static_cast<int>(g.edges.size());
    g.edges.push_back({u, v, a, e % 2});
    at[u].push_back(2 * e);
    at[v].push_back(2 * e + 1);
  };
  for (int v = 0; v < g.vertices; ++v) add(v, (v + 1) % g.vertices, v - n);
  for (int v = 0; v < n; ++v) add(v, v + n, v + 1);
  for (auto& a : at) g.orders.push_back({a[0], a[1], a[2]});
  return g;
}

void BM_Canonicalize(benchmark::State& state) {
  const MonGraph g = ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(g));
}
BENCHMARK(BM_Canonicalize)->Arg(1)->Arg(2)->Arg(3);

void BM_Symmetrize(benchmark::State& state) {
  const TriVarElem f(BiLaurent::monomial(2, -1, 3) + BiLaurent(1), BiLaurent::monomial(1, 0) - BiLaurent::monomial(0, 2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(f));
}
BENCHMARK(BM_Symmetrize);

void BM_Qk(benchmark::State& state) {
  const AlexanderPair pair(kTrefoil, kTrefoil);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_k(pair, k));
}
BENCHMARK(BM_Qk)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ReduceModQk(benchmark::State& state) {
  const AlexanderPair pair(kTrefoil, kTrefoil);
  const QkReducer reducer(pair, 10, DegreeWindow{});
  const TriVarElem f = TriVarElem(Rational(6)) + q_k(pair, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reducer.reduce(f));
}
BENCHMARK(BM_ReduceModQk)->Unit(benchmark::kMillisecond);

void BM_BuildReducer(benchmark::State& state) {
  const AlexanderPair pair(kTrefoil, kTrefoil);
  for (auto _ : state) benchmark::DoNotOptimize(QkReducer(pair, 10, DegreeWindow{}));
}
BENCHMARK(BM_BuildReducer)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
