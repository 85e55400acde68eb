#include <benchmark/benchmark.h>

#include "isf/chromatic.hpp"
#include "isf/forest_enumeration.hpp"
#include "isf/local_injection.hpp"
#include "isf/subset_injection.hpp"

using namespace isf;

static void BM_EnumerateCompleteGraph(benchmark::State& st) {
  const OrderedGraph g = OrderedGraph::complete(static_cast<int>(st.range(0)));
  const int k = static_cast<int>(st.range(0)) / 2;
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_if(g, k));
}

static void BM_IsfPolynomial(benchmark::State& st) {
  const OrderedGraph g = OrderedGraph::complete(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(isf_polynomial(g));
}

static void BM_VerifyPsi(benchmark::State& st) {
  const OrderedGraph g = OrderedGraph::complete(static_cast<int>(st.range(0)));
  std::uint64_t pairs = 0;
  for (auto _ : st) {
    const PsiVerification v = verify_psi(g, 2, 3);
    pairs += v.total_pairs;
    benchmark::DoNotOptimize(v);
  }
  st.SetItemsProcessed(static_cast<int64_t>(pairs));
}

static void BM_LogConcavity(benchmark::State& st) {
  const OrderedGraph g = OrderedGraph::complete(static_cast<int>(st.range(0)));
  const TPoly isf = isf_polynomial(g);
  const int p = static_cast<int>(st.range(0)) / 2;
  for (auto _ : st) benchmark::DoNotOptimize(strong_logconcavity_check(isf, p, p));
}

static void BM_Phi(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  std::vector<int> elements(m);
  for (int i = 0; i < m; ++i) elements[i] = i + 1;
  const GroundSet ground(elements);
  const Subset x(elements.begin(), elements.begin() + (m - 1) / 2);
  for (auto _ : st) benchmark::DoNotOptimize(phi(ground, x));
}

static void BM_ChromaticPolynomial(benchmark::State& st) {
  // Wheel: hub 1 joined to a cycle on 2..n.
  const int n = static_cast<int>(st.range(0));
  EdgeList edges;
  for (int v = 2; v <= n; ++v) edges.push_back({1, v});
  for (int v = 2; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({2, n});
  const OrderedGraph g(n, edges);
  for (auto _ : st) benchmark::DoNotOptimize(chromatic_polynomial(g));
}

static void BM_MovableSearch(benchmark::State& st) {
  const OrderedGraph g(4, {{1, 4}, {2, 4}, {2, 3}, {3, 4}});
  for (auto _ : st) benchmark::DoNotOptimize(movable_edge_search(g));
}

BENCHMARK(BM_EnumerateCompleteGraph)->DenseRange(4, 7);
BENCHMARK(BM_IsfPolynomial)->DenseRange(4, 8, 2);
BENCHMARK(BM_VerifyPsi)->DenseRange(4, 6);
BENCHMARK(BM_LogConcavity)->DenseRange(4, 6);
BENCHMARK(BM_Phi)->Arg(16)->Arg(256)->Arg(4096);
BENCHMARK(BM_ChromaticPolynomial)->DenseRange(5, 11, 2);
BENCHMARK(BM_MovableSearch);
BENCHMARK_MAIN();
