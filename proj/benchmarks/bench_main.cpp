#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "estrada/estrada.hpp"

namespace {

using namespace estrada;

Graph dense_random(std::size_t n) { return erdos_renyi_graph(n, 0.2, 17); }

// Random edges on top of a Hamiltonian path, so the bound table applies.
Graph connected_random(std::size_t n) {
  auto edges = erdos_renyi_graph(n, 0.2, 17).edges();
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

SymNonnegMatrix random_matrix(std::size_t ell) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> a(ell * ell);
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t j = 0; j <= i; ++j) a[i * ell + j] = a[j * ell + i] = unit(rng);
  return SymNonnegMatrix::from_dense(ell, a);
}

void BM_Eigenvalues(benchmark::State& state) {
  const auto r = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(r));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_PowerRadius(benchmark::State& state) {
  const auto r = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(power_radius(r));
}
BENCHMARK(BM_PowerRadius)->RangeMultiplier(2)->Range(8, 256);

void BM_GammaSequence(benchmark::State& state) {
  const auto g = dense_random(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_sequence(g));
}
BENCHMARK(BM_GammaSequence)->RangeMultiplier(4)->Range(16, 4096);

void BM_PathGammaSequence(benchmark::State& state) {
  // Slow convergence: spectral gap shrinks like 1/n^2.
  const auto g = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_sequence(g));
}
BENCHMARK(BM_PathGammaSequence)->Arg(16)->Arg(64)->Arg(256);

void BM_KDegrees(benchmark::State& state) {
  const auto g = dense_random(1024);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_degrees(g, k));
}
BENCHMARK(BM_KDegrees)->Arg(2)->Arg(8)->Arg(32);

void BM_TriangleCount(benchmark::State& state) {
  const auto g = dense_random(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(triangle_count(g));
}
BENCHMARK(BM_TriangleCount)->RangeMultiplier(4)->Range(64, 1024);

void BM_BoundTableGraph(benchmark::State& state) {
  const auto g = connected_random(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bound_table_graph(g));
}
BENCHMARK(BM_BoundTableGraph)->RangeMultiplier(2)->Range(16, 128);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const auto g = dense_random(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(to_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
