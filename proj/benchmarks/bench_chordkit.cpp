#include <benchmark/benchmark.h>

#include "chordkit/elimination.hpp"
#include "chordkit/exact.hpp"
#include "chordkit/families.hpp"
#include "chordkit/safe_edges.hpp"
#include "chordkit/separators.hpp"

using namespace chordkit;

namespace {

Graph grid(int rows, int cols) { return generate(FamilySpec::grid(rows, cols)); }

void BM_ExactMfiGrid(benchmark::State& state) {
  const Graph g = grid(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_mfi(g).value);
  state.SetLabel("4x" + std::to_string(state.range(0)));
}
BENCHMARK(BM_ExactMfiGrid)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ExactTwRook(benchmark::State& state) {
  const Graph g = generate(FamilySpec::rook(4, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(exact_tw(g).value);
}
BENCHMARK(BM_ExactTwRook)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_TauPhi(benchmark::State& state) {
  const Graph g = generate(FamilySpec::rook(4, 4));
  SolverOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_tau_phi(g, opts).tau);
}
BENCHMARK(BM_TauPhi)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ApplyOrdering(benchmark::State& state) {
  const RecipeOrdering r = recipe_ordering(FamilySpec::rook(4, static_cast<int>(state.range(0))));
  const Graph g = generate(r.spec);
  for (auto _ : state) benchmark::DoNotOptimize(apply_ordering(g, r.ordering).total_fill);
}
BENCHMARK(BM_ApplyOrdering)->Arg(4)->Arg(8)->Arg(16);

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(4)->Arg(6)->Arg(8);

void BM_Reduce(benchmark::State& state) {
  const Graph g = grid(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g).total_fill_added);
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
