#include <benchmark/benchmark.h>

#include "pgtk/decomp.hh"
#include "pgtk/generate.hh"
#include "pgtk/simgame.hh"
#include "pgtk/solve.hh"
#include "pgtk/solvers.hh"

namespace {

pgtk::GeneratedInstance instance(int n, int k, int d, std::uint64_t seed) {
  return pgtk::generate_game(n, k, d, seed);
}

void BM_Zielonka(benchmark::State& state) {
  auto inst = instance(static_cast<int>(state.range(0)), 3, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(pgtk::solve_zielonka(inst.game));
}
BENCHMARK(BM_Zielonka)->Arg(16)->Arg(64)->Arg(256);

void BM_SimulationOneBag(benchmark::State& state) {
  auto inst = instance(static_cast<int>(state.range(0)), 2, 2, 11);
  std::vector<int> all(inst.game.size());
  for (int v = 0; v < inst.game.size(); ++v) all[v] = v;
  pgtk::OneBagPolicy pol;
  for (auto _ : state)
    benchmark::DoNotOptimize(pgtk::solve_simulation(inst.game, all, 0, pol));
}
BENCHMARK(BM_SimulationOneBag)->Arg(5)->Arg(7);

void BM_TreewidthSolver(benchmark::State& state) {
  auto inst = instance(static_cast<int>(state.range(0)), 2, 2, 13);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pgtk::solve_treewidth(inst.game, inst.decomposition, 0));
}
BENCHMARK(BM_TreewidthSolver)->Arg(6)->Arg(9);

void BM_HeuristicDecomposition(benchmark::State& state) {
  auto inst = instance(static_cast<int>(state.range(0)), 3, 4, 17);
  for (auto _ : state)
    benchmark::DoNotOptimize(pgtk::build_tree_decomposition_heuristic(inst.game));
}
BENCHMARK(BM_HeuristicDecomposition)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
