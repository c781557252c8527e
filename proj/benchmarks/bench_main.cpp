#include <benchmark/benchmark.h>

#include "cyclefactor/generators.hpp"
#include "cyclefactor/matching.hpp"
#include "cyclefactor/reductions.hpp"
#include "cyclefactor/solvers.hpp"

using namespace cyclefactor;

namespace {

void BM_BlossomMatching(benchmark::State& state) {
    Rng rng(1);
    MixedGraph g = random_graph(static_cast<int>(state.range(0)), 0.1, rng);
    for (auto _ : state) benchmark::DoNotOptimize(max_general_matching(g).size());
}
BENCHMARK(BM_BlossomMatching)->Arg(64)->Arg(128)->Arg(256);

void BM_DirectedCycleFactor(benchmark::State& state) {
    Rng rng(2);
    MixedGraph d = random_digraph(static_cast<int>(state.range(0)), 0.05, rng);
    for (auto _ : state) benchmark::DoNotOptimize(directed_cycle_factor(d).yes());
}
BENCHMARK(BM_DirectedCycleFactor)->Arg(64)->Arg(256);

void BM_TwoFactor(benchmark::State& state) {
    Rng rng(3);
    MixedGraph g = random_regular(static_cast<int>(state.range(0)), 4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(undirected_two_factor(g).yes());
}
BENCHMARK(BM_TwoFactor)->Arg(16)->Arg(32)->Arg(64);

void BM_ExactAllOddOnHamReduction(benchmark::State& state) {
    Rng rng(4);
    ProblemInstance inst;
    inst.kind = ProblemKind::HamPath;
    inst.graph = random_digraph(static_cast<int>(state.range(0)), 0.5, rng);
    inst.terminals = {0, 1};
    auto out = reductions::reduce_hampath_to_all_odd(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_parity(out.target.graph, ParityConstraint::AllOdd).yes());
}
BENCHMARK(BM_ExactAllOddOnHamReduction)->Arg(4)->Arg(5)->Arg(6);

void BM_EnumerateFactors(benchmark::State& state) {
    Rng rng(5);
    MixedGraph g = random_mixed(static_cast<int>(state.range(0)), 0.4, 0.3, rng);
    for (auto _ : state) {
        std::size_t count = 0;
        enumerate_factors(g, [&](const CycleFactor&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateFactors)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
