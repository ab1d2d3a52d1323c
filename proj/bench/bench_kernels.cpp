// Serial vs OpenMP sweep kernels, and the suffix-automaton LZ against the quadratic scan.

#include <benchmark/benchmark.h>

#include "naive.hpp"
#include "slp/factorize.hpp"
#include "slp/fibonacci.hpp"
#include "slp/kernels.hpp"
#include "slp/repair.hpp"

using namespace slp;

namespace {

const Bigram kAb{Symbol::terminal('a'), Symbol::terminal('b')};

template <bool Parallel>
void BM_SubsetSweep(benchmark::State& state) {
    auto w = fib_word(static_cast<int>(state.range(0)));
    auto occ = greedy_occurrences(w, kAb);
    SubsetPlan plan{occ.size(), false, 20'000, 1};
    for (auto _ : state) {
        auto out = Parallel ? subset_sweep_parallel(w, occ, Symbol::nonterminal(1), 0, plan)
                            : subset_sweep_serial(w, occ, Symbol::nonterminal(1), 0, plan);
        benchmark::DoNotOptimize(out.min_z);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.size()));
}

template <bool Parallel>
void BM_LowerBoundSweep(benchmark::State& state) {
    for (auto _ : state) {
        auto out = Parallel ? lower_bound_sweep_parallel(500, 12, 3) : lower_bound_sweep_serial(500, 12, 3);
        benchmark::DoNotOptimize(out.tight);
    }
    state.SetItemsProcessed(state.iterations() * 500);
}

void BM_LzAutomaton(benchmark::State& state) {
    auto w = fib_word(static_cast<int>(state.range(0)));
    LzFactorizer engine;
    for (auto _ : state) benchmark::DoNotOptimize(engine.phrase_count(w.symbols()));
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}

void BM_LzNaive(benchmark::State& state) {
    auto w = naive::fib(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(naive::lz(w).size());
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}

} // namespace

BENCHMARK(BM_SubsetSweep<false>)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetSweep<true>)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LowerBoundSweep<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowerBoundSweep<true>)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LzAutomaton)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_LzNaive)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
