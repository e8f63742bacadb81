#include <benchmark/benchmark.h>

#include <dyckchains/chain_formula.hpp>
#include <dyckchains/kernels.hpp>
#include <dyckchains/path.hpp>

namespace {

using dyck::Execution;

void propagate(benchmark::State& state, Execution exec) {
    const int n = static_cast<int>(state.range(0));
    const dyck::PathIndex index(n);
    std::vector<mpz_class> ones(index.size(), 1);
    for (auto _ : state) {
        auto v = ones;
        for (int round = 0; round < 3; ++round) {
            v = dyck::kernels::propagate_covers(exec, index, v);
        }
        benchmark::DoNotOptimize(v.data());
    }
    state.counters["paths"] = static_cast<double>(index.size());
}

void formula_total(benchmark::State& state, Execution exec) {
    const int n = static_cast<int>(state.range(0));
    const dyck::ChainFormula formula(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(formula.total(n, exec));
    }
}

void BM_PropagateSerial(benchmark::State& s) { propagate(s, Execution::serial); }
void BM_PropagateParallel(benchmark::State& s) { propagate(s, Execution::parallel); }
void BM_FormulaSerial(benchmark::State& s) { formula_total(s, Execution::serial); }
void BM_FormulaParallel(benchmark::State& s) { formula_total(s, Execution::parallel); }

} // namespace

BENCHMARK(BM_PropagateSerial)->DenseRange(10, 13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PropagateParallel)->DenseRange(10, 13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FormulaSerial)->DenseRange(9, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FormulaParallel)->DenseRange(9, 11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
