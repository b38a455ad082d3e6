#include <benchmark/benchmark.h>

#include "sc6/binaryqf.hpp"
#include "sc6/modforms.hpp"
#include "sc6/qseries.hpp"
#include "sc6/sweep.hpp"
#include "sc6/ternary.hpp"

namespace {

void BM_loeschian_table(benchmark::State& state) {
    const std::int64_t bound = state.range(0);
    for (auto _ : state) {
        auto table = sc6::loeschian_table(bound);
        benchmark::DoNotOptimize(table.data());
    }
    state.SetItemsProcessed(state.iterations() * bound);
}
BENCHMARK(BM_loeschian_table)->Arg(1 << 16)->Arg(687263);

void BM_rq_fast(benchmark::State& state) {
    static const auto table = sc6::loeschian_table(687263);
    std::int64_t n = 0;
    std::int64_t sum = 0;
    for (auto _ : state) {
        sum += sc6::rq_fast(24 * n + 35, table);
        n = (n + 1) % 916349;
    }
    benchmark::DoNotOptimize(sum);
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_rq_fast);

void BM_rq_positive(benchmark::State& state) {
    static const auto table = sc6::loeschian_table(687263);
    std::int64_t n = 0;
    bool all = true;
    for (auto _ : state) {
        all &= sc6::rq_positive(24 * n + 35, table);
        n = (n + 1) % 916349;
    }
    benchmark::DoNotOptimize(all);
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_rq_positive);

void BM_sweep(benchmark::State& state) {
    sc6::SweepConfig cfg;
    cfg.n_max = (std::uint64_t)state.range(0);
    cfg.worker_count = (unsigned)state.range(1);
    for (auto _ : state) {
        auto report = sc6::sweep_positivity(cfg);
        benchmark::DoNotOptimize(report.exceptions.data());
    }
    state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}
BENCHMARK(BM_sweep)->Args({916348, 1})->Args({916348, 8})->Unit(benchmark::kMillisecond);

void BM_rep_count(benchmark::State& state) {
    const sc6::TernaryForm f = state.range(0) == 0 ? sc6::main_form() : sc6::mate_form();
    std::int64_t n = 35;
    std::int64_t sum = 0;
    for (auto _ : state) {
        sum += sc6::rep_count(f, n);
        n = 35 + (n + 24) % 100000;
    }
    benchmark::DoNotOptimize(sum);
}
BENCHMARK(BM_rep_count)->Arg(0)->Arg(1);

void BM_theta_sieve(benchmark::State& state) {
    for (auto _ : state) {
        auto counts = sc6::rep_counts_upto(sc6::main_form(), state.range(0));
        benchmark::DoNotOptimize(counts.data());
    }
}
BENCHMARK(BM_theta_sieve)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_sc6_series(benchmark::State& state) {
    for (auto _ : state) {
        auto s = sc6::sc6_series(state.range(0));
        benchmark::DoNotOptimize(&s);
    }
}
BENCHMARK(BM_sc6_series)->Arg(2000)->Arg(20001)->Unit(benchmark::kMillisecond);

void BM_eigenform_table(benchmark::State& state) {
    for (auto _ : state) {
        auto a = sc6::eigenform_table(state.range(0));
        benchmark::DoNotOptimize(a.data());
    }
}
BENCHMARK(BM_eigenform_table)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
