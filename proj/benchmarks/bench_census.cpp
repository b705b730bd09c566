#include <milq/census.hpp>
#include <milq/surface_system.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_census(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(milq::run_census(n));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(milq::mod2_matrix_count(n)));
}
BENCHMARK(BM_census)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_census_single_thread(benchmark::State& state) {
    milq::CensusOptions opt;
    opt.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(milq::run_census(6, opt));
    }
    state.SetItemsProcessed(state.iterations() * 32768);
}
BENCHMARK(BM_census_single_thread)->Unit(benchmark::kMillisecond);

void BM_mask_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(31u);
    const std::uint64_t mask = rng() % milq::mod2_matrix_count(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(milq::mod2_rank_of_mask(mask, n));
    }
}
BENCHMARK(BM_mask_rank)->DenseRange(4, 8);

void BM_epsilon(benchmark::State& state) {
    const std::size_t len = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(64u);
    milq::ClaspWord w;
    for (std::size_t p = 0; p < len; ++p)
        w.letters.push_back({1 + static_cast<int>(rng() % 6), rng() % 2 ? 1 : -1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(milq::epsilon(w, 2, 5));
    }
    state.SetComplexityN(static_cast<std::int64_t>(len));
}
BENCHMARK(BM_epsilon)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

} // namespace

BENCHMARK_MAIN();
