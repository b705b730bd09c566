#include <milq/quotient.hpp>
#include <milq/smith.hpp>

#include <benchmark/benchmark.h>

#include <random>

using milq::IntMatrix;
using milq::LinkingMatrix;

namespace {

LinkingMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    LinkingMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) m.set_linking(i, j, dist(rng));
    return m;
}

// Invariant factors of a presentation: the dominant cost of quotient_group.
void BM_smith_presentation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(12345u);
    const IntMatrix p = milq::presentation_matrix(random_matrix(rng, n, -9, 9));
    for (auto _ : state) {
        benchmark::DoNotOptimize(milq::smith_invariants(p));
    }
    state.SetLabel(std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
}
BENCHMARK(BM_smith_presentation)->DenseRange(5, 8);

// Full transform tracking, as used by coset reduction.
void BM_smith_with_transforms(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(12345u);
    const IntMatrix p = milq::presentation_matrix(random_matrix(rng, n, -9, 9));
    for (auto _ : state) {
        benchmark::DoNotOptimize(milq::smith_normal_form(p));
    }
}
BENCHMARK(BM_smith_with_transforms)->DenseRange(5, 7);

void BM_mod2_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(9876u);
    const LinkingMatrix lm = random_matrix(rng, n, 0, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(milq::mod2_rank(lm));
    }
}
BENCHMARK(BM_mod2_rank)->DenseRange(5, 8);

void BM_coset_reduce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(777u);
    const LinkingMatrix lm = random_matrix(rng, n, -9, 9);
    const milq::MilnorQuotient q(lm);
    std::uniform_int_distribution<int> coeff(-20, 20);
    milq::AltVector v(n);
    for (std::size_t p = 0; p < v.size(); ++p) v[p] = coeff(rng);
    (void)q.reduce(v); // pay the lazy Smith setup once, outside the loop
    for (auto _ : state) {
        benchmark::DoNotOptimize(q.reduce(v));
    }
}
BENCHMARK(BM_coset_reduce)->DenseRange(5, 7);

} // namespace

BENCHMARK_MAIN();
