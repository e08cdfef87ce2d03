#include <benchmark/benchmark.h>

#include "osswb/curvature.hpp"
#include "osswb/geometry.hpp"
#include "osswb/jordan.hpp"
#include "osswb/rng.hpp"

using namespace osswb;

namespace {

RatMatrix random_square(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rational(rng.uniform(-9, 9));
    return m;
}

void BM_rank(benchmark::State& state) {
    auto m = random_square(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(6)->Arg(12)->Arg(15);

void BM_jacobi_apply(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    auto g = nil3_inner_product(s, RatMatrix(s, s));
    auto r = nil3_curvature(CurvatureTensor(s), csc_tensor(s));
    JacobiBuilder build(r, g);
    auto x = sample_vector(g, CausalType::Spacelike, 1, 10, 0);
    for (auto _ : state) benchmark::DoNotOptimize(build(x));
}
BENCHMARK(BM_jacobi_apply)->Arg(2)->Arg(3)->Arg(5);

void BM_rank_sequence(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    auto g = nil3_inner_product(s, RatMatrix(s, s));
    auto r = nil3_curvature(CurvatureTensor(s), csc_tensor(s));
    JacobiBuilder build(r, g);
    auto j = build(sample_vector(g, CausalType::Spacelike, 1, 10, 0));
    for (auto _ : state) benchmark::DoNotOptimize(rank_sequence(j));
}
BENCHMARK(BM_rank_sequence)->Arg(2)->Arg(3)->Arg(5);

void BM_curvature_at(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    auto m = nil3_polynomial_metric(s, csc_tensor(s));
    auto gamma = christoffel_first(m);
    SplitMix64 rng(9);
    std::vector<Rational> pt(static_cast<std::size_t>(3 * s));
    for (auto& x : pt) x = Rational(rng.uniform(-5, 5));
    for (auto _ : state) benchmark::DoNotOptimize(curvature_at(m, gamma, pt));
}
BENCHMARK(BM_curvature_at)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
