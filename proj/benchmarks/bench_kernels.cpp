#include <random>

#include <benchmark/benchmark.h>

#include "zetadiv/char_sum.hpp"
#include "zetadiv/curves.hpp"
#include "zetadiv/finite_field.hpp"
#include "zetadiv/intpoly.hpp"
#include "zetadiv/rational_map.hpp"

using namespace zetadiv;

// Laurent kernel over GF(2^m): items = field elements visited.
static void BM_GsumKernel(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const auto F = cached_field(2, m);
    const auto f = dk_map(3);
    for (auto _ : state) benchmark::DoNotOptimize(char_sum(F, f, {1, 34}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(F.order()));
}
BENCHMARK(BM_GsumKernel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

// Horner plus batched inversion for a non-monomial denominator.
static void BM_GeneralKernel(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const auto F = cached_field(2, m);
    const RationalMap f(2, {1, 0, 1, 1}, {0, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(char_sum(F, f, {1, 34}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(F.order()));
}
BENCHMARK(BM_GeneralKernel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_FieldMul(benchmark::State& state) {
    const auto F = cached_field(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> pick(1, F.order() - 1);
    FieldElement a{pick(rng)};
    const FieldElement b{pick(rng)};
    for (auto _ : state) {
        a = F.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Args({2, 33})->Args({2, 47})->Args({3, 10})->Args({3, 25});

static void BM_NewtonRoundtrip(benchmark::State& state) {
    const auto d = static_cast<unsigned>(state.range(0));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> pick(-1000, 1000);
    std::vector<mpz_class> c(d + 1);
    c[0] = 1;
    for (unsigned i = 1; i <= d; ++i) c[i] = pick(rng);
    c[d] = 1000;
    const IntPolynomial f(c);
    for (auto _ : state) benchmark::DoNotOptimize(poly_from_power_sums(power_sums_from_poly(f, d), d));
}
BENCHMARK(BM_NewtonRoundtrip)->Arg(4)->Arg(12)->Arg(34);

BENCHMARK_MAIN();
