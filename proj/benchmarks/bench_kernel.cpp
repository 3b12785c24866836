#include <benchmark/benchmark.h>

#include <random>

#include "specpair/flags.hpp"
#include "specpair/oracle.hpp"
#include "specpair/rootsum.hpp"

using namespace specpair;

namespace {

Gamma canonical_gamma(int d) {
    std::vector<FrequencyValue> entries;
    for (int j = 0; j < d; ++j) entries.push_back({make_rat(j, d), {}});
    return Gamma::make(std::move(entries), GammaMode::Exact);
}

Cluster canonical_cluster(int d) {
    std::vector<long long> a;
    for (int j = 0; j < d; ++j) a.push_back(j);
    return Cluster::make(std::move(a));
}

}  // namespace

static void BM_reduce_mod_cyclotomic(benchmark::State& state) {
    const unsigned long long q = static_cast<unsigned long long>(state.range(0));
    std::mt19937_64 rng(5);
    std::vector<Rat> coeffs(q);
    std::uniform_int_distribution<int> dc(-3, 3);
    for (auto& c : coeffs) c = Rat(dc(rng));
    QPoly p(coeffs);
    cyclotomic(q);  // warm the cache; the division is what gets measured
    for (auto _ : state) benchmark::DoNotOptimize(reduce_mod_cyclotomic(p, q));
}
BENCHMARK(BM_reduce_mod_cyclotomic)->Arg(12)->Arg(60)->Arg(210);

static void BM_exp_sum_exact(benchmark::State& state) {
    Gamma g = canonical_gamma(static_cast<int>(state.range(0)));
    long long k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(exp_sum_value(g, ++k));
}
BENCHMARK(BM_exp_sum_exact)->Arg(4)->Arg(8)->Arg(12);

static void BM_sparse_zero_test(benchmark::State& state) {
    // twelve terms at a conductor far past the dense limit
    const unsigned long long q = 27720ull * 1009ull;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> de(0, static_cast<long long>(q) - 1);
    RootSum s;
    s.q = q;
    for (int t = 0; t < 12; ++t) s.add(de(rng), Rat(1));
    for (auto _ : state) benchmark::DoNotOptimize(root_sum_is_zero(s));
}
BENCHMARK(BM_sparse_zero_test);

static void BM_companion_power(benchmark::State& state) {
    Gamma g = canonical_gamma(4);
    auto spec = recurrence_coefficients_exact(g);
    std::vector<CycNum> nu;
    for (long long k = 0; k < 4; ++k) nu.push_back(std::get<CycNum>(exp_sum_value(g, k)));
    const unsigned long long n = static_cast<unsigned long long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(companion_power_apply(spec, nu, n));
}
BENCHMARK(BM_companion_power)->Arg(1 << 10)->Arg(1 << 20)->Arg(1ll << 40);

static void BM_verify_pair(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Cluster c = canonical_cluster(d);
    Gamma g = canonical_gamma(d);
    for (auto _ : state) benchmark::DoNotOptimize(verify_pair(c, g));
}
BENCHMARK(BM_verify_pair)->Arg(4)->Arg(8)->Arg(12);

static void BM_decide_spectrality(benchmark::State& state) {
    Cluster c = Cluster::make({0, 1, 3});
    for (auto _ : state) benchmark::DoNotOptimize(decide_spectrality(c));
}
BENCHMARK(BM_decide_spectrality);

static void BM_find_flags(benchmark::State& state) {
    DifferenceSet diffs = difference_set(canonical_cluster(12));
    for (auto _ : state) benchmark::DoNotOptimize(find_flags(diffs.values, 2, 3));
}
BENCHMARK(BM_find_flags);

static void BM_enumerate_spectra(benchmark::State& state) {
    Cluster c = Cluster::make({0, 1, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_rational_spectra(c, state.range(0)));
}
BENCHMARK(BM_enumerate_spectra)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
