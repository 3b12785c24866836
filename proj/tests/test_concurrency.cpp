#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "specpair/flags.hpp"
#include "specpair/oracle.hpp"

using namespace specpair;

// The whole surface is pure values; the only shared state is the cyclotomic
// cache behind its mutex. Hammer it from several threads, including cold
// conductors, and cross-check every thread's results.

TEST_CASE("concurrent evaluation produces identical exact results") {
    constexpr int kThreads = 8;
    std::atomic<int> disagreements{0};

    auto worker = [&](int seed) {
        for (int round = 0; round < 20; ++round) {
            unsigned long long q = 2 + static_cast<unsigned long long>((seed + round) % 90);
            CHECK_NOTHROW(cyclotomic(q));

            std::vector<FrequencyValue> entries{{Rat(0), {}}};
            long long den = 2 + (seed + round) % 11;
            entries.push_back({make_rat(1, den), {}});
            Gamma g = Gamma::make(entries, GammaMode::Exact);
            Cluster c = Cluster::make({0, (seed % 5) + 1});
            PairVerdict v = verify_pair(c, g);

            // den divides the checked difference exactly when the sum is d
            bool expect_zero = [&] {
                for (long long k : difference_set(c).values)
                    if (!exp_sum_is_zero(g, k)) return false;
                return true;
            }();
            if (v.is_spectral_pair != expect_zero) ++disagreements;
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < kThreads; ++t) pool.emplace_back(worker, t * 37 + 1);
    for (auto& th : pool) th.join();
    CHECK(disagreements.load() == 0);
}
