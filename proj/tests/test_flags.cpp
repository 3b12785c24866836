#include <doctest.h>

#include <random>
#include <set>

#include "specpair/flags.hpp"
#include "specpair/oracle.hpp"
#include "testutil.hpp"

using namespace specpair;

namespace {

Gamma exact_gamma(std::initializer_list<std::pair<long long, long long>> fracs) {
    std::vector<FrequencyValue> entries;
    for (auto [n, d] : fracs) entries.push_back({make_rat(n, d), {}});
    return Gamma::make(std::move(entries), GammaMode::Exact);
}

Gamma grid_gamma(unsigned long long q, const std::set<int>& js) {
    std::vector<FrequencyValue> entries;
    for (int j : js) entries.push_back({make_rat(j, static_cast<long long>(q)), {}});
    return Gamma::make(std::move(entries), GammaMode::Exact);
}

unsigned long long choose(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long out = 1;
    for (unsigned long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

TEST_CASE("flag members") {
    CHECK(flag_members({1, 1, 4, 2}) == std::vector<long long>{2, 6});
    CHECK(flag_members({0, 2, 4, 3}) == std::vector<long long>{1, 2, 5, 6, 9, 10});
    CHECK(flag_members({-4, 1, 2, 3}) == std::vector<long long>{-3, -1, 1});
    CHECK_THROWS_AS(flag_members({0, 2, 2, 2}), InvalidInput);  // N <= r
}

TEST_CASE("flag membership matches the arithmetic description") {
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<long long> dm(-10, 10);
    std::uniform_int_distribution<int> dr(1, 4), ds(1, 4), dn(1, 8);
    for (int iter = 0; iter < 200; ++iter) {
        Flag f{dm(rng), dr(rng), 0, ds(rng)};
        f.N = f.r + dn(rng);
        auto members = flag_members(f);
        CHECK(members.size() == static_cast<std::size_t>(f.r) * static_cast<std::size_t>(f.s));
        std::set<long long> mset(members.begin(), members.end());
        for (long long x = f.m - 3; x <= f.m + f.s * f.N + f.r + 3; ++x) {
            bool direct = false;
            for (int n = 0; n < f.s; ++n)
                if (x - n * f.N > f.m && x - n * f.N <= f.m + f.r) direct = true;
            CHECK(direct == (mset.count(x) > 0));
        }
    }
}

TEST_CASE("flag search: worked sets") {
    auto a = find_flags({-2, 2}, 1, 2);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == Flag{-3, 1, 4, 2});

    auto b = find_flags({-3, -2, -1, 1, 2, 3}, 1, 3);
    CHECK(std::find(b.begin(), b.end(), Flag{-4, 1, 2, 3}) != b.end());

    CHECK(find_flags({1, 2, 3}, 2, 2).empty());
}

TEST_CASE("flag search is complete against brute force") {
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<long long> dv(-15, 15);
    std::uniform_int_distribution<int> dsize(1, 30), dr(1, 8);
    for (int iter = 0; iter < 120; ++iter) {
        std::set<long long> sset;
        int size = dsize(rng);
        while (static_cast<int>(sset.size()) < size) sset.insert(dv(rng));
        std::vector<long long> s(sset.begin(), sset.end());
        int r = dr(rng);
        int smax = std::max(1, 8 / r);
        std::uniform_int_distribution<int> dstrips(1, smax);
        int strips = dstrips(rng);

        auto got = find_flags(s, r, strips);

        std::vector<Flag> expected;
        long long lo = *sset.begin(), hi = *sset.rbegin();
        for (long long m = lo - 1 - r; m <= hi; ++m)
            for (long long n = r + 1; n <= hi - lo; ++n) {
                Flag f{m, r, n, strips};
                bool inside = true;
                for (long long x : flag_members(f))
                    if (!sset.count(x)) {
                        inside = false;
                        break;
                    }
                if (inside) expected.push_back(f);
            }
        CHECK(got == expected);
    }
}

TEST_CASE("strip extension: shapes and worked instances") {
    CHECK(theorem6_extend({0, 2, 4, 3}, 4) == Flag{0, 2, 4, 4});
    CHECK(theorem6_extend({-3, 1, 4, 2}, 2) == Flag{-3, 1, 4, 2});
    CHECK(theorem6_extend({0, 2, 3, 2}, 3) == Flag{0, 2, 3, 3});
    CHECK_THROWS_AS(theorem6_extend({0, 2, 4, 2}, 4), InvalidInput);  // s != d-r+1
    CHECK_THROWS_AS(theorem6_extend({0, 3, 4, 1}, 3), InvalidInput);  // r >= d
}

TEST_CASE("extension mechanism on the worked spectra") {
    Gamma quarters = exact_gamma({{0, 1}, {1, 4}, {1, 2}, {3, 4}});
    Theorem6Trace t = theorem6_verify_on(quarters, {0, 2, 4, 3});
    CHECK(t.ok);
    CHECK(t.extended == Flag{0, 2, 4, 4});
    CHECK(t.steps.size() == 3);
    CHECK(exp_sum_is_zero(quarters, 13));
    CHECK(exp_sum_is_zero(quarters, 14));

    Gamma thirds = exact_gamma({{0, 1}, {1, 3}, {2, 3}});
    Theorem6Trace t3 = theorem6_verify_on(thirds, {0, 2, 3, 2});
    CHECK(t3.ok);
    CHECK(t3.extended == Flag{0, 2, 3, 3});
    CHECK(exp_sum_is_zero(thirds, 7));
    CHECK(exp_sum_is_zero(thirds, 8));

    Gamma half = exact_gamma({{0, 1}, {1, 2}});
    try {
        theorem6_verify_on(half, {1, 1, 4, 2});  // members {2, 6}
        FAIL("expected HypothesisViolation");
    } catch (const HypothesisViolation& e) {
        CHECK(e.k == 2);
    }
}

TEST_CASE("extension mechanism across cyclotomic spectra") {
    // every subset spectrum of a small grid, every admissible flag of shape
    // r x (d-r+1) found inside one period window of its zero set
    for (unsigned long long q = 2; q <= 8; ++q) {
        for (unsigned mask = 1; mask < (1u << (q - 1)); ++mask) {
            std::set<int> js{0};
            for (unsigned b = 0; b < q - 1; ++b)
                if (mask & (1u << b)) js.insert(static_cast<int>(b) + 1);
            const int d = static_cast<int>(js.size());
            if (d < 2) continue;
            Gamma g = grid_gamma(q, js);
            PeriodicZeroSet x = common_zero_set(g);
            if (x.residues.empty()) continue;
            std::vector<long long> window;
            long long span = 2 * static_cast<long long>(q);
            for (long long k = -span; k <= span; ++k)
                if (x.contains(k)) window.push_back(k);
            for (int r = 1; r < d; ++r) {
                auto flags = find_flags(window, r, d - r + 1);
                int budget = 3;
                for (const auto& f : flags) {
                    if (budget-- == 0) break;
                    Theorem6Trace trace = theorem6_verify_on(g, f);
                    CHECK(trace.ok);
                    for (long long k : flag_members(trace.extended))
                        CHECK(exp_sum_is_zero(g, k));
                }
            }
        }
    }
}

TEST_CASE("extension mechanism runs in the symbolic domain") {
    // {0, 1/2, b1, b1+1/2}: the common zero set is the odd integers, so the
    // 1x4 flag over {1,3,5,7} satisfies the hypothesis with a genuinely
    // irrational (formal) spectrum
    Gamma g = Gamma::make({{Rat(0), {}},
                           {make_rat(1, 2), {}},
                           {Rat(0), {{"b1", Rat(1)}}},
                           {make_rat(1, 2), {{"b1", Rat(1)}}}},
                          GammaMode::Symbolic);
    Theorem6Trace t = theorem6_verify_on(g, {0, 1, 2, 4});
    CHECK(t.ok);
    CHECK(t.extended == Flag{0, 1, 2, 4});
    CHECK(t.steps.size() == 3);

    CHECK_THROWS_AS(theorem6_verify_on(g, {1, 1, 2, 4}),  // members {2,4,6,8}
                    HypothesisViolation);
    CHECK_THROWS_AS(theorem6_verify_on(Gamma::make_float({0.0, 0.5}), {0, 1, 2, 2}),
                    UnsupportedMode);
}

TEST_CASE("denominator bounds from full flags") {
    DenominatorBound b2 = theorem4_conclusion(2, {-3, 1, 4, 2});
    CHECK(b2.N == 4);
    DenominatorBound b3 = theorem4_conclusion(3, {-4, 1, 2, 3});
    CHECK(b3.N == 2);
    CHECK_THROWS_AS(theorem4_conclusion(4, {0, 1, 3, 4}), InvalidInput);  // r below floor(d/2)
    CHECK_THROWS_AS(theorem4_conclusion(3, {0, 1, 3, 2}), InvalidInput);  // s != d
    // conservative mode tightens the threshold
    CHECK_THROWS_AS(theorem4_conclusion(2, {-3, 1, 4, 2}, ThresholdMode::Conservative),
                    InvalidInput);
    CHECK(theorem4_conclusion(3, {0, 2, 3, 3}, ThresholdMode::Conservative).N == 3);
}

TEST_CASE("concrete-spectrum validation of the bound") {
    RationalityCertificate c1 =
        theorem4_verify_on(exact_gamma({{0, 1}, {1, 4}}), {1, 1, 4, 2});
    CHECK(c1.verdict == CertVerdict::Rational);
    CHECK(c1.theorem == CertTheorem::T4);
    CHECK(c1.denominator_divides == 4);
    CHECK(c1.threshold_mode == "as-stated");

    RationalityCertificate c2 =
        theorem4_verify_on(exact_gamma({{0, 1}, {1, 3}, {2, 3}}), {0, 2, 3, 3});
    CHECK(c2.verdict == CertVerdict::Rational);
    CHECK(c2.denominator_divides == 3);

    Gamma generic =
        Gamma::make({{Rat(0), {}}, {Rat(0), {{"b1", Rat(1)}}}}, GammaMode::Symbolic);
    CHECK_THROWS_AS(theorem4_verify_on(generic, {1, 1, 4, 2}), HypothesisViolation);
}

TEST_CASE("pipeline certificates on the worked clusters") {
    auto res = theorem7_pipeline(Cluster::make({0, 2}));
    auto* cert = std::get_if<RationalityCertificate>(&res);
    REQUIRE(cert != nullptr);
    CHECK(cert->theorem == CertTheorem::T7);
    CHECK(cert->witness_flag == Flag{-3, 1, 4, 2});
    CHECK(cert->denominator_divides == 4);

    auto res2 = theorem7_pipeline(Cluster::make({0, 1, 3}));
    auto* cert2 = std::get_if<RationalityCertificate>(&res2);
    REQUIRE(cert2 != nullptr);
    CHECK(cert2->witness_flag == Flag{-4, 1, 2, 3});
    CHECK(cert2->denominator_divides == 2);

    // {0,1,2} has no 1x3 flag in {-2,-1,1,2}, but the 2x2 flag with strips
    // {-2,-1} and {1,2} is contained there, so the pipeline certifies a
    // denominator bound of 3.
    auto res3 = theorem7_pipeline(Cluster::make({0, 1, 2}));
    auto* cert3 = std::get_if<RationalityCertificate>(&res3);
    REQUIRE(cert3 != nullptr);
    CHECK(cert3->witness_flag == Flag{-3, 2, 3, 2});
    CHECK(cert3->denominator_divides == 3);
    DifferenceSet diffs = difference_set(Cluster::make({0, 1, 2}));
    for (long long k : flag_members(*cert3->witness_flag)) CHECK(diffs.contains(k));

    // no admissible flag at all: differences {-7,-5,-2,2,5,7}
    auto res4 = theorem7_pipeline(Cluster::make({0, 2, 7}));
    CHECK(std::holds_alternative<NoApplicableFlag>(res4));
}

TEST_CASE("conservative threshold changes the pipeline, not the truth") {
    // d=2 admits no strip length with r >= floor(d/2)+1 = 2
    auto res = theorem7_pipeline(Cluster::make({0, 2}), {}, ThresholdMode::Conservative);
    CHECK(std::holds_alternative<NoApplicableFlag>(res));
    SpectralityVerdict v =
        decide_spectrality(Cluster::make({0, 2}), {}, ThresholdMode::Conservative);
    CHECK(v.status == SpectralStatus::Unknown);

    // {0,1,3} still certifies through a 2x2 flag, now with stride 4, and the
    // wider grid {j/4} still hosts no spectrum
    auto res2 = theorem7_pipeline(Cluster::make({0, 1, 3}), {}, ThresholdMode::Conservative);
    auto* cert = std::get_if<RationalityCertificate>(&res2);
    REQUIRE(cert != nullptr);
    CHECK(cert->witness_flag == Flag{-4, 2, 4, 2});
    CHECK(cert->denominator_divides == 4);
    CHECK(cert->threshold_mode == "conservative");
    SpectralityVerdict v2 =
        decide_spectrality(Cluster::make({0, 1, 3}), {}, ThresholdMode::Conservative);
    CHECK(v2.status == SpectralStatus::NotSpectral);
    CHECK(v2.search.grid_size == 3);
    CHECK(v2.search.exhausted);
}

TEST_CASE("spectrality decisions on the worked clusters") {
    SpectralityVerdict v1 = decide_spectrality(Cluster::make({0, 2}));
    CHECK(v1.status == SpectralStatus::Spectral);
    REQUIRE(v1.witness_gamma.has_value());
    CHECK(*v1.witness_gamma == exact_gamma({{0, 1}, {1, 4}}));
    CHECK(v1.search.flag_N == 4);
    CHECK(v1.search.grid_size == 3);
    CHECK(verify_pair(Cluster::make({0, 2}), *v1.witness_gamma).is_spectral_pair);

    SpectralityVerdict v2 = decide_spectrality(Cluster::make({0, 1, 3}));
    CHECK(v2.status == SpectralStatus::NotSpectral);
    CHECK(v2.search.flag_N == 2);
    CHECK(v2.search.grid_size == 0);  // the grid {0, 1/2} cannot host three entries
    CHECK(v2.search.exhausted);
    REQUIRE(v2.certificate.has_value());
    CHECK(v2.certificate->denominator_divides == 2);

    // follows from the 2x2 flag: the bound 3 leaves only {0, 1/3, 2/3}
    SpectralityVerdict v3 = decide_spectrality(Cluster::make({0, 1, 2}));
    CHECK(v3.status == SpectralStatus::Spectral);
    REQUIRE(v3.witness_gamma.has_value());
    CHECK(*v3.witness_gamma == exact_gamma({{0, 1}, {1, 3}, {2, 3}}));

    // no flag, no cap: honest Unknown; no flag with a cap: semi-decision
    SpectralityVerdict v4 = decide_spectrality(Cluster::make({0, 2, 7}));
    CHECK(v4.status == SpectralStatus::Unknown);
    SpectralityVerdict v5 = decide_spectrality(Cluster::make({0, 2, 7}), 6);
    CHECK(v5.search.den_max == 6);
    if (v5.status == SpectralStatus::Spectral) {
        CHECK(verify_pair(Cluster::make({0, 2, 7}), *v5.witness_gamma).is_spectral_pair);
    } else {
        CHECK(v5.status == SpectralStatus::Unknown);
        CHECK(v5.search.exhausted);
    }
}

TEST_CASE("no short flags inside multi-class zero sets") {
    // deterministic instance: X = odd integers, strips of length >= 2 need
    // consecutive integers, so no flag of shape r x d with r >= floor(d/2)
    Gamma g = Gamma::make({{Rat(0), {}},
                           {make_rat(1, 2), {}},
                           {Rat(0), {{"b1", Rat(1)}}},
                           {make_rat(1, 2), {{"b1", Rat(1)}}}},
                          GammaMode::Symbolic);
    PeriodicZeroSet x = common_zero_set(g);
    CHECK(x.period == 2);
    CHECK(x.residues == std::set<long long>{1});

    std::mt19937_64 rng(97);
    int tried = 0;
    while (tried < 100) {
        Gamma h = testutil::random_symbolic_gamma(rng, 5);
        auto part = rational_classes(h);
        if (part.t < 2) continue;
        ++tried;
        PeriodicZeroSet zx = common_zero_set(h);
        const int d = h.size();
        long long bound = 3 * part.M;
        std::vector<long long> lifted;
        for (long long k = -bound; k <= bound; ++k)
            if (zx.contains(k)) lifted.push_back(k);
        for (int r = d / 2; r < d; ++r) {
            if (r < 1) continue;
            CHECK(find_flags(lifted, r, d, {{-bound, bound}}, {bound}).empty());
        }
    }
}

TEST_CASE("decisions agree with the brute-force enumerator") {
    for (int d = 1; d <= 4; ++d) {
        for (const Cluster& c : testutil::all_clusters(d, 8)) {
            SpectralityVerdict v = decide_spectrality(c);
            // keep the cross-check grid affordable: skip the enumerator when
            // its Farey grid would dwarf the certified one
            bool small_enough = v.search.flag_N && *v.search.flag_N <= 8;
            if (v.status == SpectralStatus::Spectral) {
                CHECK(verify_pair(c, *v.witness_gamma).is_spectral_pair);
                if (small_enough)
                    CHECK(!enumerate_rational_spectra(c, *v.search.flag_N).spectra.empty());
            } else if (v.status == SpectralStatus::NotSpectral) {
                REQUIRE(v.search.flag_N.has_value());
                if (small_enough)
                    CHECK(enumerate_rational_spectra(c, *v.search.flag_N).spectra.empty());
                CHECK(v.search.exhausted);
                REQUIRE(v.certificate.has_value());
                CHECK(v.certificate->theorem == CertTheorem::T7);
            }
            if (v.search.flag_N) {
                CHECK(v.search.grid_size ==
                      choose(static_cast<unsigned long long>(*v.search.flag_N - 1),
                             static_cast<unsigned long long>(d - 1)));
            }
        }
    }
}
