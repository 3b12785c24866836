#include "specpair/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace specpair {

EnumerationResult enumerate_rational_spectra(const Cluster& c, long long den_max) {
    if (den_max < 1) throw InvalidInput("den_max must be at least 1");

    std::vector<Rat> values;  // reduced fractions in (0,1) with denominator <= den_max
    for (long long q = 2; q <= den_max; ++q)
        for (long long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) values.push_back(make_rat(p, q));
    std::sort(values.begin(), values.end());

    EnumerationResult res{c, den_max, {}, true, 0};
    const int need = c.d() - 1;
    const int n = static_cast<int>(values.size());
    if (need > n) return res;

    std::vector<int> idx(static_cast<std::size_t>(need));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<FrequencyValue> entries{FrequencyValue{Rat(0), {}}};
        for (int i : idx) entries.push_back({values[static_cast<std::size_t>(i)], {}});
        Gamma g = Gamma::make(std::move(entries), GammaMode::Exact);
        ++res.candidates_scanned;
        if (verify_pair(c, g).is_spectral_pair) res.spectra.push_back(std::move(g));

        int pos = need - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - need + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < need; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return res;
}

std::vector<long long> numeric_zero_scan(const Gamma& g, Window w, double tol) {
    if (w.lo > w.hi) throw InvalidInput("scan window is empty");
    std::vector<long long> out;
    for (long long k = w.lo; k <= w.hi; ++k)
        if (std::abs(exp_sum_float(g, k)) < tol) out.push_back(k);
    return out;
}

std::vector<std::vector<long long>> tiling_complements_mod(const Cluster& c, long long n) {
    if (n < 1) throw InvalidInput("modulus must be positive");
    if (n % c.d() != 0)
        throw InvalidInput("cluster size must divide the modulus for a tiling complement");

    const long long b_size = n / c.d();
    std::vector<long long> a_mod;
    for (long long a : c.elements()) a_mod.push_back(((a % n) + n) % n);

    std::vector<std::vector<long long>> out;
    const int need = static_cast<int>(b_size) - 1;
    const int max_v = static_cast<int>(n) - 1;
    std::vector<int> idx(static_cast<std::size_t>(need));
    std::iota(idx.begin(), idx.end(), 1);
    if (need > max_v) return out;

    while (true) {
        std::vector<long long> b{0};
        for (int i : idx) b.push_back(i);
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        bool ok = true;
        for (long long a : a_mod) {
            for (long long x : b) {
                if (++count[static_cast<std::size_t>((a + x) % n)] > 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) out.push_back(std::move(b));

        if (need == 0) break;
        int pos = need - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == max_v - (need - 1 - pos))
            --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < need; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

}  // namespace specpair
