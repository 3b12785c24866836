#include "specpair/cluster.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "specpair/cyclotomic.hpp"

namespace specpair {

Cluster Cluster::make(std::vector<long long> elements) {
    if (elements.empty()) throw InvalidInput("cluster must be nonempty");
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw InvalidInput("cluster elements must be distinct");
    if (elements.front() < 0) throw InvalidInput("cluster elements must be nonnegative");
    if (elements.front() != 0) throw InvalidInput("cluster must contain 0");
    return Cluster(std::move(elements));
}

bool DifferenceSet::contains(long long k) const {
    return std::binary_search(values.begin(), values.end(), k);
}

DifferenceSet difference_set(const Cluster& c) {
    std::set<long long> out;
    for (long long a : c.elements())
        for (long long b : c.elements())
            if (a != b) out.insert(a - b);
    return {{out.begin(), out.end()}};
}

long long autocorrelation(const Cluster& c, long long k) {
    long long count = 0;
    const auto& a = c.elements();
    for (long long x : a)
        count += std::binary_search(a.begin(), a.end(), x - k) ? 1 : 0;
    return count;
}

QPoly mask_polynomial(const Cluster& c) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(c.max()) + 1, Rat(0));
    for (long long a : c.elements()) coeffs[static_cast<std::size_t>(a)] = 1;
    return QPoly(std::move(coeffs));
}

std::vector<Rat> rational_mask_zeros(const Cluster& c) {
    if (c.d() < 2) throw InvalidInput("mask zero search needs at least two elements");
    const QPoly mask = mask_polynomial(c);
    const unsigned long long deg = static_cast<unsigned long long>(c.max());
    std::vector<Rat> out;
    // phi(q) >= sqrt(q/2), so phi(q) <= deg bounds q by 2*deg^2.
    for (unsigned long long q = 2; q <= 2 * deg * deg; ++q) {
        if (totient(q) > deg) continue;
        if (!mask.divisible_by(cyclotomic(q))) continue;
        for (unsigned long long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            out.push_back(make_rat(static_cast<long long>(p), static_cast<long long>(q)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FrequencyClass classify_frequency(const Cluster& c, const Rat& lam) {
    Rat l = reduced(lam);
    if (!(l > 0 && l < 1)) throw InvalidInput("candidate frequency must lie in (0,1)");
    unsigned long long q = static_cast<unsigned long long>(den_ll(l));
    return mask_polynomial(c).divisible_by(cyclotomic(q)) ? FrequencyClass::RationalZero
                                                          : FrequencyClass::NotAZero;
}

bool laba_rationality(const Cluster& c) {
    // Omega fits in [0, M] with M = max(A) + 1; the criterion is M < 5d/2.
    return 2 * (c.max() + 1) < 5 * static_cast<long long>(c.d());
}

}  // namespace specpair
