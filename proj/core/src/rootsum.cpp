#include "specpair/rootsum.hpp"

#include <vector>

namespace specpair {

void RootSum::add(long long e, const Rat& c) {
    if (c == 0) return;
    long long qe = static_cast<long long>(q);
    unsigned long long key = static_cast<unsigned long long>(((e % qe) + qe) % qe);
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

namespace {

unsigned long long smallest_prime_factor(unsigned long long q) {
    for (unsigned long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return p;
    return q;
}

bool is_zero_rec(const RootSum& s) {
    if (s.terms.empty()) return true;
    if (s.q == 1) {
        Rat total(0);
        for (const auto& [e, c] : s.terms) total += c;
        return total == 0;
    }
    if (s.terms.size() == 1) return false;  // a single nonzero multiple of a root

    unsigned long long p = smallest_prime_factor(s.q);
    unsigned long long m = s.q / p;

    if (m % p == 0) {
        // zeta_q^p = zeta_m; slice by e mod p.
        std::vector<RootSum> slices(p);
        for (auto& sl : slices) sl.q = m;
        for (const auto& [e, c] : s.terms)
            slices[e % p].add(static_cast<long long>(e / p), c);
        for (const auto& sl : slices)
            if (!is_zero_rec(sl)) return false;
        return true;
    }

    // CRT split: e <-> (e mod p, e mod m).
    std::vector<RootSum> residue(p);
    for (auto& sl : residue) sl.q = m;
    for (const auto& [e, c] : s.terms)
        residue[e % p].add(static_cast<long long>(e % m), c);
    for (unsigned long long t = 0; t + 1 < p; ++t) {
        RootSum diff = residue[t];
        for (const auto& [e, c] : residue[p - 1].terms)
            diff.add(static_cast<long long>(e), -c);
        if (!is_zero_rec(diff)) return false;
    }
    return true;
}

}  // namespace

bool root_sum_is_zero(const RootSum& s) { return is_zero_rec(s); }

}  // namespace specpair
