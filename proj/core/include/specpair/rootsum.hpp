#pragma once

#include <map>

#include "specpair/rational.hpp"

namespace specpair {

/// Sparse sum of q-th roots of unity, sum_e c_e * zeta_q^e, keyed by exponent
/// reduced into [0, q). Suitable for conductors far beyond the dense
/// representation limit as long as the term count stays small.
struct RootSum {
    unsigned long long q = 1;
    std::map<unsigned long long, Rat> terms;  // zero coefficients dropped

    void add(long long e, const Rat& c);
};

/// Exact zero test. Splits off one prime factor p of q at a time:
/// with m = q/p and zeta = zeta_q,
///   - if p | m, {zeta^t : t < p} is a module basis over Z[zeta_m], so the
///     sum vanishes iff each residue-t slice vanishes over conductor m;
///   - if p does not divide m, exponents split by CRT into (e mod p, e mod m)
///     and eliminating zeta_p^{p-1} = -(1 + zeta_p + ... + zeta_p^{p-2})
///     reduces the test to p-1 slice differences over conductor m.
/// Recursion grounds at q = 1 where the sum is plain rational.
bool root_sum_is_zero(const RootSum& s);

}  // namespace specpair
