#pragma once

#include "specpair/pair.hpp"

namespace specpair {

/// Exhaustive scan result over the bounded-denominator grid.
struct EnumerationResult {
    Cluster cluster;
    long long den_max = 1;
    std::vector<Gamma> spectra;  // canonical (lexicographic) order
    bool exhaustive = true;      // the full grid was scanned
    unsigned long long candidates_scanned = 0;
};

/// Brute force: every gamma with entries drawn from the reduced fractions
/// p/q in [0,1) with q <= den_max, leading entry 0, strictly increasing,
/// that passes verify_pair. Independent of the flag machinery; used as the
/// cross-check oracle.
EnumerationResult enumerate_rational_spectra(const Cluster& c, long long den_max);

/// {k in [window] : |sum_j e^{2 pi i gamma_j k}| < tol}, numerically.
std::vector<long long> numeric_zero_scan(const Gamma& g, Window w, double tol);

/// All B in Z_n with |B| = n/d, 0 in B and A + B = Z_n exactly once per
/// residue (A reduced mod n, multiplicities counted). Requires d | n.
std::vector<std::vector<long long>> tiling_complements_mod(const Cluster& c, long long n);

}  // namespace specpair
