#pragma once

#include <vector>

#include "specpair/qpoly.hpp"

namespace specpair {

/// Finite set A of nonnegative integers with 0 in A, standing for the union
/// of unit intervals A + [0,1]. Input is sorted but never deduplicated or
/// translated: duplicates and a missing 0 are rejected.
class Cluster {
public:
    static Cluster make(std::vector<long long> elements);

    int d() const { return static_cast<int>(a_.size()); }
    const std::vector<long long>& elements() const { return a_; }
    long long max() const { return a_.back(); }

    bool operator==(const Cluster& o) const { return a_ == o.a_; }

private:
    explicit Cluster(std::vector<long long> a) : a_(std::move(a)) {}
    std::vector<long long> a_;  // strictly increasing, front() == 0
};

/// (A - A) \ {0}, sorted; symmetric about 0.
struct DifferenceSet {
    std::vector<long long> values;
    bool contains(long long k) const;
};

DifferenceSet difference_set(const Cluster& c);

/// Number of pairs (a, a') in A x A with a - a' = k.
long long autocorrelation(const Cluster& c, long long k);

/// sum_{a in A} x^a.
QPoly mask_polynomial(const Cluster& c);

/// All reduced fractions p/q in (0,1) where the mask polynomial vanishes at
/// e^{2*pi*i*p/q}: exactly the q whose cyclotomic polynomial divides the
/// mask. The search over q is complete because a divisor's degree phi(q)
/// cannot exceed deg(mask) = max(A). Requires d >= 2.
std::vector<Rat> rational_mask_zeros(const Cluster& c);

enum class FrequencyClass { RationalZero, NotAZero };

/// Certifies or rejects a rational candidate zero of the mask polynomial.
/// lam must be a fraction strictly between 0 and 1.
FrequencyClass classify_frequency(const Cluster& c, const Rat& lam);

/// True when max(A) + 1 < 5d/2, in which case every spectrum of the cluster
/// is rational.
bool laba_rationality(const Cluster& c);

}  // namespace specpair
