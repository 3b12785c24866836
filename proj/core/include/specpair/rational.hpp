#pragma once

#include <gmpxx.h>

#include <string>

#include "specpair/errors.hpp"

namespace specpair {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced fraction num/den. Throws InvalidInput on a zero denominator.
Rat make_rat(long long num, long long den);

/// gmpxx has no long long constructor; LP64 makes this cast lossless.
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

/// Canonicalize in place (reduce, make denominator positive).
inline Rat reduced(Rat r) {
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Fractional part in [0, 1).
Rat frac_mod1(const Rat& r);

long long to_ll(const Int& z);           // throws InvalidInput if out of range
long long num_ll(const Rat& r);
long long den_ll(const Rat& r);

Int lcm(const Int& a, const Int& b);

inline double to_double(const Rat& r) { return r.get_d(); }

std::string to_string(const Rat& r);     // "p/q", or "p" when integral

}  // namespace specpair
