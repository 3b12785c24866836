#pragma once

#include "specpair/gamma.hpp"
#include "specpair/value.hpp"

namespace specpair {

/// The d unit-modulus terms z_j = e^{2*pi*i*gamma_j} in each value domain.
CycNum root_exact(const Gamma& g, int j);       // Exact mode
SymValue root_symbolic(const Gamma& g, int j);  // Exact or Symbolic mode
Cplx root_float(const Gamma& g, int j);         // Exact or Float mode

/// sum_j z_j^k in the gamma's own value domain. In exact mode the result
/// lives in Z[zeta_q] with q the lcm of the entry denominators.
Value exp_sum_value(const Gamma& g, long long k);

/// [f_{k_lo}, ..., f_{k_hi}], pointwise consistent with exp_sum_value.
std::vector<Value> power_sum_sequence(const Gamma& g, long long k_lo, long long k_hi);

/// Exact zero test in Exact/Symbolic modes (sparse, so arbitrarily large
/// conductors are fine); tolerance test in Float mode. A negative tol selects
/// the default 1e-9 * d.
bool exp_sum_is_zero(const Gamma& g, long long k, double tol = -1.0);

/// Numeric evaluation of the sum (Exact or Float mode).
Cplx exp_sum_float(const Gamma& g, long long k);

}  // namespace specpair
