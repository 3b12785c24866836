#pragma once

#include <complex>
#include <string>
#include <variant>

#include "specpair/symbolic.hpp"

namespace specpair {

using Cplx = std::complex<double>;

/// A frequency-sum value in one of the three evaluation domains:
/// exact cyclotomic, symbolic-generic, or floating point.
using Value = std::variant<CycNum, SymValue, Cplx>;

/// Zero test; `tol` applies to the floating alternative only (exact domains
/// ignore it). A non-positive tol means "treat any nonzero float as nonzero".
bool value_is_zero(const Value& v, double tol = 0.0);

std::string value_to_string(const Value& v);

Value value_conj(const Value& v);

bool value_equal(const Value& a, const Value& b);

}  // namespace specpair
