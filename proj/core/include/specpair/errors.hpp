#pragma once

#include <stdexcept>
#include <string>

namespace specpair {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input (bad cluster, bad fraction, bad JSON).
struct InvalidInput : Error {
    using Error::Error;
};

/// Structurally valid input that degenerates the requested computation
/// (e.g. coincident roots where distinctness is required).
struct DegenerateInput : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// The requested operation is not defined for the value domain at hand
/// (e.g. exact class decomposition of floating-point frequencies).
struct UnsupportedMode : Error {
    using Error::Error;
};

/// A stated hypothesis fails at a concrete integer; carries the witness.
struct HypothesisViolation : Error {
    long long k;
    explicit HypothesisViolation(long long k_, const std::string& what_)
        : Error(what_), k(k_) {}
};

/// Raised only if a certified implication is contradicted by direct
/// evaluation. Reaching this is a bug, not a data error.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace specpair
