#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specpair/cyclotomic.hpp"

namespace specpair {

/// Product of formal generators with integer exponents, e.g. b1^2 * b2^-1.
/// Generators are treated as multiplicatively independent of each other and
/// of every root of unity; the empty monomial is the unit.
struct Monomial {
    std::vector<std::pair<std::string, long long>> factors;  // sorted by id, exponents nonzero

    static Monomial unit() { return {}; }
    bool is_unit() const { return factors.empty(); }

    Monomial operator*(const Monomial& o) const;
    Monomial inverted() const;

    auto operator<=>(const Monomial&) const = default;
    std::string to_string() const;
};

/// Finite sum of monomials with cyclotomic coefficients. Zero iff every
/// coefficient is zero; no relation between distinct monomials is assumed.
class SymValue {
public:
    SymValue() = default;

    static SymValue zero() { return SymValue(); }
    static SymValue from(const CycNum& c);
    static SymValue term(Monomial m, const CycNum& c);

    bool is_zero() const;
    const std::map<Monomial, CycNum>& terms() const { return terms_; }

    SymValue operator+(const SymValue& o) const;
    SymValue operator-(const SymValue& o) const;
    SymValue operator*(const SymValue& o) const;
    SymValue operator-() const;
    SymValue& operator+=(const SymValue& o) { return *this = *this + o; }
    SymValue& operator-=(const SymValue& o) { return *this = *this - o; }
    SymValue& operator*=(const SymValue& o) { return *this = *this * o; }
    bool operator==(const SymValue& o) const { return (*this - o).is_zero(); }

    SymValue conj() const;
    std::string to_string() const;

private:
    std::map<Monomial, CycNum> terms_;
    void add_term(const Monomial& m, const CycNum& c);
};

}  // namespace specpair
