#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "specpair/rational.hpp"

namespace specpair {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// low degree first with no trailing zeros; the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);

    static QPoly zero() { return QPoly(); }
    static QPoly one();
    static QPoly monomial(std::size_t k, const Rat& coeff = Rat(1));
    static QPoly x_pow_minus_one(unsigned long long q);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    /// Euclidean division: returns {quotient, remainder}. Throws on a zero divisor.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;

    /// True when divisor divides *this with zero remainder.
    bool divisible_by(const QPoly& divisor) const;

    Rat eval(const Rat& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Rat> c_;
    void normalize();
};

}  // namespace specpair
