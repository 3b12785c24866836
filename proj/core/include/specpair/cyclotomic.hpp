#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "specpair/qpoly.hpp"

namespace specpair {

/// q-th cyclotomic polynomial, computed by dividing x^q - 1 by the
/// cyclotomic polynomials of the proper divisors of q. Results are memoized
/// process-wide; the returned reference stays valid. Throws InvalidInput for q = 0.
const QPoly& cyclotomic(unsigned long long q);

/// Euler totient.
unsigned long long totient(unsigned long long q);

/// Conductor plus its cyclotomic polynomial. Shared and immutable; obtain
/// instances through get().
class CyclotomicContext {
public:
    static std::shared_ptr<const CyclotomicContext> get(unsigned long long q);

    unsigned long long q() const { return q_; }
    const QPoly& phi() const { return phi_; }
    std::size_t degree() const { return static_cast<std::size_t>(phi_.degree()); }

private:
    CyclotomicContext(unsigned long long q, QPoly phi) : q_(q), phi_(std::move(phi)) {}
    unsigned long long q_;
    QPoly phi_;
};

/// Element of Z[zeta_q] (rational coefficients allowed), stored as the unique
/// remainder mod the q-th cyclotomic polynomial. Two values with the same
/// conductor are equal iff their coefficient vectors are equal; mixed
/// conductors are compared after embedding into the least common one.
/// The exact zero test is coefficient-wise, with no tolerance.
class CycNum {
public:
    CycNum() : CycNum(zero(1)) {}

    static CycNum zero(unsigned long long q);
    static CycNum one(unsigned long long q) { return from_rational(Rat(1), q); }
    static CycNum from_rational(const Rat& r, unsigned long long q);
    /// zeta_q^e for any integer e (reduced mod q first).
    static CycNum root_power(unsigned long long q, long long e);
    /// Canonical remainder of an arbitrary rational polynomial evaluated at zeta_q.
    static CycNum from_poly(const QPoly& p, unsigned long long q);

    unsigned long long conductor() const { return ctx_->q(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat as_rational() const;  // throws InvalidInput when not rational

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum scaled(const Rat& s) const;
    CycNum pow(unsigned long long n) const;
    bool operator==(const CycNum& o) const;

    /// Embed into Z[zeta_m] for a multiple m of the conductor.
    CycNum promoted(unsigned long long m) const;
    /// Complex conjugate (zeta -> zeta^{q-1}).
    CycNum conj() const;

    std::complex<double> to_complex() const;
    std::string to_string(const std::string& var = "z") const;

private:
    CycNum(std::shared_ptr<const CyclotomicContext> ctx, std::vector<Rat> coeffs)
        : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}
    std::shared_ptr<const CyclotomicContext> ctx_;
    std::vector<Rat> coeffs_;  // length deg(phi_q), canonical
};

/// Canonical remainder of p mod the q-th cyclotomic polynomial. The result
/// is zero exactly when p vanishes at e^{2*pi*i/q}.
CycNum reduce_mod_cyclotomic(const QPoly& p, unsigned long long q);

/// Conductors above this bound refuse the dense canonical representation.
inline constexpr unsigned long long kMaxDenseConductor = 1ull << 20;

}  // namespace specpair
