#pragma once

#include <variant>
#include <vector>

#include "specpair/exp_sums.hpp"

namespace specpair {

template <class V>
struct RingOps;

template <>
struct RingOps<CycNum> {
    static CycNum zero() { return CycNum::zero(1); }
    static CycNum one() { return CycNum::one(1); }
};
template <>
struct RingOps<SymValue> {
    static SymValue zero() { return SymValue::zero(); }
    static SymValue one() { return SymValue::from(CycNum::one(1)); }
};
template <>
struct RingOps<Cplx> {
    static Cplx zero() { return {0.0, 0.0}; }
    static Cplx one() { return {1.0, 0.0}; }
};

/// d-term linear recurrence f_{k+d} = sum_i c_i f_{k+i} whose characteristic
/// polynomial x^d - sum_i c_i x^i factors as prod_j (x - z_j) over the
/// frequency terms z_j. The power sums of the z_j satisfy it for every k.
template <class V>
struct Recurrence {
    std::vector<V> coeffs;  // c_0 ... c_{d-1}
    int order() const { return static_cast<int>(coeffs.size()); }
};

using RecurrenceSpec =
    std::variant<Recurrence<CycNum>, Recurrence<SymValue>, Recurrence<Cplx>>;

/// Coefficients in the gamma's own value domain, by expanding
/// prod_j (x - z_j). Throws DegenerateInput when two terms coincide.
RecurrenceSpec recurrence_coefficients(const Gamma& g);

Recurrence<CycNum> recurrence_coefficients_exact(const Gamma& g);
Recurrence<SymValue> recurrence_coefficients_symbolic(const Gamma& g);
Recurrence<Cplx> recurrence_coefficients_float(const Gamma& g);

/// One application of the companion matrix: (f_k,...,f_{k+d-1}) becomes
/// (f_{k+1},...,f_{k+d}).
template <class V>
std::vector<V> companion_step(const Recurrence<V>& spec, const std::vector<V>& state) {
    const std::size_t d = spec.coeffs.size();
    if (state.size() != d) throw InvalidInput("state vector length must equal the order");
    std::vector<V> out(state.begin() + 1, state.end());
    V last = RingOps<V>::zero();
    for (std::size_t i = 0; i < d; ++i) last = last + spec.coeffs[i] * state[i];
    out.push_back(std::move(last));
    return out;
}

/// U^n applied to a state vector via binary exponentiation of the companion
/// matrix U; n = 0 returns the state unchanged. O(d^3 log n) ring operations.
template <class V>
std::vector<V> companion_power_apply(const Recurrence<V>& spec, std::vector<V> state,
                                     unsigned long long n) {
    const std::size_t d = spec.coeffs.size();
    if (state.size() != d) throw InvalidInput("state vector length must equal the order");
    if (n == 0 || d == 0) return state;

    using Mat = std::vector<std::vector<V>>;
    auto mat_mul = [d](const Mat& a, const Mat& b) {
        Mat out(d, std::vector<V>(d, RingOps<V>::zero()));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t j = 0; j < d; ++j)
                    out[i][j] = out[i][j] + a[i][l] * b[l][j];
        return out;
    };

    Mat u(d, std::vector<V>(d, RingOps<V>::zero()));
    for (std::size_t i = 0; i + 1 < d; ++i) u[i][i + 1] = RingOps<V>::one();
    for (std::size_t j = 0; j < d; ++j) u[d - 1][j] = spec.coeffs[j];

    Mat acc(d, std::vector<V>(d, RingOps<V>::zero()));
    for (std::size_t i = 0; i < d; ++i) acc[i][i] = RingOps<V>::one();
    while (n > 0) {
        if (n & 1) acc = mat_mul(acc, u);
        n >>= 1;
        if (n) u = mat_mul(u, u);
    }

    std::vector<V> out(d, RingOps<V>::zero());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[i] = out[i] + acc[i][j] * state[j];
    return out;
}

}  // namespace specpair
