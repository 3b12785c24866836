#include "specpair/exp_sums.hpp"

#include <cmath>
#include <numbers>

#include "specpair/rootsum.hpp"

namespace specpair {

namespace {

/// Exponent t_j with z_j = zeta_q^{t_j} * (generator part), q = conductor.
long long root_exponent(const Gamma& g, int j) {
    const auto& e = g.entries().at(static_cast<std::size_t>(j));
    unsigned long long q = g.conductor();
    Rat t = e.rational * Rat(static_cast<unsigned long>(q));
    if (!is_integer(t)) throw TheoremViolation("conductor does not clear an entry denominator");
    return num_ll(t);
}

long long mul_mod(long long t, long long k, long long q) {
    long long kin = ((k % q) + q) % q;
    return static_cast<long long>((static_cast<__int128>(t) * kin) % q);
}

Monomial entry_monomial(const Gamma& g, int j, long long k) {
    Monomial m;
    for (const auto& id : g.generators()) {
        long long n = g.gen_exponent(j, id);
        if (n == 0) continue;
        __int128 e = static_cast<__int128>(n) * k;
        long long ell = static_cast<long long>(e);
        if (static_cast<__int128>(ell) != e)
            throw InvalidInput("generator exponent overflow");
        if (ell != 0) m.factors.emplace_back(id, ell);
    }
    return m;
}

}  // namespace

CycNum root_exact(const Gamma& g, int j) {
    if (g.mode() != GammaMode::Exact)
        throw UnsupportedMode("exact roots need an exact-mode gamma");
    return CycNum::root_power(g.conductor(), root_exponent(g, j));
}

SymValue root_symbolic(const Gamma& g, int j) {
    if (g.mode() == GammaMode::Float)
        throw UnsupportedMode("symbolic roots need exact or symbolic mode");
    return SymValue::term(entry_monomial(g, j, 1),
                          CycNum::root_power(g.conductor(), root_exponent(g, j)));
}

Cplx root_float(const Gamma& g, int j) {
    double gamma = g.mode() == GammaMode::Float
                       ? g.float_entries().at(static_cast<std::size_t>(j))
                       : to_double(g.entries().at(static_cast<std::size_t>(j)).rational);
    double ang = 2.0 * std::numbers::pi * gamma;
    return {std::cos(ang), std::sin(ang)};
}

Value exp_sum_value(const Gamma& g, long long k) {
    const int d = g.size();
    switch (g.mode()) {
        case GammaMode::Exact: {
            unsigned long long q = g.conductor();
            std::vector<Rat> acc(q, Rat(0));
            for (int j = 0; j < d; ++j)
                acc[static_cast<std::size_t>(mul_mod(root_exponent(g, j), k,
                                                     static_cast<long long>(q)))] += 1;
            return CycNum::from_poly(QPoly(std::move(acc)), q);
        }
        case GammaMode::Symbolic: {
            unsigned long long q = g.conductor();
            SymValue acc;
            for (int j = 0; j < d; ++j) {
                long long e = mul_mod(root_exponent(g, j), k, static_cast<long long>(q));
                acc += SymValue::term(entry_monomial(g, j, k), CycNum::root_power(q, e));
            }
            return acc;
        }
        case GammaMode::Float:
            return exp_sum_float(g, k);
    }
    throw UnsupportedMode("unknown gamma mode");
}

std::vector<Value> power_sum_sequence(const Gamma& g, long long k_lo, long long k_hi) {
    if (k_lo > k_hi) throw InvalidInput("power sum range is empty");
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (long long k = k_lo; k <= k_hi; ++k) out.push_back(exp_sum_value(g, k));
    return out;
}

bool exp_sum_is_zero(const Gamma& g, long long k, double tol) {
    const int d = g.size();
    switch (g.mode()) {
        case GammaMode::Exact: {
            RootSum s;
            s.q = g.conductor();
            for (int j = 0; j < d; ++j)
                s.add(mul_mod(root_exponent(g, j), k, static_cast<long long>(s.q)), Rat(1));
            return root_sum_is_zero(s);
        }
        case GammaMode::Symbolic: {
            unsigned long long q = g.conductor();
            std::map<Monomial, RootSum> groups;
            for (int j = 0; j < d; ++j) {
                auto& s = groups.try_emplace(entry_monomial(g, j, k), RootSum{q, {}})
                              .first->second;
                s.add(mul_mod(root_exponent(g, j), k, static_cast<long long>(q)), Rat(1));
            }
            for (const auto& [m, s] : groups)
                if (!root_sum_is_zero(s)) return false;
            return true;
        }
        case GammaMode::Float: {
            if (tol < 0) tol = default_float_tol(d);
            return std::abs(exp_sum_float(g, k)) < tol;
        }
    }
    throw UnsupportedMode("unknown gamma mode");
}

Cplx exp_sum_float(const Gamma& g, long long k) {
    if (g.mode() == GammaMode::Symbolic && !g.generators().empty())
        throw UnsupportedMode("symbolic generators have no numeric value");
    const int d = g.size();
    Cplx acc(0.0, 0.0);
    for (int j = 0; j < d; ++j) {
        double gamma = g.mode() == GammaMode::Float
                           ? g.float_entries()[static_cast<std::size_t>(j)]
                           : to_double(g.entries()[static_cast<std::size_t>(j)].rational);
        double frac = gamma * static_cast<double>(k);
        frac -= std::floor(frac);
        double ang = 2.0 * std::numbers::pi * frac;
        acc += Cplx(std::cos(ang), std::sin(ang));
    }
    return acc;
}

}  // namespace specpair
