#include "specpair/recurrence.hpp"

namespace specpair {

namespace {

template <class V>
Recurrence<V> from_roots(const std::vector<V>& roots) {
    const std::size_t d = roots.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (roots[i] == roots[j])
                throw DegenerateInput("frequency terms must be pairwise distinct");

    // Expand prod_j (x - z_j); b[i] is the coefficient of x^i.
    std::vector<V> b{RingOps<V>::one()};
    for (const auto& z : roots) {
        std::vector<V> next(b.size() + 1, RingOps<V>::zero());
        for (std::size_t i = 0; i < b.size(); ++i) {
            next[i + 1] = next[i + 1] + b[i];
            next[i] = next[i] - z * b[i];
        }
        b = std::move(next);
    }
    Recurrence<V> spec;
    spec.coeffs.reserve(d);
    for (std::size_t i = 0; i < d; ++i) spec.coeffs.push_back(RingOps<V>::zero() - b[i]);
    return spec;
}

}  // namespace

Recurrence<CycNum> recurrence_coefficients_exact(const Gamma& g) {
    std::vector<CycNum> roots;
    roots.reserve(static_cast<std::size_t>(g.size()));
    for (int j = 0; j < g.size(); ++j) roots.push_back(root_exact(g, j));
    return from_roots(roots);
}

Recurrence<SymValue> recurrence_coefficients_symbolic(const Gamma& g) {
    std::vector<SymValue> roots;
    roots.reserve(static_cast<std::size_t>(g.size()));
    for (int j = 0; j < g.size(); ++j) roots.push_back(root_symbolic(g, j));
    return from_roots(roots);
}

Recurrence<Cplx> recurrence_coefficients_float(const Gamma& g) {
    std::vector<Cplx> roots;
    roots.reserve(static_cast<std::size_t>(g.size()));
    for (int j = 0; j < g.size(); ++j) roots.push_back(root_float(g, j));
    return from_roots(roots);
}

RecurrenceSpec recurrence_coefficients(const Gamma& g) {
    switch (g.mode()) {
        case GammaMode::Exact: return recurrence_coefficients_exact(g);
        case GammaMode::Symbolic: return recurrence_coefficients_symbolic(g);
        case GammaMode::Float: return recurrence_coefficients_float(g);
    }
    throw UnsupportedMode("unknown gamma mode");
}

}  // namespace specpair
