#include "specpair/value.hpp"

#include <cstdio>

namespace specpair {

bool value_is_zero(const Value& v, double tol) {
    if (const auto* c = std::get_if<CycNum>(&v)) return c->is_zero();
    if (const auto* s = std::get_if<SymValue>(&v)) return s->is_zero();
    const Cplx z = std::get<Cplx>(v);
    return tol > 0.0 ? std::abs(z) < tol : z == Cplx(0.0, 0.0);
}

std::string value_to_string(const Value& v) {
    if (const auto* c = std::get_if<CycNum>(&v)) return c->to_string();
    if (const auto* s = std::get_if<SymValue>(&v)) return s->to_string();
    const Cplx z = std::get<Cplx>(v);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

Value value_conj(const Value& v) {
    if (const auto* c = std::get_if<CycNum>(&v)) return c->conj();
    if (const auto* s = std::get_if<SymValue>(&v)) return s->conj();
    return std::conj(std::get<Cplx>(v));
}

bool value_equal(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    if (const auto* c = std::get_if<CycNum>(&a)) return *c == std::get<CycNum>(b);
    if (const auto* s = std::get_if<SymValue>(&a)) return *s == std::get<SymValue>(b);
    return std::get<Cplx>(a) == std::get<Cplx>(b);
}

}  // namespace specpair
