#include "specpair/symbolic.hpp"

#include <sstream>

namespace specpair {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() || b != o.factors.end()) {
        if (b == o.factors.end() || (a != factors.end() && a->first < b->first)) {
            out.factors.push_back(*a++);
        } else if (a == factors.end() || b->first < a->first) {
            out.factors.push_back(*b++);
        } else {
            long long e = a->second + b->second;
            if (e != 0) out.factors.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::inverted() const {
    Monomial out = *this;
    for (auto& [id, e] : out.factors) e = -e;
    return out;
}

std::string Monomial::to_string() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : factors) {
        if (!first) os << "*";
        first = false;
        os << id;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

SymValue SymValue::from(const CycNum& c) { return term(Monomial::unit(), c); }

SymValue SymValue::term(Monomial m, const CycNum& c) {
    SymValue out;
    out.add_term(m, c);
    return out;
}

void SymValue::add_term(const Monomial& m, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool SymValue::is_zero() const { return terms_.empty(); }

SymValue SymValue::operator+(const SymValue& o) const {
    SymValue out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

SymValue SymValue::operator-(const SymValue& o) const {
    SymValue out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

SymValue SymValue::operator-() const {
    SymValue out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SymValue SymValue::operator*(const SymValue& o) const {
    SymValue out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

SymValue SymValue::conj() const {
    SymValue out;
    for (const auto& [m, c] : terms_) out.add_term(m.inverted(), c.conj());
    return out;
}

std::string SymValue::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_unit()) {
            os << c.to_string();
        } else {
            os << "(" << c.to_string() << ")*" << m.to_string();
        }
    }
    return os.str();
}

}  // namespace specpair
