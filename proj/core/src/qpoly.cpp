#include "specpair/qpoly.hpp"

#include <sstream>

namespace specpair {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::one() { return QPoly({Rat(1)}); }

QPoly QPoly::monomial(std::size_t k, const Rat& coeff) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = coeff;
    return QPoly(std::move(c));
}

QPoly QPoly::x_pow_minus_one(unsigned long long q) {
    std::vector<Rat> c(q + 1, Rat(0));
    c[0] = Rat(-1);
    c[q] = Rat(1);
    return QPoly(std::move(c));
}

const Rat& QPoly::leading() const {
    if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
    return c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
    std::vector<Rat> out(c_);
    for (auto& x : out) x = -x;
    return QPoly(std::move(out));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
    if (degree() < divisor.degree()) return {QPoly(), *this};
    std::vector<Rat> rem(c_);
    std::vector<Rat> quot(c_.size() - divisor.c_.size() + 1, Rat(0));
    const Rat& lead = divisor.leading();
    for (std::size_t i = rem.size(); i-- >= divisor.c_.size();) {
        if (rem[i] == 0) continue;
        Rat factor = rem[i] / lead;
        std::size_t shift = i - (divisor.c_.size() - 1);
        quot[shift] = factor;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j)
            rem[shift + j] -= factor * divisor.c_[j];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

bool QPoly::divisible_by(const QPoly& divisor) const {
    return divmod(divisor).second.is_zero();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::complex<double> QPoly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
    return acc;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << specpair::to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace specpair
