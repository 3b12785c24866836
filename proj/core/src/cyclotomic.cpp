#include "specpair/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace specpair {

namespace {

std::mutex g_phi_mutex;
std::map<unsigned long long, QPoly> g_phi_cache;

std::vector<unsigned long long> proper_divisors(unsigned long long q) {
    std::vector<unsigned long long> divs;
    for (unsigned long long e = 1; e * e <= q; ++e) {
        if (q % e) continue;
        divs.push_back(e);
        if (e != q / e) divs.push_back(q / e);
    }
    std::erase(divs, q);
    std::sort(divs.begin(), divs.end());
    return divs;
}

const QPoly& cyclotomic_locked(unsigned long long q) {
    auto it = g_phi_cache.find(q);
    if (it != g_phi_cache.end()) return it->second;
    QPoly phi = QPoly::x_pow_minus_one(q);
    for (unsigned long long e : proper_divisors(q)) {
        auto [quot, rem] = phi.divmod(cyclotomic_locked(e));
        if (!rem.is_zero()) throw TheoremViolation("cyclotomic division left a remainder");
        phi = std::move(quot);
    }
    return g_phi_cache.emplace(q, std::move(phi)).first->second;
}

}  // namespace

const QPoly& cyclotomic(unsigned long long q) {
    if (q == 0) throw InvalidInput("cyclotomic polynomial undefined for q = 0");
    std::lock_guard lock(g_phi_mutex);
    return cyclotomic_locked(q);
}

unsigned long long totient(unsigned long long q) {
    if (q == 0) throw InvalidInput("totient undefined for q = 0");
    unsigned long long n = q, out = q;
    for (unsigned long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out -= out / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) out -= out / n;
    return out;
}

std::shared_ptr<const CyclotomicContext> CyclotomicContext::get(unsigned long long q) {
    if (q == 0) throw InvalidInput("conductor must be positive");
    if (q > kMaxDenseConductor)
        throw UnsupportedMode("conductor " + std::to_string(q) +
                              " exceeds the dense representation limit");
    static std::mutex mutex;
    static std::map<unsigned long long, std::shared_ptr<const CyclotomicContext>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto ctx = std::shared_ptr<const CyclotomicContext>(
        new CyclotomicContext(q, cyclotomic(q)));
    cache.emplace(q, ctx);
    return ctx;
}

namespace {

/// In-place remainder of `c` (coefficients of any degree) mod phi, which is
/// monic; the result has exactly deg(phi) entries.
std::vector<Rat> remainder_coeffs(std::vector<Rat> c, const QPoly& phi) {
    const auto& p = phi.coeffs();
    const std::size_t dsize = p.size();  // deg(phi) + 1, and deg(phi) >= 1
    for (std::size_t i = c.size(); i-- > dsize - 1;) {
        if (c[i] == 0) continue;
        Rat factor = c[i];  // phi is monic
        std::size_t shift = i - (dsize - 1);
        for (std::size_t j = 0; j < dsize; ++j) c[shift + j] -= factor * p[j];
    }
    c.resize(dsize - 1, Rat(0));
    return c;
}

}  // namespace

CycNum CycNum::zero(unsigned long long q) {
    auto ctx = CyclotomicContext::get(q);
    std::vector<Rat> c(ctx->degree(), Rat(0));
    return CycNum(std::move(ctx), std::move(c));
}

CycNum CycNum::from_rational(const Rat& r, unsigned long long q) {
    CycNum out = zero(q);
    out.coeffs_[0] = reduced(r);
    return out;
}

CycNum CycNum::root_power(unsigned long long q, long long e) {
    long long qe = static_cast<long long>(q);
    long long m = ((e % qe) + qe) % qe;
    std::vector<Rat> c(static_cast<std::size_t>(m) + 1, Rat(0));
    c.back() = Rat(1);
    return from_poly(QPoly(std::move(c)), q);
}

CycNum CycNum::from_poly(const QPoly& p, unsigned long long q) {
    auto ctx = CyclotomicContext::get(q);
    std::vector<Rat> c = remainder_coeffs(p.coeffs(), ctx->phi());
    return CycNum(std::move(ctx), std::move(c));
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat CycNum::as_rational() const {
    if (!is_rational()) throw InvalidInput("cyclotomic value is not rational: " + to_string());
    return coeffs_.empty() ? Rat(0) : coeffs_[0];
}

CycNum CycNum::promoted(unsigned long long m) const {
    unsigned long long q = conductor();
    if (m == q) return *this;
    if (m % q != 0)
        throw InvalidInput("cannot embed conductor " + std::to_string(q) +
                           " into non-multiple " + std::to_string(m));
    unsigned long long stride = m / q;
    std::vector<Rat> c(coeffs_.size() * stride, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) c[i * stride] = coeffs_[i];
    return from_poly(QPoly(std::move(c)), m);
}

namespace {
unsigned long long common_conductor(unsigned long long a, unsigned long long b) {
    return to_ll(specpair::lcm(Int(static_cast<unsigned long>(a)),
                               Int(static_cast<unsigned long>(b))));
}
}  // namespace

CycNum CycNum::operator+(const CycNum& o) const {
    unsigned long long m = common_conductor(conductor(), o.conductor());
    CycNum a = promoted(m), b = o.promoted(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const {
    unsigned long long m = common_conductor(conductor(), o.conductor());
    CycNum a = promoted(m), b = o.promoted(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycNum CycNum::operator*(const CycNum& o) const {
    unsigned long long m = common_conductor(conductor(), o.conductor());
    CycNum a = promoted(m), b = o.promoted(m);
    if (a.is_zero() || b.is_zero()) return zero(m);
    std::vector<Rat> prod(2 * a.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return from_poly(QPoly(std::move(prod)), m);
}

CycNum CycNum::scaled(const Rat& s) const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

CycNum CycNum::pow(unsigned long long n) const {
    CycNum base = *this;
    CycNum acc = one(conductor());
    while (n > 0) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

bool CycNum::operator==(const CycNum& o) const {
    unsigned long long m = common_conductor(conductor(), o.conductor());
    return promoted(m).coeffs_ == o.promoted(m).coeffs_;
}

CycNum CycNum::conj() const {
    unsigned long long q = conductor();
    std::vector<Rat> c(q, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        c[(q - i) % q] += coeffs_[i];
    }
    return from_poly(QPoly(std::move(c)), q);
}

std::complex<double> CycNum::to_complex() const {
    unsigned long long q = conductor();
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(q);
        acc += to_double(coeffs_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string CycNum::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    return QPoly(coeffs_).to_string(var);
}

CycNum reduce_mod_cyclotomic(const QPoly& p, unsigned long long q) {
    return CycNum::from_poly(p, q);
}

}  // namespace specpair
