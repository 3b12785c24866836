#include "specpair/rational.hpp"

namespace specpair {

Rat make_rat(long long num, long long den) {
    if (den == 0) throw InvalidInput("fraction with zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

Rat frac_mod1(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return reduced(r - Rat(fl));
}

long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw InvalidInput("integer out of 64-bit range: " + z.get_str());
    return static_cast<long long>(z.get_si());
}

long long num_ll(const Rat& r) { return to_ll(Int(r.get_num())); }
long long den_ll(const Rat& r) { return to_ll(Int(r.get_den())); }

Int lcm(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::string to_string(const Rat& r) {
    return is_integer(r) ? r.get_num().get_str() : r.get_str();
}

}  // namespace specpair
