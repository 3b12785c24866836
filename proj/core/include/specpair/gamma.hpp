#pragma once

#include <map>
#include <string>
#include <vector>

#include "specpair/rational.hpp"

namespace specpair {

enum class GammaMode { Exact, Symbolic, Float };

std::string to_string(GammaMode m);

/// One frequency in [0, 1): a rational part plus an optional combination of
/// formal generators with rational coefficients. Exact-mode entries carry no
/// generators.
struct FrequencyValue {
    Rat rational;
    std::map<std::string, Rat> gens;

    bool operator==(const FrequencyValue&) const = default;
};

/// Spectrum candidate: d frequencies in [0, 1), the first one zero, pairwise
/// distinct. The periodization adds all integer translates of each entry.
/// Immutable after construction.
class Gamma {
public:
    /// Validates and canonicalizes Exact/Symbolic entries.
    /// Throws InvalidInput on duplicates, a nonzero first entry, entries
    /// outside [0, 1), or generators present in Exact mode.
    static Gamma make(std::vector<FrequencyValue> entries, GammaMode mode);
    static Gamma make_float(std::vector<double> entries);

    GammaMode mode() const { return mode_; }
    int size() const;

    const std::vector<FrequencyValue>& entries() const;     // Exact/Symbolic
    const std::vector<double>& float_entries() const;       // Float

    /// lcm of the denominators of the rational parts (Exact/Symbolic).
    unsigned long long conductor() const;

    /// Sorted ids of all generators that appear (Symbolic; empty otherwise).
    const std::vector<std::string>& generators() const { return gen_ids_; }
    /// Integer scale B for a generator: every coefficient of it is n/B.
    long long generator_scale(const std::string& id) const;
    /// Integerized coefficient n of generator `id` in entry j (0 if absent).
    long long gen_exponent(int j, const std::string& id) const;

    /// Entry-wise map gamma -> (1 - gamma) mod 1, preserving the leading zero.
    Gamma reflected() const;

    /// Exact entries converted to a Float-mode copy.
    Gamma as_float() const;

    bool operator==(const Gamma& o) const;

private:
    Gamma() = default;
    GammaMode mode_ = GammaMode::Exact;
    std::vector<FrequencyValue> entries_;
    std::vector<double> float_entries_;
    std::vector<std::string> gen_ids_;
    std::map<std::string, long long> gen_scale_;
    unsigned long long conductor_ = 1;
};

/// Default tolerance for floating-point zero tests on d unit-modulus terms.
inline double default_float_tol(int d) { return 1e-9 * static_cast<double>(d); }

}  // namespace specpair
