#pragma once

#include <optional>
#include <string>

#include "specpair/cluster.hpp"
#include "specpair/flag.hpp"
#include "specpair/spectrum.hpp"

namespace specpair {

/// Outcome of the orthogonality scan: the pair stands iff the frequency sum
/// vanishes at every nonzero difference of the cluster. When it fails, the
/// recorded witness is the failing k of smallest |k| (positive first).
struct PairVerdict {
    bool is_spectral_pair = false;
    std::optional<long long> failing_k;
    std::optional<std::string> failing_value;
    DifferenceSet checked_set;
    bool heuristic = false;  // float-mode verdicts are tolerance based
};

/// Checks (A - A) \ {0} against the integer zeros of the frequency sum.
/// Requires |A| = |Gamma|; the criterion is an equivalence only at matching
/// cardinality. Exact in Exact/Symbolic modes; tolerance-based in Float mode.
PairVerdict verify_pair(const Cluster& c, const Gamma& g, double tol = -1.0);

enum class CertVerdict { Rational, NotASpectralPair, ModelContradiction };
enum class CertTheorem { T3, T4, T7, Laba };

std::string to_string(CertVerdict v);
std::string to_string(CertTheorem t);

/// Auditable rationality conclusion: which criterion fired, the class or
/// flag witnesses, a denominator bound when one is implied, and the ordered
/// deduction steps that produced it.
struct RationalityCertificate {
    CertVerdict verdict = CertVerdict::Rational;
    CertTheorem theorem = CertTheorem::T3;
    int class_count = 0;
    std::optional<long long> denominator_divides;
    std::optional<Flag> witness_flag;
    std::vector<std::string> steps;
    std::optional<std::string> threshold_mode;
};

/// verify_pair failed where a spectral pair was required.
struct NotASpectralPairError : Error {
    PairVerdict verdict;
    NotASpectralPairError(PairVerdict v, const std::string& what_)
        : Error(what_), verdict(std::move(v)) {}
};

/// For a verified pair: a single rational equivalence class certifies that
/// the whole spectrum is rational (no finite exceptional zeros can hide in
/// A - A). More than one class for a verified pair is impossible for genuine
/// spectra; under the symbolic model it is surfaced as ModelContradiction
/// rather than silently accepted. Throws NotASpectralPairError when the pair
/// fails, and UnsupportedMode for Float gammas.
RationalityCertificate theorem3_certificate(const Cluster& c, const Gamma& g);

}  // namespace specpair
