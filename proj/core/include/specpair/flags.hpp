#pragma once

#include <variant>

#include "specpair/pair.hpp"
#include "specpair/recurrence.hpp"

namespace specpair {

/// Strip-length threshold for the flag-implies-rationality conclusion.
/// AsStated admits r >= floor(d/2); Conservative tightens to r >= floor(d/2)+1.
/// Certificates record which mode produced them.
enum class ThresholdMode { AsStated, Conservative };

std::string to_string(ThresholdMode m);
ThresholdMode threshold_mode_from_string(const std::string& s);
int flag_r_threshold(int d, ThresholdMode mode);

/// Conclusion extracted from a certifying flag of stride N: every spectrum
/// entry lies on the lattice (1/N)Z mod 1.
struct DenominatorBound {
    long long N = 1;
    std::string statement;
};

/// Widen an r x (d-r+1) flag to the full r x d shape. The added strips are
/// guaranteed to stay inside the integer zero set of any size-d spectrum
/// whose zero set contains the original flag. Requires s = d-r+1 and r < d.
Flag theorem6_extend(const Flag& f, int d);

/// Replay of the extension mechanism against a concrete gamma:
/// (i) the state vectors at the strip starts have their first r
/// coordinates zero, (ii) the N-th companion power maps each state vector to
/// the next, (iii) the extension's new members vanish by direct evaluation.
struct Theorem6Trace {
    bool ok = false;
    Flag extended;
    std::vector<std::string> steps;
};

/// Throws HypothesisViolation at the first flag member where the frequency
/// sum does not vanish; UnsupportedMode for Float gammas.
Theorem6Trace theorem6_verify_on(const Gamma& g, const Flag& f);

/// Denominator bound from a full r x d flag, with floor(d/2) <= r < d
/// (threshold per mode). No concrete gamma is needed: the bound holds for
/// every size-d spectrum whose zero set contains the flag.
DenominatorBound theorem4_conclusion(int d, const Flag& f,
                                     ThresholdMode mode = ThresholdMode::AsStated);

/// Concrete-gamma validator for the same conclusion: checks the flag
/// hypothesis by direct evaluation, then certifies N*gamma_j integral for
/// every entry. A hypothesis-satisfying gamma that breaks the conclusion
/// raises TheoremViolation (a bug, not a data error).
RationalityCertificate theorem4_verify_on(const Gamma& g, const Flag& f,
                                          ThresholdMode mode = ThresholdMode::AsStated);

struct NoApplicableFlag {
    std::vector<int> r_tried;
    std::string note;
};

using PipelineResult = std::variant<RationalityCertificate, NoApplicableFlag>;

/// Searches A - A for an r x (d-r+1) flag over the admissible strip lengths
/// (ascending), extends the first hit to r x d and extracts the denominator
/// bound. The certificate pins the flag, the stride and the threshold mode.
PipelineResult theorem7_pipeline(const Cluster& c,
                                 std::optional<std::vector<int>> r_choices = {},
                                 ThresholdMode mode = ThresholdMode::AsStated);

enum class SpectralStatus { Spectral, NotSpectral, Unknown };

std::string to_string(SpectralStatus s);

struct SearchRecord {
    std::optional<long long> flag_N;   // stride of the certifying flag, if any
    std::optional<long long> den_max;  // fallback denominator cap, if used
    unsigned long long grid_size = 0;  // candidate gammas in the scanned grid
    bool exhausted = false;            // the whole grid was scanned
};

struct SpectralityVerdict {
    SpectralStatus status = SpectralStatus::Unknown;
    std::optional<Gamma> witness_gamma;
    std::optional<RationalityCertificate> certificate;
    SearchRecord search;
};

/// Decides spectrality when a flag certificate is available: the denominator
/// bound N makes the grid {0, 1/N, ..., (N-1)/N} complete, so scanning its
/// size-d subsets with leading 0 is a full decision. Without a flag, a given
/// den_max drives a semi-decision through the rational-spectrum enumerator
/// (Spectral if found, Unknown otherwise); with nothing to go on the verdict
/// is Unknown. Witnesses are reported in lexicographically least order.
SpectralityVerdict decide_spectrality(const Cluster& c,
                                      std::optional<long long> den_max = {},
                                      ThresholdMode mode = ThresholdMode::AsStated);

}  // namespace specpair
