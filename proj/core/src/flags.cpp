#include "specpair/flags.hpp"

#include <algorithm>
#include <sstream>

#include "specpair/oracle.hpp"

namespace specpair {

std::string to_string(ThresholdMode m) {
    return m == ThresholdMode::AsStated ? "as-stated" : "conservative";
}

ThresholdMode threshold_mode_from_string(const std::string& s) {
    if (s == "as-stated") return ThresholdMode::AsStated;
    if (s == "conservative") return ThresholdMode::Conservative;
    throw InvalidInput("unknown threshold mode: " + s);
}

int flag_r_threshold(int d, ThresholdMode mode) {
    return d / 2 + (mode == ThresholdMode::Conservative ? 1 : 0);
}

Flag theorem6_extend(const Flag& f, int d) {
    validate_flag(f);
    if (f.r >= d)
        throw InvalidInput("extension needs strip length below the spectrum size");
    if (f.s != d - f.r + 1)
        throw InvalidInput("extension expects exactly d-r+1 strips, got " +
                           std::to_string(f.s));
    return Flag{f.m, f.r, f.N, d};
}

namespace {

template <class V>
bool state_equal(const std::vector<V>& a, const std::vector<V>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

template <class V>
void trace_mechanism(const Gamma& g, const Flag& f, const Recurrence<V>& spec,
                     Theorem6Trace& trace) {
    const int d = g.size();
    const int needed = d - f.r + 1;  // strip count consumed by the dependence step

    // State vectors nu_k = (f_k, ..., f_{k+d-1}) at the strip starts.
    std::vector<std::vector<V>> mu;
    for (int j = 0; j < needed; ++j) {
        long long k0 = f.m + j * f.N + 1;
        std::vector<V> nu;
        nu.reserve(static_cast<std::size_t>(d));
        for (long long k = k0; k < k0 + d; ++k)
            nu.push_back(std::get<V>(exp_sum_value(g, k)));
        for (int i = 0; i < f.r; ++i)
            if (!value_is_zero(Value(nu[static_cast<std::size_t>(i)])))
                throw TheoremViolation("strip member nonzero after hypothesis check");
        mu.push_back(std::move(nu));
    }
    {
        std::ostringstream os;
        os << "state vectors at the " << needed
           << " strip starts each begin with " << f.r << " zero coordinates";
        trace.steps.push_back(os.str());
    }

    for (int j = 0; j + 1 < needed; ++j) {
        auto pushed = companion_power_apply(spec, mu[static_cast<std::size_t>(j)],
                                            static_cast<unsigned long long>(f.N));
        if (!state_equal(pushed, mu[static_cast<std::size_t>(j + 1)]))
            throw TheoremViolation("companion power failed to shift a state vector");
    }
    {
        std::ostringstream os;
        os << "companion matrix to the power N = " << f.N
           << " maps each state vector to the next";
        trace.steps.push_back(os.str());
    }

    int fresh = 0;
    for (int j = f.s; j < d; ++j)
        for (int i = 1; i <= f.r; ++i) {
            long long k = f.m + j * f.N + i;
            if (!exp_sum_is_zero(g, k))
                throw TheoremViolation("extended flag member " + std::to_string(k) +
                                       " does not vanish");
            ++fresh;
        }
    std::ostringstream os;
    os << "direct evaluation: all " << fresh
       << " members added by the extension vanish";
    trace.steps.push_back(os.str());
}

}  // namespace

Theorem6Trace theorem6_verify_on(const Gamma& g, const Flag& f) {
    if (g.mode() == GammaMode::Float)
        throw UnsupportedMode("the extension mechanism needs exact zero tests");
    validate_flag(f);
    const int d = g.size();
    if (f.r >= d) throw InvalidInput("strip length must be below the spectrum size");
    if (f.s < d - f.r + 1)
        throw InvalidInput("flag needs at least d-r+1 strips for the dependence step");

    for (long long k : flag_members(f))
        if (!exp_sum_is_zero(g, k))
            throw HypothesisViolation(k, "flag member " + std::to_string(k) +
                                             " is not an integer zero of the sum");

    Theorem6Trace trace;
    trace.extended = Flag{f.m, f.r, f.N, d};
    if (g.mode() == GammaMode::Exact)
        trace_mechanism(g, f, recurrence_coefficients_exact(g), trace);
    else
        trace_mechanism(g, f, recurrence_coefficients_symbolic(g), trace);
    trace.ok = true;
    return trace;
}

DenominatorBound theorem4_conclusion(int d, const Flag& f, ThresholdMode mode) {
    validate_flag(f);
    if (f.s != d)
        throw InvalidInput("denominator bound needs a full r x d flag; got s = " +
                           std::to_string(f.s));
    const int rmin = flag_r_threshold(d, mode);
    if (f.r < rmin || f.r >= d)
        throw InvalidInput("strip length r = " + std::to_string(f.r) +
                           " outside the admissible range [" + std::to_string(rmin) +
                           ", " + std::to_string(d - 1) + "] for d = " + std::to_string(d));
    DenominatorBound bound;
    bound.N = f.N;
    bound.statement = "every spectrum entry lies in (1/" + std::to_string(f.N) +
                      ")Z mod 1";
    return bound;
}

RationalityCertificate theorem4_verify_on(const Gamma& g, const Flag& f,
                                          ThresholdMode mode) {
    if (g.mode() == GammaMode::Float)
        throw UnsupportedMode("rationality certification needs exact zero tests");
    const int d = g.size();
    DenominatorBound bound = theorem4_conclusion(d, f, mode);

    for (long long k : flag_members(f))
        if (!exp_sum_is_zero(g, k))
            throw HypothesisViolation(k, "flag member " + std::to_string(k) +
                                             " is not an integer zero of the sum");

    RationalityCertificate cert;
    cert.theorem = CertTheorem::T4;
    cert.threshold_mode = to_string(mode);
    cert.witness_flag = f;
    cert.denominator_divides = bound.N;
    {
        std::ostringstream os;
        os << "flag (m=" << f.m << ", r=" << f.r << ", N=" << f.N << ", s=" << f.s
           << ") lies in the integer zero set (checked by direct evaluation)";
        cert.steps.push_back(os.str());
    }

    for (int j = 0; j < d; ++j) {
        const auto& e = g.entries()[static_cast<std::size_t>(j)];
        Rat scaled = reduced(e.rational * rat_of(bound.N));
        if (!e.gens.empty() || !is_integer(scaled))
            throw TheoremViolation(
                "flag hypothesis holds but entry " + std::to_string(j) +
                " does not satisfy the denominator bound N = " + std::to_string(bound.N));
    }
    cert.verdict = CertVerdict::Rational;
    cert.class_count = 1;
    {
        std::ostringstream os;
        os << "checked exactly: N*gamma_j is an integer for every entry (N = "
           << bound.N << "), so all entries share one rational class";
        cert.steps.push_back(os.str());
    }
    return cert;
}

std::string to_string(SpectralStatus s) {
    switch (s) {
        case SpectralStatus::Spectral: return "Spectral";
        case SpectralStatus::NotSpectral: return "NotSpectral";
        case SpectralStatus::Unknown: return "Unknown";
    }
    return "?";
}

PipelineResult theorem7_pipeline(const Cluster& c, std::optional<std::vector<int>> r_choices,
                                 ThresholdMode mode) {
    const int d = c.d();
    const DifferenceSet diffs = difference_set(c);
    const int rmin = std::max(1, flag_r_threshold(d, mode));

    std::vector<int> rs;
    if (r_choices) {
        for (int r : *r_choices)
            if (r >= rmin && r < d) rs.push_back(r);
    } else {
        for (int r = rmin; r < d; ++r) rs.push_back(r);
    }

    for (int r : rs) {
        auto flags = find_flags(diffs.values, r, d - r + 1);
        if (flags.empty()) continue;
        const Flag& f = flags.front();
        Flag extended = theorem6_extend(f, d);
        DenominatorBound bound = theorem4_conclusion(d, extended, mode);

        RationalityCertificate cert;
        cert.verdict = CertVerdict::Rational;
        cert.theorem = CertTheorem::T7;
        cert.class_count = 1;
        cert.denominator_divides = bound.N;
        cert.witness_flag = f;
        cert.threshold_mode = to_string(mode);
        {
            std::ostringstream os;
            os << "find_flags: " << f.r << " x " << f.s << " flag (m=" << f.m
               << ", N=" << f.N << ") contained in (A-A) \\ {0}";
            cert.steps.push_back(os.str());
        }
        {
            std::ostringstream os;
            os << "strip extension: the flag extends to the full " << f.r << " x " << d
               << " shape inside the integer zero set of any size-" << d << " spectrum";
            cert.steps.push_back(os.str());
        }
        {
            std::ostringstream os;
            os << "denominator bound: " << bound.statement
               << " for every spectrum of the cluster";
            cert.steps.push_back(os.str());
        }
        return cert;
    }

    NoApplicableFlag none;
    none.r_tried = rs;
    none.note = "no admissible flag of any shape r x (d-r+1) is contained in (A-A) \\ {0}";
    return none;
}

namespace {

unsigned long long binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long out = 1;
    for (unsigned long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

/// Scans size-d subsets {0} u {chosen} of `values` (sorted, 0 excluded) in
/// lexicographic order and returns the first spectrum that verifies.
std::optional<Gamma> first_verifying(const Cluster& c, const std::vector<Rat>& values) {
    const int need = c.d() - 1;
    const int n = static_cast<int>(values.size());
    if (need > n) return {};
    std::vector<int> idx(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<FrequencyValue> entries{FrequencyValue{Rat(0), {}}};
        for (int i : idx) entries.push_back({values[static_cast<std::size_t>(i)], {}});
        Gamma g = Gamma::make(std::move(entries), GammaMode::Exact);
        if (verify_pair(c, g).is_spectral_pair) return g;

        int pos = need - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - need + pos) --pos;
        if (pos < 0) return {};
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < need; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

}  // namespace

SpectralityVerdict decide_spectrality(const Cluster& c, std::optional<long long> den_max,
                                      ThresholdMode mode) {
    SpectralityVerdict verdict;
    PipelineResult pipeline = theorem7_pipeline(c, {}, mode);

    if (auto* cert = std::get_if<RationalityCertificate>(&pipeline)) {
        const long long n = *cert->denominator_divides;
        std::vector<Rat> grid;
        for (long long j = 1; j < n; ++j) grid.push_back(make_rat(j, n));
        verdict.certificate = *cert;
        verdict.search.flag_N = n;
        verdict.search.grid_size =
            binomial(static_cast<unsigned long long>(n - 1),
                     static_cast<unsigned long long>(c.d() - 1));
        if (auto witness = first_verifying(c, grid)) {
            verdict.status = SpectralStatus::Spectral;
            verdict.witness_gamma = std::move(*witness);
            verdict.search.exhausted = false;
        } else {
            verdict.status = SpectralStatus::NotSpectral;
            verdict.search.exhausted = true;
        }
        return verdict;
    }

    if (den_max) {
        EnumerationResult res = enumerate_rational_spectra(c, *den_max);
        verdict.search.den_max = den_max;
        verdict.search.grid_size = res.candidates_scanned;
        if (!res.spectra.empty()) {
            verdict.status = SpectralStatus::Spectral;
            verdict.witness_gamma = res.spectra.front();
            verdict.search.exhausted = false;
        } else {
            verdict.status = SpectralStatus::Unknown;  // semi-decision only
            verdict.search.exhausted = true;
        }
        return verdict;
    }

    verdict.status = SpectralStatus::Unknown;
    return verdict;
}

}  // namespace specpair
