#include "specpair/spectrum.hpp"

#include <algorithm>

#include "specpair/cyclotomic.hpp"
#include "specpair/rootsum.hpp"

namespace specpair {

RationalClassPartition rational_classes(const Gamma& g) {
    if (g.mode() == GammaMode::Float)
        throw UnsupportedMode("float entries have no decidable rational classes");

    const auto& entries = g.entries();
    RationalClassPartition part;
    std::map<std::map<std::string, Rat>, int> class_of;  // generator part -> class id
    for (int j = 0; j < g.size(); ++j) {
        auto [it, inserted] =
            class_of.emplace(entries[static_cast<std::size_t>(j)].gens,
                             static_cast<int>(part.classes.size()));
        if (inserted) part.classes.emplace_back();
        part.classes[static_cast<std::size_t>(it->second)].push_back(j);
    }

    Int big_m(1);
    for (const auto& cls : part.classes) {
        const Rat& base = entries[static_cast<std::size_t>(cls.front())].rational;
        Int m(1);
        for (int j : cls) {
            Rat offset = reduced(entries[static_cast<std::size_t>(j)].rational - base);
            m = lcm(m, Int(offset.get_den()));
        }
        part.class_denominators.push_back(to_ll(m));
        big_m = lcm(big_m, m);
    }
    part.M = to_ll(big_m);
    part.t = static_cast<int>(part.classes.size());
    return part;
}

PeriodicZeroSet class_zero_set(const Gamma& g, int class_index) {
    return class_zero_set(g, rational_classes(g), class_index);
}

PeriodicZeroSet class_zero_set(const Gamma& g, const RationalClassPartition& part,
                               int class_index) {
    if (class_index < 0 || class_index >= part.t)
        throw InvalidInput("class index out of range");
    const auto& cls = part.classes[static_cast<std::size_t>(class_index)];
    const long long m = part.class_denominators[static_cast<std::size_t>(class_index)];
    const auto& entries = g.entries();
    const Rat& base = entries[static_cast<std::size_t>(cls.front())].rational;

    // Integer offsets L_i with gamma_i - base = L_i / m.
    std::vector<long long> offsets;
    offsets.reserve(cls.size());
    for (int j : cls) {
        Rat scaled = (entries[static_cast<std::size_t>(j)].rational - base) * rat_of(m);
        scaled = reduced(scaled);
        if (!is_integer(scaled))
            throw TheoremViolation("class denominator failed to clear an offset");
        offsets.push_back(num_ll(scaled));
    }

    PeriodicZeroSet zs;
    zs.period = m;
    // Dense canonical reduction decides each residue at desk scale; past the
    // threshold the sparse vanishing-sum test gives the same exact answer
    // without the O(m * phi(m)) division per residue.
    const bool dense = m <= 4096;
    for (long long r = 0; r < m; ++r) {
        bool zero;
        if (dense) {
            std::vector<Rat> acc(static_cast<std::size_t>(m), Rat(0));
            for (long long L : offsets)
                acc[static_cast<std::size_t>((((L % m) + m) % m * r) % m)] += 1;
            zero = reduce_mod_cyclotomic(QPoly(std::move(acc)),
                                         static_cast<unsigned long long>(m))
                       .is_zero();
        } else {
            RootSum s;
            s.q = static_cast<unsigned long long>(m);
            for (long long L : offsets) {
                __int128 e = static_cast<__int128>(((L % m) + m) % m) * r;
                s.add(static_cast<long long>(e % m), Rat(1));
            }
            zero = root_sum_is_zero(s);
        }
        if (zero) zs.residues.insert(r);
    }
    return zs;
}

PeriodicZeroSet common_zero_set(const Gamma& g) {
    const auto part = rational_classes(g);
    if (part.M > (1LL << 24))
        throw UnsupportedMode("common period " + std::to_string(part.M) +
                              " is too large to enumerate residues explicitly");
    std::vector<PeriodicZeroSet> class_sets;
    class_sets.reserve(static_cast<std::size_t>(part.t));
    for (int j = 0; j < part.t; ++j) class_sets.push_back(class_zero_set(g, part, j));

    PeriodicZeroSet out;
    out.period = part.M;
    for (long long r = 0; r < part.M; ++r) {
        bool everywhere = true;
        for (const auto& cs : class_sets)
            if (!cs.contains(r)) {
                everywhere = false;
                break;
            }
        if (everywhere) out.residues.insert(r);
    }
    return out;
}

std::string to_string(ZeroSetModel m) {
    switch (m) {
        case ZeroSetModel::ExactComplete: return "exact_complete";
        case ZeroSetModel::GenericModel: return "generic_model";
        case ZeroSetModel::FloatHeuristic: return "float_heuristic";
    }
    return "?";
}

ZeroSetReport zero_report(const Gamma& g, Window w, double tol) {
    if (w.lo > w.hi) throw InvalidInput("zero report window is empty");
    ZeroSetReport report;
    report.window = w;
    switch (g.mode()) {
        case GammaMode::Exact:
            report.X = common_zero_set(g);
            report.model = ZeroSetModel::ExactComplete;
            break;
        case GammaMode::Symbolic:
            report.X = common_zero_set(g);
            report.model = ZeroSetModel::GenericModel;
            break;
        case GammaMode::Float: {
            report.X = PeriodicZeroSet{1, {}};
            report.model = ZeroSetModel::FloatHeuristic;
            if (tol < 0) tol = default_float_tol(g.size());
            for (long long k = w.lo; k <= w.hi; ++k)
                if (std::abs(exp_sum_float(g, k)) < tol) report.F_window.push_back(k);
            break;
        }
    }
    return report;
}

}  // namespace specpair
