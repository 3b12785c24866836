#include "specpair/gamma.hpp"

#include <algorithm>
#include <set>

namespace specpair {

std::string to_string(GammaMode m) {
    switch (m) {
        case GammaMode::Exact: return "exact";
        case GammaMode::Symbolic: return "symbolic";
        case GammaMode::Float: return "float";
    }
    return "?";
}

Gamma Gamma::make(std::vector<FrequencyValue> entries, GammaMode mode) {
    if (mode == GammaMode::Float)
        throw InvalidInput("float-mode entries must be built with make_float");
    if (entries.empty()) throw InvalidInput("gamma needs at least one entry");

    for (auto& e : entries) {
        e.rational = reduced(e.rational);
        if (e.rational < 0 || e.rational >= 1)
            throw InvalidInput("gamma entry outside [0,1): " + to_string(e.rational));
        for (auto it = e.gens.begin(); it != e.gens.end();) {
            it->second = reduced(it->second);
            it = (it->second == 0) ? e.gens.erase(it) : std::next(it);
        }
        if (mode == GammaMode::Exact && !e.gens.empty())
            throw InvalidInput("exact-mode gamma entry carries generators");
    }
    if (entries.front().rational != 0 || !entries.front().gens.empty())
        throw InvalidInput("first gamma entry must be 0");
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i] == entries[j])
                throw InvalidInput("gamma entries must be pairwise distinct mod 1");

    Gamma g;
    g.mode_ = mode;
    g.entries_ = std::move(entries);

    Int cond(1);
    for (const auto& e : g.entries_) cond = lcm(cond, Int(e.rational.get_den()));
    g.conductor_ = static_cast<unsigned long long>(to_ll(cond));

    std::set<std::string> ids;
    for (const auto& e : g.entries_)
        for (const auto& [id, coeff] : e.gens) ids.insert(id);
    g.gen_ids_.assign(ids.begin(), ids.end());
    for (const auto& id : g.gen_ids_) {
        Int scale(1);
        for (const auto& e : g.entries_) {
            auto it = e.gens.find(id);
            if (it != e.gens.end()) scale = lcm(scale, Int(it->second.get_den()));
        }
        g.gen_scale_[id] = to_ll(scale);
    }
    return g;
}

Gamma Gamma::make_float(std::vector<double> entries) {
    if (entries.empty()) throw InvalidInput("gamma needs at least one entry");
    if (entries.front() != 0.0) throw InvalidInput("first gamma entry must be 0");
    for (double x : entries)
        if (!(x >= 0.0 && x < 1.0))
            throw InvalidInput("gamma entry outside [0,1)");
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i] == entries[j])
                throw InvalidInput("gamma entries must be pairwise distinct mod 1");
    Gamma g;
    g.mode_ = GammaMode::Float;
    g.float_entries_ = std::move(entries);
    return g;
}

int Gamma::size() const {
    return mode_ == GammaMode::Float ? static_cast<int>(float_entries_.size())
                                     : static_cast<int>(entries_.size());
}

const std::vector<FrequencyValue>& Gamma::entries() const {
    if (mode_ == GammaMode::Float)
        throw UnsupportedMode("float-mode gamma has no exact entries");
    return entries_;
}

const std::vector<double>& Gamma::float_entries() const {
    if (mode_ != GammaMode::Float)
        throw UnsupportedMode("exact-mode gamma has no float entries");
    return float_entries_;
}

unsigned long long Gamma::conductor() const {
    if (mode_ == GammaMode::Float)
        throw UnsupportedMode("float-mode gamma has no conductor");
    return conductor_;
}

long long Gamma::generator_scale(const std::string& id) const {
    auto it = gen_scale_.find(id);
    if (it == gen_scale_.end()) throw InvalidInput("unknown generator: " + id);
    return it->second;
}

long long Gamma::gen_exponent(int j, const std::string& id) const {
    const auto& gens = entries().at(static_cast<std::size_t>(j)).gens;
    auto it = gens.find(id);
    if (it == gens.end()) return 0;
    Rat scaled = it->second * rat_of(generator_scale(id));
    if (!is_integer(scaled)) throw TheoremViolation("generator scale failed to clear denominator");
    return num_ll(scaled);
}

Gamma Gamma::reflected() const {
    if (mode_ == GammaMode::Float) {
        std::vector<double> out = float_entries_;
        for (auto& x : out)
            if (x != 0.0) x = 1.0 - x;
        return make_float(std::move(out));
    }
    std::vector<FrequencyValue> out = entries_;
    for (auto& e : out) {
        e.rational = frac_mod1(-e.rational);
        for (auto& [id, coeff] : e.gens) coeff = -coeff;
    }
    return make(std::move(out), mode_);
}

Gamma Gamma::as_float() const {
    if (mode_ == GammaMode::Float) return *this;
    if (mode_ == GammaMode::Symbolic && !gen_ids_.empty())
        throw UnsupportedMode("symbolic generators have no numeric value");
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(to_double(e.rational));
    return make_float(std::move(out));
}

bool Gamma::operator==(const Gamma& o) const {
    if (mode_ != o.mode_) return false;
    return mode_ == GammaMode::Float ? float_entries_ == o.float_entries_
                                     : entries_ == o.entries_;
}

}  // namespace specpair
