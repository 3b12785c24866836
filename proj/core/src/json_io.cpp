#include "specpair/json_io.hpp"

namespace specpair {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long long int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
    return v.get<long long>();
}

}  // namespace

Json to_json(const Rat& r) {
    return Json{{"num", num_ll(r)}, {"den", den_ll(r)}};
}

Rat rat_from_json(const Json& j) {
    return make_rat(int_field(j, "num"), int_field(j, "den"));
}

Json to_json(const Cluster& c) {
    return Json{{"elements", c.elements()}};
}

Cluster cluster_from_json(const Json& j) {
    const Json& el = field(j, "elements");
    if (!el.is_array()) throw InvalidInput("\"elements\" must be an array");
    std::vector<long long> elements;
    for (const auto& x : el) {
        if (!x.is_number_integer()) throw InvalidInput("cluster elements must be integers");
        elements.push_back(x.get<long long>());
    }
    return Cluster::make(std::move(elements));
}

Json to_json(const Gamma& g) {
    Json entries = Json::array();
    if (g.mode() == GammaMode::Float) {
        for (double x : g.float_entries()) entries.push_back(x);
    } else {
        for (const auto& e : g.entries()) {
            Json entry = to_json(e.rational);
            if (!e.gens.empty()) {
                Json gens = Json::object();
                for (const auto& [id, coeff] : e.gens) gens[id] = to_json(coeff);
                entry["gens"] = std::move(gens);
            }
            entries.push_back(std::move(entry));
        }
    }
    return Json{{"mode", to_string(g.mode())}, {"entries", std::move(entries)}};
}

Gamma gamma_from_json(const Json& j) {
    const std::string mode = field(j, "mode").get<std::string>();
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw InvalidInput("\"entries\" must be an array");

    if (mode == "float") {
        std::vector<double> xs;
        for (const auto& e : entries) {
            if (!e.is_number()) throw InvalidInput("float-mode entries must be numbers");
            xs.push_back(e.get<double>());
        }
        return Gamma::make_float(std::move(xs));
    }

    GammaMode m;
    if (mode == "exact") m = GammaMode::Exact;
    else if (mode == "symbolic") m = GammaMode::Symbolic;
    else throw InvalidInput("unknown gamma mode: " + mode);

    std::vector<FrequencyValue> fv;
    for (const auto& e : entries) {
        FrequencyValue v;
        v.rational = rat_from_json(e);
        if (e.contains("gens")) {
            const Json& gens = e.at("gens");
            if (!gens.is_object()) throw InvalidInput("\"gens\" must be an object");
            for (const auto& [id, coeff] : gens.items()) v.gens[id] = rat_from_json(coeff);
        }
        fv.push_back(std::move(v));
    }
    return Gamma::make(std::move(fv), m);
}

Json to_json(const Flag& f) {
    return Json{{"m", f.m}, {"r", f.r}, {"N", f.N}, {"s", f.s}};
}

Flag flag_from_json(const Json& j) {
    Flag f;
    f.m = int_field(j, "m");
    f.r = static_cast<int>(int_field(j, "r"));
    f.N = int_field(j, "N");
    f.s = static_cast<int>(int_field(j, "s"));
    validate_flag(f);
    return f;
}

Json to_json(const PairVerdict& v) {
    Json out{{"is_spectral_pair", v.is_spectral_pair},
             {"checked_set", v.checked_set.values},
             {"heuristic", v.heuristic}};
    if (v.failing_k) out["failing_k"] = *v.failing_k;
    if (v.failing_value) out["failing_value"] = *v.failing_value;
    return out;
}

Json to_json(const PeriodicZeroSet& zs) {
    return Json{{"period", zs.period},
                {"residues", std::vector<long long>(zs.residues.begin(), zs.residues.end())}};
}

Json to_json(const ZeroSetReport& r) {
    return Json{{"X", to_json(r.X)},
                {"F_window", r.F_window},
                {"window", Json{{"lo", r.window.lo}, {"hi", r.window.hi}}},
                {"model", to_string(r.model)}};
}

Json to_json(const RationalClassPartition& p) {
    return Json{{"classes", p.classes},
                {"class_denominators", p.class_denominators},
                {"M", p.M},
                {"t", p.t}};
}

Json to_json(const RationalityCertificate& cert) {
    Json out{{"verdict", to_string(cert.verdict)},
             {"theorem", to_string(cert.theorem)},
             {"class_count", cert.class_count},
             {"steps", cert.steps}};
    if (cert.denominator_divides) out["denominator_divides"] = *cert.denominator_divides;
    if (cert.witness_flag) out["witness_flag"] = to_json(*cert.witness_flag);
    if (cert.threshold_mode) out["threshold_mode"] = *cert.threshold_mode;
    return out;
}

RationalityCertificate certificate_from_json(const Json& j) {
    RationalityCertificate cert;
    const std::string verdict = field(j, "verdict").get<std::string>();
    if (verdict == "rational") cert.verdict = CertVerdict::Rational;
    else if (verdict == "not_a_spectral_pair") cert.verdict = CertVerdict::NotASpectralPair;
    else if (verdict == "model_contradiction") cert.verdict = CertVerdict::ModelContradiction;
    else throw InvalidInput("unknown certificate verdict: " + verdict);

    const std::string theorem = field(j, "theorem").get<std::string>();
    if (theorem == "T3") cert.theorem = CertTheorem::T3;
    else if (theorem == "T4") cert.theorem = CertTheorem::T4;
    else if (theorem == "T7") cert.theorem = CertTheorem::T7;
    else if (theorem == "Laba") cert.theorem = CertTheorem::Laba;
    else throw InvalidInput("unknown certificate theorem: " + theorem);

    cert.class_count = static_cast<int>(int_field(j, "class_count"));
    for (const auto& s : field(j, "steps")) cert.steps.push_back(s.get<std::string>());
    if (j.contains("denominator_divides"))
        cert.denominator_divides = j.at("denominator_divides").get<long long>();
    if (j.contains("witness_flag")) cert.witness_flag = flag_from_json(j.at("witness_flag"));
    if (j.contains("threshold_mode"))
        cert.threshold_mode = j.at("threshold_mode").get<std::string>();
    return cert;
}

Json to_json(const DenominatorBound& b) {
    return Json{{"N", b.N}, {"statement", b.statement}};
}

Json to_json(const NoApplicableFlag& n) {
    return Json{{"no_applicable_flag", true}, {"r_tried", n.r_tried}, {"note", n.note}};
}

Json to_json(const SpectralityVerdict& v) {
    Json search = Json::object();
    if (v.search.flag_N) search["flag_N"] = *v.search.flag_N;
    if (v.search.den_max) search["den_max"] = *v.search.den_max;
    search["grid_size"] = v.search.grid_size;
    search["exhausted"] = v.search.exhausted;

    Json out{{"status", to_string(v.status)}, {"search", std::move(search)}};
    if (v.witness_gamma) out["witness_gamma"] = to_json(*v.witness_gamma);
    if (v.certificate) out["certificate"] = to_json(*v.certificate);
    return out;
}

SpectralityVerdict spectrality_from_json(const Json& j) {
    SpectralityVerdict v;
    const std::string status = field(j, "status").get<std::string>();
    if (status == "Spectral") v.status = SpectralStatus::Spectral;
    else if (status == "NotSpectral") v.status = SpectralStatus::NotSpectral;
    else if (status == "Unknown") v.status = SpectralStatus::Unknown;
    else throw InvalidInput("unknown spectrality status: " + status);

    if (j.contains("witness_gamma")) v.witness_gamma = gamma_from_json(j.at("witness_gamma"));
    if (j.contains("certificate")) v.certificate = certificate_from_json(j.at("certificate"));
    const Json& search = field(j, "search");
    if (search.contains("flag_N")) v.search.flag_N = search.at("flag_N").get<long long>();
    if (search.contains("den_max")) v.search.den_max = search.at("den_max").get<long long>();
    v.search.grid_size = field(search, "grid_size").get<unsigned long long>();
    v.search.exhausted = field(search, "exhausted").get<bool>();
    return v;
}

Json to_json(const EnumerationResult& r) {
    Json spectra = Json::array();
    for (const auto& g : r.spectra) spectra.push_back(to_json(g));
    return Json{{"cluster", to_json(r.cluster)},
                {"den_max", r.den_max},
                {"spectra", std::move(spectra)},
                {"exhaustive", r.exhaustive},
                {"candidates_scanned", r.candidates_scanned}};
}

}  // namespace specpair
