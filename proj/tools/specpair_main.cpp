#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specpair/json_io.hpp"

using namespace specpair;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUndecided = 2;

/// Values starting with '@' name a file to read; anything else is literal JSON.
Json parse_doc(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw InvalidInput("cannot open file: " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

struct Options {
    ThresholdMode threshold = ThresholdMode::AsStated;
    std::string cluster_doc, gamma_doc, set_doc, flag_doc, check_doc;
    long long lo = 0, hi = 0, n = 0;
    long long den_max = -1;
    double tol = -1.0;
    int r = 1, s = 1;
    long long m_lo = 0, m_hi = 0, n_max = 0;
    bool has_m_range = false, has_n_max = false;
};

int run_verify(const Options& opt) {
    Cluster c = cluster_from_json(parse_doc(opt.cluster_doc));
    Gamma g = gamma_from_json(parse_doc(opt.gamma_doc));
    emit(to_json(verify_pair(c, g, opt.tol)));
    return kExitOk;
}

int run_zeros(const Options& opt) {
    Gamma g = gamma_from_json(parse_doc(opt.gamma_doc));
    emit(to_json(zero_report(g, {opt.lo, opt.hi}, opt.tol)));
    return kExitOk;
}

int run_classes(const Options& opt) {
    Gamma g = gamma_from_json(parse_doc(opt.gamma_doc));
    emit(to_json(rational_classes(g)));
    return kExitOk;
}

int run_flags(const Options& opt) {
    std::vector<long long> s;
    if (!opt.set_doc.empty()) {
        Json doc = parse_doc(opt.set_doc);
        if (!doc.is_array()) throw InvalidInput("--set expects a JSON array of integers");
        for (const auto& x : doc) {
            if (!x.is_number_integer()) throw InvalidInput("--set entries must be integers");
            s.push_back(x.get<long long>());
        }
    } else if (!opt.cluster_doc.empty()) {
        s = difference_set(cluster_from_json(parse_doc(opt.cluster_doc))).values;
    } else {
        throw InvalidInput("flags needs --set or --cluster");
    }
    std::optional<std::pair<long long, long long>> m_range;
    if (opt.has_m_range) m_range = {{opt.m_lo, opt.m_hi}};
    std::optional<long long> n_max;
    if (opt.has_n_max) n_max = opt.n_max;
    Json out = Json::array();
    for (const Flag& f : find_flags(s, opt.r, opt.s, m_range, n_max)) out.push_back(to_json(f));
    emit(Json{{"flags", std::move(out)}});
    return kExitOk;
}

int run_certify(const Options& opt) {
    Cluster c = cluster_from_json(parse_doc(opt.cluster_doc));

    if (!opt.gamma_doc.empty()) {
        Gamma g = gamma_from_json(parse_doc(opt.gamma_doc));
        if (!opt.flag_doc.empty()) {
            Flag f = flag_from_json(parse_doc(opt.flag_doc));
            emit(to_json(theorem4_verify_on(g, f, opt.threshold)));
            return kExitOk;
        }
        try {
            emit(to_json(theorem3_certificate(c, g)));
        } catch (const NotASpectralPairError& e) {
            RationalityCertificate cert;
            cert.verdict = CertVerdict::NotASpectralPair;
            cert.theorem = CertTheorem::T3;
            cert.class_count = 0;
            cert.steps = {std::string("verify_pair failed: ") + e.what()};
            emit(to_json(cert));
        }
        return kExitOk;
    }

    PipelineResult res = theorem7_pipeline(c, {}, opt.threshold);
    if (auto* cert = std::get_if<RationalityCertificate>(&res)) {
        emit(to_json(*cert));
        return kExitOk;
    }
    if (laba_rationality(c)) {
        RationalityCertificate cert;
        cert.verdict = CertVerdict::Rational;
        cert.theorem = CertTheorem::Laba;
        cert.class_count = 1;
        std::ostringstream os;
        os << "cluster fits in [0, " << c.max() + 1 << "] and " << c.max() + 1
           << " < 5*" << c.d() << "/2, so every spectrum is rational";
        cert.steps = {os.str()};
        emit(to_json(cert));
        return kExitOk;
    }
    Json out = to_json(std::get<NoApplicableFlag>(res));
    out["laba"] = false;
    emit(out);
    return kExitUndecided;
}

int run_decide(const Options& opt) {
    Cluster c = cluster_from_json(parse_doc(opt.cluster_doc));
    std::optional<long long> den_max;
    if (opt.den_max >= 1) den_max = opt.den_max;
    SpectralityVerdict v = decide_spectrality(c, den_max, opt.threshold);
    emit(to_json(v));
    return v.status == SpectralStatus::Unknown ? kExitUndecided : kExitOk;
}

int run_enum(const Options& opt) {
    Cluster c = cluster_from_json(parse_doc(opt.cluster_doc));
    emit(to_json(enumerate_rational_spectra(c, opt.den_max)));
    return kExitOk;
}

int run_mask_zeros(const Options& opt) {
    Cluster c = cluster_from_json(parse_doc(opt.cluster_doc));
    Json zeros = Json::array();
    for (const Rat& z : rational_mask_zeros(c)) zeros.push_back(to_json(z));
    emit(Json{{"cluster", to_json(c)}, {"zeros", std::move(zeros)}});
    return kExitOk;
}

int run_tile(const Options& opt) {
    Cluster c = cluster_from_json(parse_doc(opt.cluster_doc));
    Json out = Json::array();
    for (const auto& b : tiling_complements_mod(c, opt.n)) out.push_back(b);
    emit(Json{{"complements", std::move(out)}, {"modulus", opt.n}});
    return kExitOk;
}

bool same_certificate(const RationalityCertificate& a, const RationalityCertificate& b) {
    return to_json(a).dump() == to_json(b).dump();
}

/// Parse-then-serialize for any canonical document; the output is the
/// identity on documents this tool emits.
int run_roundtrip(const Options& opt) {
    Json doc = parse_doc(opt.check_doc);
    if (doc.contains("elements")) {
        emit(to_json(cluster_from_json(doc)));
    } else if (doc.contains("mode")) {
        emit(to_json(gamma_from_json(doc)));
    } else if (doc.contains("status")) {
        emit(to_json(spectrality_from_json(doc)));
    } else if (doc.contains("verdict")) {
        emit(to_json(certificate_from_json(doc)));
    } else if (doc.contains("N") && doc.contains("m")) {
        emit(to_json(flag_from_json(doc)));
    } else {
        throw InvalidInput("unrecognized document shape");
    }
    return kExitOk;
}

int run_check(const Options& opt) {
    Cluster c = cluster_from_json(parse_doc(opt.cluster_doc));
    Json doc = parse_doc(opt.check_doc);
    std::vector<std::string> notes;
    bool valid = true;
    auto fail = [&](const std::string& why) {
        valid = false;
        notes.push_back(why);
    };

    if (doc.contains("status")) {
        SpectralityVerdict v = spectrality_from_json(doc);
        if (v.witness_gamma && !verify_pair(c, *v.witness_gamma).is_spectral_pair)
            fail("witness fails verify_pair");
        ThresholdMode mode = opt.threshold;
        if (v.certificate && v.certificate->threshold_mode)
            mode = threshold_mode_from_string(*v.certificate->threshold_mode);
        SpectralityVerdict again = decide_spectrality(c, v.search.den_max, mode);
        if (to_json(again).dump() != doc.dump())
            fail("recomputed spectrality verdict differs");
        else
            notes.push_back("recomputed verdict matches");
    } else if (doc.contains("verdict")) {
        RationalityCertificate cert = certificate_from_json(doc);
        ThresholdMode mode = cert.threshold_mode
                                 ? threshold_mode_from_string(*cert.threshold_mode)
                                 : opt.threshold;
        switch (cert.theorem) {
            case CertTheorem::T3: {
                if (opt.gamma_doc.empty()) throw InvalidInput("T3 check needs --gamma");
                Gamma g = gamma_from_json(parse_doc(opt.gamma_doc));
                if (cert.verdict == CertVerdict::NotASpectralPair) {
                    if (verify_pair(c, g).is_spectral_pair)
                        fail("pair verifies although the certificate says it must not");
                } else {
                    RationalityCertificate again = theorem3_certificate(c, g);
                    if (!same_certificate(cert, again)) fail("recomputed certificate differs");
                }
                break;
            }
            case CertTheorem::T4: {
                if (opt.gamma_doc.empty()) throw InvalidInput("T4 check needs --gamma");
                if (!cert.witness_flag) throw InvalidInput("T4 certificate lacks its flag");
                Gamma g = gamma_from_json(parse_doc(opt.gamma_doc));
                RationalityCertificate again = theorem4_verify_on(g, *cert.witness_flag, mode);
                if (!same_certificate(cert, again)) fail("recomputed certificate differs");
                break;
            }
            case CertTheorem::T7: {
                PipelineResult res = theorem7_pipeline(c, {}, mode);
                auto* again = std::get_if<RationalityCertificate>(&res);
                if (!again) {
                    fail("pipeline finds no flag on recomputation");
                } else if (!same_certificate(cert, *again)) {
                    fail("recomputed certificate differs");
                }
                break;
            }
            case CertTheorem::Laba: {
                if (!laba_rationality(c)) fail("interval bound does not hold");
                break;
            }
        }
        if (valid) notes.push_back("recomputed certificate matches");
    } else {
        throw InvalidInput("document is neither a certificate nor a spectrality verdict");
    }

    emit(Json{{"valid", valid}, {"notes", notes}});
    return valid ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral-pair verification for unit-interval clusters"};
    app.require_subcommand(1);

    Options opt;
    std::string threshold = "as-stated";
    app.add_option("--threshold-mode", threshold,
                   "strip-length threshold: as-stated | conservative")
        ->check(CLI::IsMember({"as-stated", "conservative"}));

    auto add_cluster = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--cluster", opt.cluster_doc,
                                  "cluster JSON, e.g. '{\"elements\":[0,2]}' or @file");
        if (required) o->required();
    };
    auto add_gamma = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--gamma", opt.gamma_doc, "gamma JSON or @file");
        if (required) o->required();
    };

    auto* verify = app.add_subcommand("verify", "check one cluster/gamma pair");
    add_cluster(verify);
    add_gamma(verify);
    verify->add_option("--tol", opt.tol, "float-mode tolerance (default 1e-9*d)");

    auto* zeros = app.add_subcommand("zeros", "integer zero set report over a window");
    add_gamma(zeros);
    zeros->add_option("--lo", opt.lo, "window start")->required();
    zeros->add_option("--hi", opt.hi, "window end")->required();
    zeros->add_option("--tol", opt.tol, "float-mode tolerance (default 1e-9*d)");

    auto* classes = app.add_subcommand("classes", "rational equivalence classes of a gamma");
    add_gamma(classes);

    auto* flags = app.add_subcommand("flags", "search a set for strip patterns");
    add_cluster(flags, false);
    flags->add_option("--set", opt.set_doc, "integer set as a JSON array");
    flags->add_option("--r", opt.r, "strip length")->required();
    flags->add_option("--s", opt.s, "strip count")->required();
    auto* mlo = flags->add_option("--m-lo", opt.m_lo, "lowest anchor to try");
    auto* mhi = flags->add_option("--m-hi", opt.m_hi, "highest anchor to try");
    mlo->needs(mhi);
    mhi->needs(mlo);
    auto* nmax = flags->add_option("--n-max", opt.n_max, "largest stride to try");
    flags->callback([&] {
        opt.has_m_range = mlo->count() > 0;
        opt.has_n_max = nmax->count() > 0;
    });

    auto* certify = app.add_subcommand(
        "certify", "rationality certificate for a cluster (optionally with a gamma/flag)");
    add_cluster(certify);
    add_gamma(certify, false);
    certify->add_option("--flag", opt.flag_doc, "flag JSON for concrete-flag validation");

    auto* decide = app.add_subcommand("decide", "decide spectrality of a cluster");
    add_cluster(decide);
    decide->add_option("--den-max", opt.den_max,
                       "denominator cap for the fallback semi-decision");

    auto* enumerate = app.add_subcommand("enum", "enumerate rational spectra up to a denominator");
    add_cluster(enumerate);
    enumerate->add_option("--den-max", opt.den_max, "denominator cap")->required();

    auto* mask = app.add_subcommand("mask-zeros", "rational zeros of the mask polynomial");
    add_cluster(mask);

    auto* tile = app.add_subcommand("tile", "tiling complements of the cluster mod n");
    add_cluster(tile);
    tile->add_option("--n", opt.n, "modulus")->required();

    auto* check = app.add_subcommand("check", "re-validate an emitted certificate or verdict");
    add_cluster(check);
    add_gamma(check, false);
    check->add_option("--doc", opt.check_doc, "certificate or verdict JSON or @file")
        ->required();

    auto* roundtrip =
        app.add_subcommand("roundtrip", "parse and re-serialize a canonical document");
    roundtrip->add_option("--doc", opt.check_doc, "document JSON or @file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        opt.threshold = threshold_mode_from_string(threshold);
        if (verify->parsed()) return run_verify(opt);
        if (zeros->parsed()) return run_zeros(opt);
        if (classes->parsed()) return run_classes(opt);
        if (flags->parsed()) return run_flags(opt);
        if (certify->parsed()) return run_certify(opt);
        if (decide->parsed()) return run_decide(opt);
        if (enumerate->parsed()) return run_enum(opt);
        if (mask->parsed()) return run_mask_zeros(opt);
        if (tile->parsed()) return run_tile(opt);
        if (check->parsed()) return run_check(opt);
        if (roundtrip->parsed()) return run_roundtrip(opt);
        std::cerr << "no subcommand selected\n";
        return kExitInvalid;
    } catch (const UnsupportedMode& e) {
        std::cerr << "undecidable: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
