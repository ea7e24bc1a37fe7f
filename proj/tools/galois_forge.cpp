#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "scenic/forge.hpp"
#include "scenic/galois.hpp"
#include "scenic/json_io.hpp"
#include "scenic/reidtai.hpp"
#include "scenic/torus.hpp"

namespace {

using namespace scenic;

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kUsage = 1, kCheckFailed = 2, kNumericFailure = 3 };

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case errc::parse_error:
    case errc::degree_invalid:
    case errc::degree_too_small:
    case errc::degree_too_large:
    case errc::degree_mismatch:
    case errc::not_monic:
    case errc::not_squarefree:
        return kUsage;
    case errc::real_root_detected:
    case errc::k_max_exceeded:
    case errc::quasi_reflection_present:
        return kCheckFailed;
    case errc::retry_limit_exceeded:
    case errc::no_convergence:
    case errc::ill_conditioned:
        return kNumericFailure;
    }
    return kNumericFailure;
}

uint64_t resolve_seed(const CLI::Option* seed_opt, uint64_t flag_value) {
    if (seed_opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("GALOIS_FORGE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(errc::parse_error, "GALOIS_FORGE_SEED is not an integer");
        }
    }
    return 0;
}

/* inline CSV, or the contents of a file when the argument names one */
IntPoly load_poly(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return IntPoly::from_csv(buf.str());
    }
    return IntPoly::from_csv(arg);
}

struct Output {
    Json doc;
    bool json = false;
    std::string human;

    Output(const std::string& command, uint64_t seed, bool as_json) : json(as_json) {
        doc["version"] = kVersion;
        doc["command"] = command;
        doc["params"] = Json::object();
        doc["seed"] = std::to_string(seed);
    }

    void emit(bool ok) {
        doc["ok"] = ok;
        if (json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << human;
    }
};

int cmd_forge(int degree, uint64_t seed, const Int& k_max, bool use_paper, bool as_json) {
    Output out("forge", seed, as_json);
    out.doc["params"]["degree"] = degree;
    out.doc["params"]["k_max"] = k_max.get_str();
    out.doc["params"]["paper_example"] = use_paper;

    if (degree < 8 && !use_paper)
        std::cerr << "note: degrees below 8 satisfy the polynomial conditions but are too small "
                     "for the geometric application\n";

    ForgeResult r;
    if (use_paper) {
        r.f2 = paper_lift_f2();
        r.f3 = paper_lift_f3();
        r.f5 = paper_lift_f5();
        r.k = 4;
        r.f = combine(r.f2, r.f3, r.f5, r.k);
        r.certificate = scenic_check(r.f);
        r.seed = seed;
    } else {
        r = forge(degree, seed, k_max);
    }

    out.doc["result"] = to_json(r);
    Int k_min = use_paper ? minimal_k(r.f2, r.f3, r.f5) : r.k;
    if (use_paper) out.doc["result"]["k_min"] = k_min.get_str();
    out.doc["certificate"] = to_json(r.certificate);

    std::ostringstream h;
    h << "f = " << r.f.to_pretty() << "\n";
    h << "  coefficients: " << r.f.to_csv() << "\n";
    h << "  k = " << r.k.get_str() << ", seed = " << seed << "\n";
    if (use_paper) h << "  minimal k for these lifts = " << k_min.get_str() << "\n";
    h << "  scenic: " << (r.certificate.scenic ? "yes" : "no") << "\n";
    out.human = h.str();

    out.emit(r.certificate.scenic);
    return r.certificate.scenic ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& poly_arg, uint64_t seed, bool as_json) {
    Output out("verify", seed, as_json);
    out.doc["params"]["poly"] = poly_arg;
    IntPoly f = load_poly(poly_arg);
    ScenicCertificate cert = scenic_check(f);
    out.doc["result"] = Json{{"f", f.to_csv()}, {"scenic", cert.scenic}};
    out.doc["certificate"] = to_json(cert);

    std::ostringstream h;
    h << "f = " << f.to_pretty() << "\n";
    h << "  monic: " << (cert.monic ? "yes" : "no")
      << ", even degree: " << (cert.even_degree ? "yes" : "no")
      << ", squarefree: " << (cert.squarefree ? "yes" : "no")
      << ", real roots: " << cert.real_root_count << "\n";
    if (cert.vdw_applicable) {
        h << "  images: " << reduce(f, 2).to_string() << " | " << reduce(f, 3).to_string()
          << " | " << reduce(f, 5).to_string() << "\n";
        h << "  shapes: mod 2 " << cert.vdw.shape2.to_string() << ", mod 3 "
          << cert.vdw.shape3.to_string() << ", mod 5 " << cert.vdw.shape5.to_string() << "\n";
        h << "  conditions: " << (cert.vdw.cond1 ? "1" : "-") << (cert.vdw.cond2 ? "2" : "-")
          << (cert.vdw.cond3 ? "3" : "-") << "\n";
    } else {
        h << "  symmetric-group certificate not applicable (needs monic, degree >= 4)\n";
    }
    if (!cert.scenic) {
        h << "  failed:";
        if (!cert.monic) h << " monic";
        if (!cert.even_degree) h << " even-degree";
        if (!cert.squarefree) h << " squarefree";
        if (!cert.vdw_applicable || !cert.vdw.pass) h << " galois-certificate";
        if (cert.real_root_count != 0) h << " real-roots";
        h << "\n";
    }
    h << "  scenic: " << (cert.scenic ? "yes" : "no") << "\n";
    out.human = h.str();

    out.emit(cert.scenic);
    return cert.scenic ? kOk : kCheckFailed;
}

int cmd_torus(const std::string& poly_arg, double tol, const std::vector<int>& flips,
              uint64_t seed, bool as_json) {
    Output out("torus", seed, as_json);
    out.doc["params"]["poly"] = poly_arg;
    out.doc["params"]["tol"] = tol;
    out.doc["params"]["select_flips"] = flips;
    IntPoly f = load_poly(poly_arg);
    TorusModel t = period_matrix(f, static_cast<long double>(tol), flips);
    out.doc["result"] = to_json(t);
    out.doc["residuals"] = t.residual_report;

    std::ostringstream h;
    h << "f = " << f.to_pretty() << "\n  selected eigenvalues:\n";
    for (int idx : t.spectrum.selected) {
        Cplx mu = t.spectrum.roots[static_cast<size_t>(idx)];
        h << "    " << static_cast<double>(mu.real()) << " + " << static_cast<double>(mu.imag())
          << "i\n";
    }
    h << "  residuals:\n";
    for (const auto& [key, value] : t.residual_report) h << "    " << key << " = " << value << "\n";
    h << "  within tolerance " << tol << ": " << (t.within_tol() ? "yes" : "no") << "\n";
    out.human = h.str();

    out.emit(t.within_tol());
    return t.within_tol() ? kOk : kCheckFailed;
}

int cmd_scan(const std::string& poly_arg, uint64_t prime_bound, int workers, uint64_t seed,
             bool as_json) {
    Output out("scan", seed, as_json);
    out.doc["params"]["poly"] = poly_arg;
    out.doc["params"]["prime_bound"] = prime_bound;
    // the worker count is an execution hint, not a parameter: output must be
    // byte-identical across worker counts
    IntPoly f = load_poly(poly_arg);
    CycleHistogram h = frobenius_scan(f, prime_bound, workers);
    out.doc["result"] = to_json(h);

    std::ostringstream s;
    s << "primes used: " << h.primes_used << ", ramified:";
    for (uint64_t p : h.ramified) s << ' ' << p;
    s << "\n";
    for (const auto& [partition, count] : h.buckets) {
        s << "  [";
        for (size_t i = 0; i < partition.size(); ++i) s << (i ? " " : "") << partition[i];
        s << "] x " << count << "\n";
    }
    s << "irreducible fraction: " << rat_string(h.irreducible_fraction) << " = "
      << h.irreducible_fraction.get_d() << "\n";
    out.human = s.str();

    out.emit(true);
    return kOk;
}

DiagonalAction parse_action_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw Error(errc::parse_error, std::string("bad action JSON: ") + e.what());
    }
    const Json* gens = &doc;
    if (doc.is_object() && doc.contains("generators")) gens = &doc["generators"];
    if (!gens->is_array() || gens->empty())
        throw Error(errc::parse_error, "action JSON must be an array of generators");
    DiagonalAction action;
    for (const Json& g : *gens) {
        if (!g.is_object() || !g.contains("order") || !g.contains("rotations"))
            throw Error(errc::parse_error, "generator needs \"order\" and \"rotations\"");
        GroupElement e;
        try {
            e.order = g["order"].get<int64_t>();
            e.rotations = g["rotations"].get<std::vector<int64_t>>();
        } catch (const std::exception& ex) {
            throw Error(errc::parse_error, std::string("bad generator: ") + ex.what());
        }
        action.generators.push_back(std::move(e));
    }
    return action;
}

int cmd_ages(const std::string& model, int n, const std::string& file, uint64_t seed,
             bool as_json) {
    Output out("ages", seed, as_json);
    out.doc["params"]["model"] = model;
    out.doc["params"]["n"] = n;
    out.doc["params"]["file"] = file;

    DiagonalAction action;
    if (!file.empty()) {
        action = parse_action_json(file);
    } else {
        ModelVariant variant;
        int index;
        if (model.rfind("base-", 0) == 0)
            variant = ModelVariant::base;
        else if (model.rfind("total-", 0) == 0)
            variant = ModelVariant::total;
        else
            throw Error(errc::parse_error, "model must be base-{i,ii,iii} or total-{i,ii,iii}");
        std::string suffix = model.substr(model.find('-') + 1);
        if (suffix == "i")
            index = 0;
        else if (suffix == "ii")
            index = 1;
        else if (suffix == "iii")
            index = 2;
        else
            throw Error(errc::parse_error, "model suffix must be i, ii or iii");
        action = local_models(n, variant)[static_cast<size_t>(index)];
    }

    Classification c = classify(action);
    out.doc["result"] = to_json(c);

    std::ostringstream h;
    h << "classification: " << sing_class_name(c.kind) << "\n";
    for (const auto& rep : c.elements) {
        h << "  age " << rat_string(rep.age) << " for rotations (";
        for (size_t i = 0; i < rep.g.rotations.size(); ++i)
            h << (i ? "," : "") << rep.g.rotations[i];
        h << ") / " << rep.g.order << "\n";
    }
    out.human = h.str();

    out.emit(true);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and certify integer polynomials with full symmetric Galois group, "
                 "their torus models, and the associated quotient-singularity data"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    bool json = false;
    uint64_t seed_flag = 0;

    auto* forge_cmd = app.add_subcommand("forge", "generate a certified polynomial");
    int degree = 8;
    std::string k_max_str = default_k_max().get_str();
    bool use_paper = false;
    forge_cmd->add_option("--degree", degree, "even degree >= 6")->required();
    auto* forge_seed = forge_cmd->add_option("--seed", seed_flag, "generator seed");
    forge_cmd->add_option("--k-max", k_max_str, "largest constant shift to try");
    forge_cmd->add_flag("--paper-example", use_paper,
                        "emit the published degree-8 example (ignores --degree)");
    forge_cmd->add_flag("--json", json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "check the full certificate for a polynomial");
    std::string poly_arg;
    verify_cmd->add_option("poly", poly_arg, "coefficient CSV (ascending) or file path")->required();
    auto* verify_seed = verify_cmd->add_option("--seed", seed_flag, "echoed seed");
    verify_cmd->add_flag("--json", json, "JSON output");

    auto* torus_cmd = app.add_subcommand("torus", "build the numerical torus model");
    double tol = 1e-8;
    std::vector<int> flips;
    torus_cmd->add_option("poly", poly_arg, "coefficient CSV (ascending) or file path")->required();
    torus_cmd->add_option("--tol", tol, "residual tolerance (default 1e-8)");
    torus_cmd->add_option("--select", flips, "conjugate-pair indices whose lower root is selected");
    auto* torus_seed = torus_cmd->add_option("--seed", seed_flag, "echoed seed");
    torus_cmd->add_flag("--json", json, "JSON output");

    auto* scan_cmd = app.add_subcommand("scan", "Frobenius cycle-type statistics");
    uint64_t prime_bound = 200000;
    int workers = 1;
    scan_cmd->add_option("poly", poly_arg, "coefficient CSV (ascending) or file path")->required();
    scan_cmd->add_option("--prime-bound", prime_bound, "scan primes up to this bound");
    scan_cmd->add_option("--workers", workers, "parallel workers (result is identical)");
    auto* scan_seed = scan_cmd->add_option("--seed", seed_flag, "echoed seed");
    scan_cmd->add_flag("--json", json, "JSON output");

    auto* ages_cmd = app.add_subcommand("ages", "Reid-Tai ages and terminality");
    std::string model, action_file;
    int n_param = 4;
    ages_cmd->add_option("--model", model, "base-{i,ii,iii} or total-{i,ii,iii}");
    ages_cmd->add_option("--n", n_param, "model parameter n >= 1");
    ages_cmd->add_option("--file", action_file, "JSON file with generator list");
    auto* ages_seed = ages_cmd->add_option("--seed", seed_flag, "echoed seed");
    ages_cmd->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*forge_cmd) {
            Int k_max;
            if (mpz_set_str(k_max.get_mpz_t(), k_max_str.c_str(), 10) != 0 || k_max < 0)
                throw Error(errc::parse_error, "--k-max must be a nonnegative integer");
            return cmd_forge(degree, resolve_seed(forge_seed, seed_flag), k_max, use_paper, json);
        }
        if (*verify_cmd) return cmd_verify(poly_arg, resolve_seed(verify_seed, seed_flag), json);
        if (*torus_cmd)
            return cmd_torus(poly_arg, tol, flips, resolve_seed(torus_seed, seed_flag), json);
        if (*scan_cmd)
            return cmd_scan(poly_arg, prime_bound, workers, resolve_seed(scan_seed, seed_flag),
                            json);
        if (*ages_cmd) {
            if (model.empty() == action_file.empty())
                throw Error(errc::parse_error, "ages needs exactly one of --model or --file");
            return cmd_ages(model, n_param, action_file, resolve_seed(ages_seed, seed_flag), json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kNumericFailure;
    }
    return kUsage;
}
