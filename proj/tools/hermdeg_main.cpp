// hermdeg command-line front end.  Talks to the computation core through the
// C interface in hermdeg.h only.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hermdeg.h"

namespace {

struct SessionDeleter {
    void operator()(hermdeg_session* s) const { hermdeg_session_destroy(s); }
};
struct VarietyDeleter {
    void operator()(hermdeg_variety* v) const { hermdeg_variety_destroy(v); }
};
using Session = std::unique_ptr<hermdeg_session, SessionDeleter>;
using Variety = std::unique_ptr<hermdeg_variety, VarietyDeleter>;

struct Options {
    std::string config_file;
    std::string out_file;
    std::string seed, trials, tol, residual_tol, budget, jobs;
    bool fast_saturate = false;
};

int fail(hermdeg_session* s, hermdeg_status st) {
    std::cerr << "error: " << hermdeg_last_error(s) << "\n";
    return st == HERMDEG_ERR_INTERNAL ? 1 : int(st);
}

int apply_config(hermdeg_session* s, const Options& opt) {
    // precedence: defaults < config file < HERMDEG_SEED < explicit flags
    if (!opt.config_file.empty()) {
        std::ifstream in(opt.config_file);
        if (!in) {
            std::cerr << "error: cannot open config file '" << opt.config_file << "'\n";
            return 2;
        }
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            size_t eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string t) {
                size_t a = t.find_first_not_of(" \t\r");
                size_t b = t.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
            };
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (key.empty()) continue;
            if (hermdeg_session_set(s, key.c_str(), val.c_str()) != HERMDEG_OK) {
                std::cerr << "error: config line " << lineno << ": " << hermdeg_last_error(s) << "\n";
                return 2;
            }
        }
    }
    if (const char* env = std::getenv("HERMDEG_SEED"); env && *env)
        if (hermdeg_session_set(s, "seed", env) != HERMDEG_OK) return fail(s, HERMDEG_ERR_INPUT);
    auto set = [&](const char* key, const std::string& val) {
        if (val.empty()) return 0;
        if (hermdeg_session_set(s, key, val.c_str()) != HERMDEG_OK) return fail(s, HERMDEG_ERR_INPUT);
        return 0;
    };
    int rc = 0;
    rc = rc ? rc : set("seed", opt.seed);
    rc = rc ? rc : set("trials", opt.trials);
    rc = rc ? rc : set("tol", opt.tol);
    rc = rc ? rc : set("residual_tol", opt.residual_tol);
    rc = rc ? rc : set("budget", opt.budget);
    rc = rc ? rc : set("jobs", opt.jobs);
    if (opt.fast_saturate) rc = rc ? rc : set("fast_saturate", "1");
    return rc;
}

int emit(const Options& opt, const char* text) {
    if (opt.out_file.empty()) {
        std::cout << text;
        if (*text && text[std::string(text).size() - 1] != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream out(opt.out_file);
    if (!out) {
        std::cerr << "error: cannot write '" << opt.out_file << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

Variety load(hermdeg_session* s, const std::string& path, int& rc) {
    hermdeg_variety* v = nullptr;
    hermdeg_status st = hermdeg_variety_load(s, path.c_str(), &v);
    if (st != HERMDEG_OK) rc = fail(s, st);
    return Variety(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hermdeg: Hermitian distance degrees of complex algebraic varieties"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--config", opt.config_file, "key=value configuration file");
    app.add_option("--out", opt.out_file, "write output to a file instead of stdout");
    app.add_option("--seed", opt.seed, "random seed (also HERMDEG_SEED)");
    app.add_option("--trials", opt.trials, "modular trials for degree computations (default 3)");
    app.add_option("--tol", opt.tol, "conjugate-match tolerance (default 1e-6)");
    app.add_option("--residual-tol", opt.residual_tol, "solver certification tolerance (default 1e-10)");
    app.add_option("--budget", opt.budget, "reduction-step budget (default 10000000)");
    app.add_option("--jobs", opt.jobs, "worker threads for scans (default: logical cores)");
    app.add_flag("--fast-saturate", opt.fast_saturate, "probabilistic saturation by random combinations");

    std::string file, file_b, point, route = "auto", kind = "evolute";
    std::vector<std::string> window;
    std::string step = "0.25";
    int d = 0, nn = 0, mm = 0;
    bool hypersurface = false, parametrized = false, projective = false;
    std::string emit_csv;

    auto* c_vhd = app.add_subcommand("vhd", "virtual Hermitian distance degree");
    c_vhd->add_option("file", file, "variety file")->required();
    c_vhd->add_option("--route", route, "auto|affine|projective|param");

    auto* c_sample = app.add_subcommand("hd-sample", "critical points of the Hermitian distance at a point");
    c_sample->add_option("file", file)->required();
    c_sample->add_option("--at", point, "query point, e.g. \"3, 0\" or \"1/2+3/4*i, 2\"")->required();

    auto* c_scan = app.add_subcommand("hd-scan", "grid of critical-point counts (CSV x,y,count)");
    c_scan->add_option("file", file)->required();
    c_scan->add_option("--window", window, "xmin xmax ymin ymax")->expected(4);
    c_scan->add_option("--step", step, "grid step (default 0.25)");

    auto* c_crit = app.add_subcommand("critical-ideal", "Hermitian critical ideal (symbolic or at a point)");
    c_crit->add_option("file", file)->required();
    c_crit->add_option("--at", point, "query point (else symbolic u, v)");
    c_crit->add_flag("--projective", projective, "bi-homogeneous variant for cones");

    auto* c_ed = app.add_subcommand("ed", "Euclidean distance degree (real varieties)");
    c_ed->add_option("file", file)->required();

    auto* c_bounds = app.add_subcommand("bounds", "closed-form vHD bounds");
    c_bounds->add_flag("--hypersurface", hypersurface, "hypersurface bound for degree d in C^n");
    c_bounds->add_flag("--parametrized", parametrized, "parametrized bound for degree d, m parameters");
    c_bounds->add_option("-d", d, "degree")->required();
    c_bounds->add_option("-n", nn, "ambient dimension (hypersurface)");
    c_bounds->add_option("-m", mm, "parameter count (parametrized)");

    auto* c_evolute = app.add_subcommand("evolute", "evolute / outward / complex evolute of a plane curve");
    c_evolute->add_option("file", file)->required();
    c_evolute->add_option("--kind", kind, "evolute|outward|complex|complex-real");
    c_evolute->add_option("--emit-csv", emit_csv, "write sign sampling CSV to this file");
    c_evolute->add_option("--window", window, "xmin xmax ymin ymax")->expected(4);
    c_evolute->add_option("--step", step);

    auto* c_poly = app.add_subcommand("hd-poly", "vHD polynomial (symbolic) or HD polynomial at a point");
    c_poly->add_option("file", file)->required();
    c_poly->add_option("--at", point, "query point (v = conj u)");
    int duality_samples = 0;
    c_poly->add_option("--check-duality", duality_samples, "sample the duality identity for cones");

    auto* c_dual = app.add_subcommand("dual", "dual variety of a cone");
    c_dual->add_option("file", file)->required();

    auto* c_product = app.add_subcommand("product", "product variety X x Y");
    c_product->add_option("file", file)->required();
    c_product->add_option("file_b", file_b)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    Session session(hermdeg_session_create());
    if (int rc = apply_config(session.get(), opt)) return rc;

    std::string xmin = "-3", xmax = "3", ymin = "-3", ymax = "3";
    if (window.size() == 4) {
        xmin = window[0];
        xmax = window[1];
        ymin = window[2];
        ymax = window[3];
    }

    char* text = nullptr;
    hermdeg_status st = HERMDEG_OK;
    int rc = 0;

    if (*c_vhd) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        st = hermdeg_vhd(session.get(), v.get(), route.c_str(), &text);
    } else if (*c_sample) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        st = hermdeg_hd_sample(session.get(), v.get(), point.c_str(), &text);
    } else if (*c_scan) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        st = hermdeg_hd_scan(session.get(), v.get(), xmin.c_str(), xmax.c_str(), ymin.c_str(), ymax.c_str(),
                             step.c_str(), &text);
    } else if (*c_crit) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        st = hermdeg_critical_ideal(session.get(), v.get(), point.empty() ? nullptr : point.c_str(),
                                    projective ? 1 : 0, &text);
    } else if (*c_ed) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        st = hermdeg_ed(session.get(), v.get(), &text);
    } else if (*c_bounds) {
        if (hypersurface == parametrized) {
            std::cerr << "error: choose exactly one of --hypersurface / --parametrized\n";
            return 2;
        }
        if (hypersurface) st = hermdeg_bounds_hypersurface(session.get(), d, nn, &text);
        else st = hermdeg_bounds_parametrized(session.get(), d, mm, &text);
    } else if (*c_evolute) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        if (!emit_csv.empty()) {
            char* csv = nullptr;
            st = hermdeg_evolute_csv(session.get(), v.get(), kind.c_str(), xmin.c_str(), xmax.c_str(),
                                     ymin.c_str(), ymax.c_str(), step.c_str(), &csv);
            if (st == HERMDEG_OK) {
                std::ofstream outf(emit_csv);
                if (!outf) {
                    std::cerr << "error: cannot write '" << emit_csv << "'\n";
                    hermdeg_free(csv);
                    return 2;
                }
                outf << csv;
                hermdeg_free(csv);
            } else {
                return fail(session.get(), st);
            }
        }
        st = hermdeg_evolute(session.get(), v.get(), kind.c_str(), &text);
    } else if (*c_poly) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        if (duality_samples > 0)
            st = hermdeg_check_duality(session.get(), v.get(), duality_samples, &text);
        else
            st = hermdeg_hd_poly(session.get(), v.get(), point.empty() ? nullptr : point.c_str(), &text);
    } else if (*c_dual) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        st = hermdeg_dual(session.get(), v.get(), &text);
    } else if (*c_product) {
        Variety v = load(session.get(), file, rc);
        if (rc) return rc;
        Variety w = load(session.get(), file_b, rc);
        if (rc) return rc;
        st = hermdeg_product(session.get(), v.get(), w.get(), &text);
    }

    if (st != HERMDEG_OK) return fail(session.get(), st);
    rc = emit(opt, text ? text : "");
    hermdeg_free(text);
    return rc;
}
