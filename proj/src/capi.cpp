#include "hermdeg.h"

#include <cstring>
#include <sstream>

#include "json.hpp"

#include "hermdeg/degrees.hpp"
#include "hermdeg/evolute.hpp"
#include "hermdeg/hdpoly.hpp"

using json = nlohmann::ordered_json;
using namespace hermdeg;

struct hermdeg_session {
    degrees::Config cfg;
    std::string last_error;
};

struct hermdeg_variety {
    VarietySpec v;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

hermdeg_status set_error(hermdeg_session* s, const std::string& msg, hermdeg_status code) {
    if (s) s->last_error = msg;
    return code;
}

template <class Fn>
hermdeg_status guarded(hermdeg_session* s, Fn&& fn) {
    try {
        fn();
        if (s) s->last_error.clear();
        return HERMDEG_OK;
    } catch (const Error& e) {
        return set_error(s, e.what(), static_cast<hermdeg_status>(int(e.code())));
    } catch (const std::exception& e) {
        return set_error(s, e.what(), HERMDEG_ERR_INTERNAL);
    }
}

std::vector<coeff::GaussianRational> parse_point(const std::string& text, int n) {
    std::vector<coeff::GaussianRational> out;
    std::string cur;
    int depth = 0;
    auto flush = [&]() {
        if (cur.find_first_not_of(" \t") == std::string::npos)
            throw input_error("empty coordinate in point '" + text + "'");
        out.push_back(poly::parse_coefficient(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) flush();
        else cur += c;
    }
    flush();
    if (n >= 0 && int(out.size()) != n)
        throw input_error("point has " + std::to_string(out.size()) + " coordinates, expected " +
                          std::to_string(n));
    return out;
}

coeff::Rational parse_decimal(const std::string& text) {
    std::string t = text;
    size_t dot = t.find('.');
    if (dot == std::string::npos) { coeff::Rational r(t, 10); r.canonicalize(); return r; }
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac = t.size() - dot - 1;
    coeff::Rational r(digits, 10);
    coeff::Int den = 1;
    for (size_t i = 0; i < frac; ++i) den *= 10;
    r /= coeff::Rational(den);
    r.canonicalize();
    return r;
}

json trial_json(const degrees::DegreeReport& rep, const char* key) {
    json j;
    j["schema"] = 1;
    j[key] = rep.vhd;
    j["consensus"] = rep.consensus;
    switch (rep.route) {
        case degrees::Route::Affine: j["route"] = "affine"; break;
        case degrees::Route::Projective: j["route"] = "projective"; break;
        case degrees::Route::Parametrized: j["route"] = "param"; break;
        default: j["route"] = "auto"; break;
    }
    j["trials"] = json::array();
    for (const auto& t : rep.trials) {
        json tj;
        tj["prime"] = t.prime;
        tj["point_seed"] = t.point_seed;
        tj["degree"] = t.degree;
        tj["finite"] = t.finite;
        j["trials"].push_back(tj);
    }
    return j;
}

json int_or_string(const coeff::Int& v) {
    if (v.fits_slong_p() && std::abs(v.get_si()) < (1LL << 53)) return json(v.get_si());
    return json(v.get_str());
}

degrees::Route parse_route(const char* route) {
    std::string r = route ? route : "auto";
    if (r == "auto") return degrees::Route::Auto;
    if (r == "affine") return degrees::Route::Affine;
    if (r == "projective") return degrees::Route::Projective;
    if (r == "param") return degrees::Route::Parametrized;
    throw input_error("unknown route '" + r + "' (use auto, affine, projective or param)");
}

evolute::DiscKind parse_kind(const char* kind, bool& real_locus) {
    std::string k = kind ? kind : "evolute";
    real_locus = false;
    if (k == "evolute") return evolute::DiscKind::Evolute;
    if (k == "outward") return evolute::DiscKind::Outward;
    if (k == "complex") return evolute::DiscKind::ComplexVirtual;
    if (k == "complex-real") {
        real_locus = true;
        return evolute::DiscKind::ComplexRealLocus;
    }
    throw input_error("unknown evolute kind '" + k + "'");
}

evolute::DiscriminantPoly compute_evolute(const VarietySpec& v, const char* kind, ideal::GBRun& run) {
    bool real_locus = false;
    evolute::DiscKind k = parse_kind(kind, real_locus);
    evolute::PlaneCurve C = evolute::plane_curve(v);
    switch (k) {
        case evolute::DiscKind::Evolute: return evolute::evolute_poly(C, run);
        case evolute::DiscKind::Outward: return evolute::outward_evolute_poly(C, run);
        default: return evolute::complex_evolute_poly(C, real_locus, run);
    }
}

} // namespace

extern "C" {

hermdeg_session* hermdeg_session_create(void) { return new hermdeg_session(); }

void hermdeg_session_destroy(hermdeg_session* s) { delete s; }

hermdeg_status hermdeg_session_set(hermdeg_session* s, const char* key, const char* value) {
    if (!s || !key || !value) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        std::string k = key, v = value;
        if (k == "trials") s->cfg.trials = std::stoi(v);
        else if (k == "seed") s->cfg.seed = std::stoull(v);
        else if (k == "tol") s->cfg.tol = std::stod(v);
        else if (k == "residual_tol") s->cfg.residual_tol = std::stod(v);
        else if (k == "budget") s->cfg.budget = std::stoull(v);
        else if (k == "jobs") s->cfg.jobs = std::stoi(v);
        else if (k == "fast_saturate") s->cfg.fast_saturate = v != "0" && v != "false";
        else throw input_error("unknown configuration key '" + k + "'");
        if (s->cfg.trials < 1) throw input_error("trials must be >= 1");
        if (s->cfg.tol <= 0 || s->cfg.residual_tol <= 0) throw input_error("tolerances must be positive");
    });
}

const char* hermdeg_last_error(const hermdeg_session* s) { return s ? s->last_error.c_str() : ""; }

hermdeg_status hermdeg_variety_load(hermdeg_session* s, const char* path, hermdeg_variety** out) {
    if (!path || !out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() { *out = new hermdeg_variety{load_variety(path)}; });
}

hermdeg_status hermdeg_variety_parse(hermdeg_session* s, const char* text, hermdeg_variety** out) {
    if (!text || !out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() { *out = new hermdeg_variety{parse_variety(text)}; });
}

void hermdeg_variety_destroy(hermdeg_variety* v) { delete v; }

void hermdeg_free(char* p) { std::free(p); }

hermdeg_status hermdeg_vhd(hermdeg_session* s, const hermdeg_variety* v, const char* route, char** json_out) {
    if (!s || !v || !json_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        degrees::DegreeReport rep = degrees::vhd(v->v, s->cfg, parse_route(route));
        json j = trial_json(rep, "vhd");
        j["variety"] = v->v.name;
        *json_out = dup_string(j.dump(2));
    });
}

hermdeg_status hermdeg_hd_sample(hermdeg_session* s, const hermdeg_variety* v, const char* point,
                                 char** json_out) {
    if (!s || !v || !point || !json_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        auto u = parse_point(point, v->v.n);
        degrees::HDSample smp = degrees::hd_sample(v->v, u, s->cfg);
        json j;
        j["schema"] = 1;
        j["u"] = json::array();
        for (const auto& c : smp.u) j["u"].push_back(coeff::to_string(c));
        j["count"] = smp.count;
        j["paired"] = smp.paired;
        j["other"] = smp.other;
        j["total_with_multiplicity"] = smp.total_with_multiplicity;
        j["nudged"] = smp.nudged;
        char buf[40];
        j["distances_sq"] = json::array();
        for (double d : smp.distances_sq) {
            snprintf(buf, sizeof buf, "%.12g", d);
            j["distances_sq"].push_back(std::stod(buf));
        }
        j["solutions"] = json::array();
        for (const auto& sp : smp.solutions) {
            json sj;
            auto cvec = [](const std::vector<std::complex<double>>& xs) {
                json a = json::array();
                for (const auto& x : xs) a.push_back(json::array({x.real(), x.imag()}));
                return a;
            };
            sj["z"] = cvec(sp.z);
            sj["w"] = cvec(sp.w);
            sj["residual"] = sp.residual;
            sj["multiplicity"] = sp.multiplicity;
            sj["conjugated_single"] = sp.is_conjugated_single;
            j["solutions"].push_back(sj);
        }
        *json_out = dup_string(j.dump(2));
    });
}

hermdeg_status hermdeg_hd_scan(hermdeg_session* s, const hermdeg_variety* v, const char* xmin,
                               const char* xmax, const char* ymin, const char* ymax, const char* step,
                               char** csv_out) {
    if (!s || !v || !csv_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        degrees::ScanGrid g = degrees::hd_scan(v->v, parse_decimal(xmin), parse_decimal(xmax),
                                               parse_decimal(ymin), parse_decimal(ymax), parse_decimal(step),
                                               s->cfg);
        *csv_out = dup_string(degrees::scan_to_csv(g));
    });
}

hermdeg_status hermdeg_critical_ideal(hermdeg_session* s, const hermdeg_variety* v, const char* point,
                                      int projective, char** text_out) {
    if (!s || !v || !text_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        ideal::GBRun run(s->cfg.gb());
        IdealQ I;
        if (projective) {
            I = hermitian::projective_critical_ideal(v->v, run);
        } else {
            hermitian::QueryPoint q;
            if (point && *point) q = hermitian::QueryPoint::hd(parse_point(point, v->v.n));
            I = hermitian::hermitian_critical_ideal(v->v, q, run);
        }
        *text_out = dup_string(ideal_to_string(I));
    });
}

hermdeg_status hermdeg_ed(hermdeg_session* s, const hermdeg_variety* v, char** json_out) {
    if (!s || !v || !json_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        degrees::DegreeReport rep = degrees::ed_degree(v->v, s->cfg);
        json j = trial_json(rep, "ed");
        j["variety"] = v->v.name;
        *json_out = dup_string(j.dump(2));
    });
}

hermdeg_status hermdeg_bounds_hypersurface(hermdeg_session* s, int d, int n, char** json_out) {
    if (!s || !json_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        degrees::HypersurfaceBounds b = degrees::bound_hypersurface(d, n);
        json j;
        j["schema"] = 1;
        j["d"] = d;
        j["n"] = n;
        j["bezout"] = int_or_string(b.bezout);
        j["bkk"] = int_or_string(b.bkk);
        j["final"] = int_or_string(b.final);
        j["min_by"] = b.bezout_attains_min ? "bezout" : (b.bezout == b.bkk ? "tie" : "bkk");
        *json_out = dup_string(j.dump(2));
    });
}

hermdeg_status hermdeg_bounds_parametrized(hermdeg_session* s, int d, int m, char** json_out) {
    if (!s || !json_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        degrees::ParametrizedBounds b = degrees::bound_parametrized(d, m);
        json j;
        j["schema"] = 1;
        j["d"] = d;
        j["m"] = m;
        j["bezout"] = int_or_string(b.bezout);
        j["bkk"] = int_or_string(b.bkk);
        *json_out = dup_string(j.dump(2));
    });
}

hermdeg_status hermdeg_evolute(hermdeg_session* s, const hermdeg_variety* v, const char* kind,
                               char** text_out) {
    if (!s || !v || !text_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        ideal::GBRun run(s->cfg.gb());
        evolute::DiscriminantPoly D = compute_evolute(v->v, kind, run);
        *text_out = dup_string(poly::to_string(D.poly) + "\n");
    });
}

hermdeg_status hermdeg_evolute_csv(hermdeg_session* s, const hermdeg_variety* v, const char* kind,
                                   const char* xmin, const char* xmax, const char* ymin, const char* ymax,
                                   const char* step, char** csv_out) {
    if (!s || !v || !csv_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        bool real_locus = false;
        evolute::DiscKind k = parse_kind(kind, real_locus);
        if (k == evolute::DiscKind::ComplexVirtual)
            throw input_error("sign sampling needs a real-locus polynomial; use kind complex-real");
        ideal::GBRun run(s->cfg.gb());
        evolute::DiscriminantPoly D = compute_evolute(v->v, kind, run);
        coeff::Rational x0 = parse_decimal(xmin), x1 = parse_decimal(xmax);
        coeff::Rational y0 = parse_decimal(ymin), y1 = parse_decimal(ymax), st = parse_decimal(step);
        if (st <= 0 || x1 < x0 || y1 < y0) throw input_error("bad window");
        std::ostringstream os;
        os << "x,y,sign\n";
        char buf[64];
        for (coeff::Rational y = y0; y <= y1; y += st)
            for (coeff::Rational x = x0; x <= x1; x += st) {
                coeff::GaussianRational val = poly::evaluate(
                    D.poly, {coeff::GaussianRational(x), coeff::GaussianRational(y)}, coeff::GaussianRational(1));
                int sign = val.re == 0 ? 0 : (val.re > 0 ? 1 : -1);
                snprintf(buf, sizeof buf, "%.10g,%.10g,%d\n", x.get_d(), y.get_d(), sign);
                os << buf;
            }
        *csv_out = dup_string(os.str());
    });
}

hermdeg_status hermdeg_hd_poly(hermdeg_session* s, const hermdeg_variety* v, const char* at_point,
                               char** text_out) {
    if (!s || !v || !text_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        ideal::GBRun run(s->cfg.gb());
        hdpoly::HDPoly P;
        if (at_point && *at_point) P = hdpoly::hd_polynomial_at(v->v, parse_point(at_point, v->v.n), run);
        else P = hdpoly::vhd_polynomial(v->v, run);
        *text_out = dup_string(hdpoly::to_string(P) + "\n");
    });
}

hermdeg_status hermdeg_check_duality(hermdeg_session* s, const hermdeg_variety* v, int samples,
                                     char** json_out) {
    if (!s || !v || !json_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        ideal::GBRun run(s->cfg.gb());
        hdpoly::DualityReport rep = hdpoly::check_duality(v->v, samples, s->cfg.seed, run);
        json j;
        j["schema"] = 1;
        j["samples"] = rep.samples;
        j["matched"] = rep.matched;
        j["holds"] = rep.holds();
        *json_out = dup_string(j.dump(2));
    });
}

hermdeg_status hermdeg_dual(hermdeg_session* s, const hermdeg_variety* v, char** text_out) {
    if (!s || !v || !text_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() {
        ideal::GBRun run(s->cfg.gb());
        VarietySpec dual = hermitian::dual_variety(v->v, run);
        *text_out = dup_string(variety_to_string(dual));
    });
}

hermdeg_status hermdeg_product(hermdeg_session* s, const hermdeg_variety* a, const hermdeg_variety* b,
                               char** text_out) {
    if (!s || !a || !b || !text_out) return HERMDEG_ERR_INPUT;
    return guarded(s, [&]() { *text_out = dup_string(variety_to_string(product_variety(a->v, b->v))); });
}

} // extern "C"
