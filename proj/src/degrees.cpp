#include "hermdeg/degrees.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace hermdeg::degrees {

using coeff::Fp;
using hermitian::CriticalSystem;
using hermitian::ParametrizedSystem;
using ideal::GBRun;
using ideal::GroebnerBasis;
using ideal::Ideal;
using poly::Mono;
using poly::PolyP;
using poly::PolyQ;
using poly::RingPtr;

namespace {

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t x = seed * 0x9e3779b97f4a7c15ULL + salt * 0xbf58476d1ce4e5b9ULL + 1;
    x ^= x >> 31;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 29;
    return x;
}

struct ModSystem {
    RingPtr ring; // [z, w] over F_p
    std::vector<PolyP> equations;
    std::vector<PolyP> sing, sing_star;
    PolyP zw_real;
};

// Reduce the exact symbolic system mod p and substitute random (u, v).
ModSystem specialize_mod_p(const CriticalSystem& S, uint32_t p, std::mt19937_64& rng) {
    int n = S.n;
    RingPtr big = poly::mod_ring(S.ring, p);
    std::vector<std::optional<Fp>> vals(size_t(4 * n));
    for (int i = 0; i < n; ++i) {
        vals[size_t(S.ui(i))] = Fp{uint32_t(rng() % p), p};
        vals[size_t(S.vi(i))] = Fp{uint32_t(rng() % p), p};
    }
    std::vector<std::string> names;
    for (int i = 0; i < 2 * n; ++i) names.push_back(S.ring->vars[size_t(i)]);
    RingPtr zw = poly::make_ring(names, poly::FieldTag::PrimeField, poly::MonomialOrder::degrevlex(), p);
    std::vector<int> proj(size_t(4 * n), -1);
    for (int i = 0; i < 2 * n; ++i) proj[size_t(i)] = i;

    ModSystem out;
    out.ring = zw;
    auto push = [&](const PolyQ& f, std::vector<PolyP>& dst) {
        PolyP g = poly::map_vars(poly::substitute_values(poly::reduce_mod(f, p, big), vals), zw, proj);
        if (!g.is_zero()) dst.push_back(std::move(g));
    };
    for (const auto& f : S.equations) push(f, out.equations);
    for (const auto& f : S.sing) push(f, out.sing);
    for (const auto& f : S.sing_star) push(f, out.sing_star);
    out.zw_real = poly::map_vars(poly::reduce_mod(S.zw_real, p, big), zw, proj);
    return out;
}

int64_t count_degree_mod_p(const ModSystem& M, bool projective, std::mt19937_64& rng, GBRun& run) {
    Ideal<Fp> I{M.ring, M.equations};
    I = ideal::saturate_by_ideal(I, Ideal<Fp>{M.ring, M.sing}, run);
    I = ideal::saturate_by_ideal(I, Ideal<Fp>{M.ring, M.sing_star}, run);
    if (projective) {
        I = ideal::saturate(I, M.zw_real, run);
        // generic affine charts <a,z> = 1 and <b,w> = 1 turn the bi-projective
        // count into an affine degree
        int n2 = M.ring->nvars();
        int n = n2 / 2;
        uint32_t p = M.ring->p;
        PolyP ca = poly::make_const<Fp>(M.ring, Fp{p - 1, p}); // -1
        PolyP cb = ca;
        for (int i = 0; i < n; ++i) {
            ca = poly::add(ca, poly::mul_term(poly::make_var<Fp>(M.ring, i, Fp{1, p}), Fp{uint32_t(1 + rng() % (p - 1)), p}, Mono{}));
            cb = poly::add(cb, poly::mul_term(poly::make_var<Fp>(M.ring, n + i, Fp{1, p}), Fp{uint32_t(1 + rng() % (p - 1)), p}, Mono{}));
        }
        I.gens.push_back(ca);
        I.gens.push_back(cb);
    }
    GroebnerBasis<Fp> G = ideal::groebner(I, run);
    if (G.is_unit()) return 0;
    int dim = ideal::dimension(G);
    if (dim != 0) return -1; // not finite at this point
    return ideal::degree_zero_dim(G);
}

int64_t count_degree_param_mod_p(const ParametrizedSystem& S, uint32_t p, std::mt19937_64& rng, GBRun& run) {
    int m = S.m, n = S.n;
    RingPtr big = poly::mod_ring(S.ring, p);
    std::vector<std::optional<Fp>> vals(size_t(S.ring->nvars()));
    for (int k = 0; k < n; ++k) {
        vals[size_t(2 * m + k)] = Fp{uint32_t(rng() % p), p};
        vals[size_t(2 * m + n + k)] = Fp{uint32_t(rng() % p), p};
    }
    std::vector<std::string> names;
    for (int i = 0; i < 2 * m; ++i) names.push_back(S.ring->vars[size_t(i)]);
    RingPtr zw = poly::make_ring(names, poly::FieldTag::PrimeField, poly::MonomialOrder::degrevlex(), p);
    std::vector<int> proj(size_t(S.ring->nvars()), -1);
    for (int i = 0; i < 2 * m; ++i) proj[size_t(i)] = i;
    Ideal<Fp> I{zw, {}};
    for (const auto& f : S.equations) {
        PolyP g = poly::map_vars(poly::substitute_values(poly::reduce_mod(f, p, big), vals), zw, proj);
        if (!g.is_zero()) I.gens.push_back(std::move(g));
    }
    GroebnerBasis<Fp> G = ideal::groebner(I, run);
    if (G.is_unit()) return 0;
    if (ideal::dimension(G) != 0) return -1;
    return ideal::degree_zero_dim(G);
}

} // namespace

DegreeReport vhd(const VarietySpec& V, const Config& cfg, Route route) {
    if (route == Route::Auto) {
        if (V.parametrized() && V.generators.empty()) route = Route::Parametrized;
        else if (V.homogeneous) route = Route::Projective;
        else route = Route::Affine;
    }
    if (cfg.trials < 1) throw input_error("vhd: trials must be >= 1");

    DegreeReport rep;
    rep.route = route;
    std::optional<CriticalSystem> S;
    std::optional<ParametrizedSystem> PS;
    if (route == Route::Parametrized) PS = hermitian::parametrized_critical_system(V, QueryPoint::sym());
    else S = hermitian::build_critical_system(V, route == Route::Projective);

    for (int t = 0; t < cfg.trials; ++t) {
        Trial trial;
        trial.prime = cfg.primes[size_t(t) % cfg.primes.size()];
        trial.point_seed = mix_seed(cfg.seed, uint64_t(t) + 101);
        std::mt19937_64 rng(trial.point_seed);
        GBRun run(cfg.gb());
        int64_t deg;
        if (route == Route::Parametrized) deg = count_degree_param_mod_p(*PS, trial.prime, rng, run);
        else deg = count_degree_mod_p(specialize_mod_p(*S, trial.prime, rng), route == Route::Projective, rng, run);
        trial.finite = deg >= 0;
        trial.degree = deg;
        rep.trials.push_back(trial);
    }
    int64_t best = -1;
    bool any = false, agree = true;
    int64_t first = -1;
    for (const auto& t : rep.trials) {
        if (!t.finite) {
            agree = false;
            continue;
        }
        if (!any) first = t.degree;
        any = true;
        agree = agree && t.degree == first;
        best = std::max(best, t.degree);
    }
    if (!any) throw input_error("NotFinite: the critical ideal stayed positive-dimensional in all trials");
    rep.vhd = best;
    rep.consensus = agree;
    return rep;
}

DegreeReport ed_degree(const VarietySpec& V, const Config& cfg) {
    if (cfg.trials < 1) throw input_error("ed_degree: trials must be >= 1");
    // exact symbolic critical ideal of Eq. (conded), u symbolic
    GBRun build_run(cfg.gb());
    Ideal<GaussianRational> I = hermitian::ed_critical_ideal(V, {}, build_run);
    int n = V.n;
    DegreeReport rep;
    rep.route = Route::Affine;
    for (int t = 0; t < cfg.trials; ++t) {
        Trial trial;
        trial.prime = cfg.primes[size_t(t) % cfg.primes.size()];
        trial.point_seed = mix_seed(cfg.seed, uint64_t(t) + 7001);
        std::mt19937_64 rng(trial.point_seed);
        uint32_t p = trial.prime;
        RingPtr big = poly::mod_ring(I.ring, p);
        std::vector<std::optional<Fp>> vals(size_t(I.ring->nvars()));
        for (int i = n; i < 2 * n; ++i) vals[size_t(i)] = Fp{uint32_t(rng() % p), p};
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back(I.ring->vars[size_t(i)]);
        RingPtr zring = poly::make_ring(names, poly::FieldTag::PrimeField, poly::MonomialOrder::degrevlex(), p);
        std::vector<int> proj(size_t(I.ring->nvars()), -1);
        for (int i = 0; i < n; ++i) proj[size_t(i)] = i;
        Ideal<Fp> J{zring, {}};
        for (const auto& f : I.gens) {
            PolyP g = poly::map_vars(poly::substitute_values(poly::reduce_mod(f, p, big), vals), zring, proj);
            if (!g.is_zero()) J.gens.push_back(std::move(g));
        }
        GBRun run(cfg.gb());
        GroebnerBasis<Fp> G = ideal::groebner(J, run);
        if (G.is_unit()) {
            trial.finite = true;
            trial.degree = 0;
        } else if (ideal::dimension(G) != 0) {
            trial.finite = false;
        } else {
            trial.finite = true;
            trial.degree = ideal::degree_zero_dim(G);
        }
        rep.trials.push_back(trial);
    }
    int64_t best = -1, first = -1;
    bool any = false, agree = true;
    for (const auto& t : rep.trials) {
        if (!t.finite) {
            agree = false;
            continue;
        }
        if (!any) first = t.degree;
        any = true;
        agree = agree && t.degree == first;
        best = std::max(best, t.degree);
    }
    if (!any) throw input_error("NotFinite: the ED critical ideal stayed positive-dimensional in all trials");
    rep.vhd = best;
    rep.consensus = agree;
    return rep;
}

// ---------------------------------------------------------------------------
// hd_sample
// ---------------------------------------------------------------------------

namespace {

HDSample classify(const VarietySpec& V, const std::vector<GaussianRational>& u,
                  const numsolve::SolveReport& sol, int n, const Config& cfg) {
    HDSample out;
    out.u = u;
    out.total_with_multiplicity = sol.total_with_multiplicity;
    std::vector<std::complex<double>> uc, vc;
    for (const auto& c : u) {
        uc.push_back(c.to_complex());
        vc.push_back(std::conj(c.to_complex()));
    }
    std::vector<int> pair_partner(sol.roots.size(), -1);
    for (size_t i = 0; i < sol.roots.size(); ++i) {
        const auto& r = sol.roots[i];
        SolutionPoint sp;
        sp.z.assign(r.x.begin(), r.x.begin() + n);
        sp.w.assign(r.x.begin() + n, r.x.begin() + 2 * n);
        sp.residual = r.residual;
        sp.multiplicity = r.multiplicity;
        double dev = 0;
        for (int k = 0; k < n; ++k)
            dev = std::max(dev, std::abs(sp.w[size_t(k)] - std::conj(sp.z[size_t(k)])) /
                                    (1.0 + std::abs(sp.z[size_t(k)])));
        sp.is_conjugated_single = dev <= cfg.tol;
        out.solutions.push_back(std::move(sp));
    }
    // match associated pairs (z,w) <-> (conj w, conj z)
    for (size_t i = 0; i < out.solutions.size(); ++i) {
        if (out.solutions[i].is_conjugated_single || pair_partner[i] >= 0) continue;
        for (size_t j = 0; j < out.solutions.size(); ++j) {
            if (j == i || out.solutions[j].is_conjugated_single || pair_partner[j] >= 0) continue;
            double dev = 0;
            for (int k = 0; k < n; ++k) {
                dev = std::max(dev, std::abs(out.solutions[j].z[size_t(k)] - std::conj(out.solutions[i].w[size_t(k)])));
                dev = std::max(dev, std::abs(out.solutions[j].w[size_t(k)] - std::conj(out.solutions[i].z[size_t(k)])));
            }
            if (dev <= cfg.tol * 10) {
                pair_partner[i] = int(j);
                pair_partner[j] = int(i);
                break;
            }
        }
    }
    for (size_t i = 0; i < out.solutions.size(); ++i) {
        const auto& sp = out.solutions[i];
        if (sp.is_conjugated_single) {
            out.count += sp.multiplicity;
            std::complex<double> t2 = 0;
            for (int k = 0; k < n; ++k) t2 += (uc[size_t(k)] - sp.z[size_t(k)]) * (vc[size_t(k)] - sp.w[size_t(k)]);
            out.distances_sq.push_back(t2.real());
        } else if (pair_partner[i] > int(i)) {
            out.paired += 1;
        } else if (pair_partner[i] < 0) {
            out.other += 1;
        }
    }
    std::sort(out.distances_sq.begin(), out.distances_sq.end());
    (void)V;
    return out;
}

std::optional<HDSample> try_sample(const VarietySpec& V, const std::vector<GaussianRational>& u,
                                   const Config& cfg) {
    QueryPoint q = QueryPoint::hd(u);
    CriticalSystem S = hermitian::build_critical_system(V, false);
    std::vector<PolyQ> sing, sing_star;
    Ideal<GaussianRational> I = hermitian::specialize_critical(S, q, &sing, &sing_star, nullptr);
    std::vector<PolyQ> refine = I.gens; // unsaturated equations
    GBRun run(cfg.gb());
    I = ideal::saturate_by_ideal(I, Ideal<GaussianRational>{I.ring, sing}, run);
    I = ideal::saturate_by_ideal(I, Ideal<GaussianRational>{I.ring, sing_star}, run);
    numsolve::SolveOptions sopt;
    sopt.tol = cfg.residual_tol;
    sopt.seed = cfg.seed;
    numsolve::SolveReport sol;
    try {
        sol = numsolve::solve_zero_dim(I, refine, sopt, run);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Input) return std::nullopt; // not zero-dimensional here
        throw;
    }
    for (const auto& r : sol.roots)
        if (r.multiplicity > 1) return std::nullopt; // multiplicity cluster: discriminant hit
    return classify(V, u, sol, V.n, cfg);
}

} // namespace

HDSample hd_sample(const VarietySpec& V, std::vector<GaussianRational> u, const Config& cfg) {
    if (int(u.size()) != V.n) throw input_error("hd_sample: point has wrong dimension");
    if (auto s = try_sample(V, u, cfg)) return *s;
    // one automatic nudge by ~1e-6 in a random real direction
    std::mt19937_64 rng(mix_seed(cfg.seed, 0xadd1e));
    std::vector<GaussianRational> nudged = u;
    for (auto& c : nudged) {
        long dir = long(rng() % 2001) - 1000;
        c = c + GaussianRational(coeff::make_rational(dir, 1000000000L));
    }
    if (auto s = try_sample(V, nudged, cfg)) {
        s->nudged = true;
        return *s;
    }
    throw degenerate_error("DegenerateSample: critical points cluster at this query point; resample advised");
}

// ---------------------------------------------------------------------------
// hd_scan
// ---------------------------------------------------------------------------

ScanGrid hd_scan(const VarietySpec& V, const Rational& xmin, const Rational& xmax, const Rational& ymin,
                 const Rational& ymax, const Rational& step, const Config& cfg) {
    if (V.n != 2) throw input_error("hd_scan: only plane varieties (n = 2) are supported");
    for (const auto& f : V.generators)
        for (const auto& t : f.t)
            if (!(t.c.im == 0)) throw input_error("hd_scan: generators must have real coefficients");
    if (step <= 0 || xmax < xmin || ymax < ymin) throw input_error("hd_scan: bad window");
    ScanGrid g;
    for (Rational x = xmin; x <= xmax; x += step) g.xs.push_back(x);
    for (Rational y = ymin; y <= ymax; y += step) g.ys.push_back(y);
    g.counts.assign(g.xs.size() * g.ys.size(), -1);

    unsigned jobs = cfg.jobs > 0 ? unsigned(cfg.jobs) : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    size_t total = g.counts.size();
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            size_t iy = idx / g.xs.size(), ix = idx % g.xs.size();
            Config cell_cfg = cfg;
            cell_cfg.seed = mix_seed(cfg.seed, idx + 7);
            try {
                HDSample s = hd_sample(V, {GaussianRational(g.xs[ix]), GaussianRational(g.ys[iy])}, cell_cfg);
                g.counts[idx] = s.count;
            } catch (const Error&) {
                g.counts[idx] = -1; // degenerate or infinite cell
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return g;
}

std::string scan_to_csv(const ScanGrid& g) {
    std::ostringstream os;
    os << "x,y,count\n";
    char buf[64];
    for (size_t iy = 0; iy < g.ys.size(); ++iy)
        for (size_t ix = 0; ix < g.xs.size(); ++ix) {
            snprintf(buf, sizeof buf, "%.10g,%.10g,", g.xs[ix].get_d(), g.ys[iy].get_d());
            os << buf << g.at(ix, iy) << "\n";
        }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

namespace {

coeff::Int binom(int n, int k) {
    coeff::Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

coeff::Int ipow(coeff::Int base, int e) {
    coeff::Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), (unsigned long)e);
    return r;
}

} // namespace

HypersurfaceBounds bound_hypersurface(int d, int n) {
    if (d < 1 || n < 1) throw input_error("bound_hypersurface: need d >= 1, n >= 1");
    HypersurfaceBounds b;
    coeff::Int d2 = coeff::Int(d) * d;
    b.bezout = 0;
    for (int k = 0; k <= 2 * n - 2; ++k) b.bezout += coeff::Int(k + 1) * ipow(d - 1, k);
    b.bezout *= d2;
    b.bkk = 0;
    for (int k = 0; k <= n - 1; ++k) b.bkk += binom(n - 1, k) * binom(n - 1, k) * ipow(d - 1, 2 * k);
    b.bkk *= d2;
    b.final = b.bezout < b.bkk ? b.bezout : b.bkk;
    b.bezout_attains_min = b.bezout < b.bkk;
    return b;
}

ParametrizedBounds bound_parametrized(int d, int m) {
    if (d < 1 || m < 1) throw input_error("bound_parametrized: need d >= 1, m >= 1");
    ParametrizedBounds b;
    b.bezout = ipow(2 * d - 1, 2 * m);
    b.bkk = 0;
    for (int k = 0; k <= m; ++k)
        b.bkk += binom(m, k) * binom(m, k) * ipow(d, 2 * (m - k)) * ipow(d - 1, 2 * k);
    return b;
}

std::set<int64_t> product_hd(const std::set<int64_t>& a, const std::set<int64_t>& b) {
    std::set<int64_t> out;
    for (int64_t x : a)
        for (int64_t y : b) out.insert(x * y);
    return out;
}

} // namespace hermdeg::degrees
