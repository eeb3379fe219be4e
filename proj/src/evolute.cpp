#include "hermdeg/evolute.hpp"

#include "hermdeg/parser.hpp"

namespace hermdeg::evolute {

using ideal::Ideal;
using poly::Mono;

PlaneCurve plane_curve(const VarietySpec& V) {
    if (V.n != 2 || V.generators.size() != 1)
        throw input_error("plane_curve: need exactly one generator in two variables");
    PlaneCurve C;
    C.f = V.generators[0];
    C.real_coefficients = true;
    for (const auto& t : C.f.t)
        if (!(t.c.im == 0)) C.real_coefficients = false;
    if (C.f.is_zero() || C.f.is_constant()) throw input_error("plane_curve: generator must be nonconstant");
    return C;
}

namespace {

// ring [z1, z2, u1, u2]; curve mapped to the z block
struct RealEvoluteData {
    poly::RingPtr ring;
    PolyQ f, g, phi, grad_sq;
};

RealEvoluteData real_evolute_data(const PlaneCurve& C) {
    RealEvoluteData D;
    D.ring = poly::make_ring({"z1", "z2", "u1", "u2"});
    D.f = poly::map_vars(C.f, D.ring, {0, 1});
    PolyQ d1 = poly::derivative(D.f, 0), d2 = poly::derivative(D.f, 1);
    PolyQ u1 = poly::make_varq(D.ring, 2), u2 = poly::make_varq(D.ring, 3);
    PolyQ z1 = poly::make_varq(D.ring, 0), z2 = poly::make_varq(D.ring, 1);
    D.g = poly::sub(poly::mul(poly::sub(u2, z2), d1), poly::mul(poly::sub(u1, z1), d2));
    D.phi = poly::sub(poly::mul(poly::derivative(D.g, 0), d2), poly::mul(poly::derivative(D.g, 1), d1));
    D.grad_sq = poly::add(poly::mul(d1, d1), poly::mul(d2, d2));
    return D;
}

IdealQ saturated_real(const RealEvoluteData& D, const PolyQ& third, GBRun& run) {
    IdealQ I{D.ring, {D.f, D.g, third}};
    PolyQ d1 = poly::derivative(D.f, 0), d2 = poly::derivative(D.f, 1);
    return ideal::saturate_by_ideal(I, IdealQ{D.ring, {d1, d2}}, run);
}

DiscriminantPoly principal_in_u(const IdealQ& sat, const std::vector<int>& elim_block, DiscKind kind,
                                GBRun& run) {
    IdealQ E = ideal::eliminate(sat, elim_block, run);
    if (E.gens.empty())
        throw internal_error("elimination returned the zero ideal; the locus fills the plane");
    if (E.gens.size() > 1) {
        // the locus degenerated below a hypersurface (e.g. the evolute of a
        // circle is its center); for real generators the real zero set is
        // still cut out by the sum of squares of the reduced basis
        bool all_real = true;
        for (const auto& g : E.gens)
            for (const auto& t : g.t) all_real = all_real && t.c.im == 0;
        if (!all_real) {
            std::string msg = "EliminationNotPrincipal:";
            for (const auto& g : E.gens) msg += "\n  " + poly::to_string(g);
            throw internal_error(msg);
        }
        PolyQ ss = poly::make_zero<GaussianRational>(E.ring);
        for (const auto& g : E.gens) ss = poly::add(ss, poly::mul(g, g));
        return {poly::primitive_part(ss), kind};
    }
    return {poly::primitive_part(E.gens[0]), kind};
}

} // namespace

IdealQ evolute_ideal(const PlaneCurve& C, GBRun& run) {
    if (!C.real_coefficients) throw input_error("evolute: curve must have real coefficients");
    RealEvoluteData D = real_evolute_data(C);
    return saturated_real(D, D.phi, run);
}

DiscriminantPoly evolute_poly(const PlaneCurve& C, GBRun& run) {
    IdealQ sat = evolute_ideal(C, run);
    return principal_in_u(sat, {0, 1}, DiscKind::Evolute, run);
}

IdealQ outward_evolute_ideal(const PlaneCurve& C, GBRun& run) {
    if (!C.real_coefficients) throw input_error("outward evolute: curve must have real coefficients");
    RealEvoluteData D = real_evolute_data(C);
    PolyQ third = poly::sub(D.phi, poly::mul_term(D.grad_sq, GaussianRational(2), Mono{}));
    return saturated_real(D, third, run);
}

DiscriminantPoly outward_evolute_poly(const PlaneCurve& C, GBRun& run) {
    IdealQ sat = outward_evolute_ideal(C, run);
    return principal_in_u(sat, {0, 1}, DiscKind::Outward, run);
}

namespace {

// ring [z1, z2, w1, w2, u1, u2, v1, v2] (or with v = u substituted)
struct ComplexEvoluteData {
    poly::RingPtr ring;
    std::vector<PolyQ> gens;  // f, f*, g~, g~*, xi
    std::vector<PolyQ> grads; // saturating ideal generators
};

ComplexEvoluteData complex_evolute_data(const PlaneCurve& C, bool identify_v_with_u) {
    ComplexEvoluteData D;
    std::vector<std::string> names{"z1", "z2", "w1", "w2", "u1", "u2"};
    if (!identify_v_with_u) {
        names.push_back("v1");
        names.push_back("v2");
    }
    D.ring = poly::make_ring(names);
    int v1 = identify_v_with_u ? 4 : 6, v2 = identify_v_with_u ? 5 : 7;

    PolyQ f = poly::map_vars(C.f, D.ring, {0, 1});
    PolyQ d1 = poly::derivative(f, 0), d2 = poly::derivative(f, 1);
    PolyQ w1 = poly::make_varq(D.ring, 2), w2 = poly::make_varq(D.ring, 3);
    PolyQ vv1 = poly::make_varq(D.ring, v1), vv2 = poly::make_varq(D.ring, v2);
    PolyQ gt = poly::sub(poly::mul(poly::sub(vv2, w2), d1), poly::mul(poly::sub(vv1, w1), d2));
    PolyQ phit = poly::sub(poly::mul(d2, poly::derivative(gt, 0)), poly::mul(d1, poly::derivative(gt, 1)));

    // f* and g~*, phi~* by hand when v is identified with u (the ring then
    // has no involution on u), otherwise via star
    PolyQ fs, gts, phits;
    if (!identify_v_with_u) {
        fs = poly::star(f);
        gts = poly::star(gt);
        phits = poly::star(phit);
    } else {
        // conjugate coefficients, swap z<->w, and fix u (= v, real locus)
        auto conj_swap = [&](const PolyQ& h) {
            PolyQ r = poly::map_vars(h, D.ring, {2, 3, 0, 1, 4, 5});
            for (auto& t : r.t) t.c = coeff::conj(t.c);
            poly::canonicalize(r);
            return r;
        };
        fs = conj_swap(f);
        gts = conj_swap(gt);
        phits = conj_swap(phit);
    }
    PolyQ e1 = poly::derivative(fs, 2), e2 = poly::derivative(fs, 3);
    PolyQ pairing = poly::add(poly::mul(d1, e1), poly::mul(d2, e2));
    PolyQ xi = poly::sub(poly::mul(phit, phits), poly::mul(pairing, pairing));

    D.gens = {f, fs, gt, gts, xi};
    D.grads = {d1, d2, e1, e2};
    return D;
}

} // namespace

IdealQ complex_evolute_ideal(const PlaneCurve& C, GBRun& run) {
    ComplexEvoluteData D = complex_evolute_data(C, false);
    IdealQ I{D.ring, D.gens};
    return ideal::saturate_by_ideal(I, IdealQ{D.ring, D.grads}, run);
}

DiscriminantPoly complex_evolute_poly(const PlaneCurve& C, bool real_locus, GBRun& run) {
    if (!real_locus) {
        IdealQ sat = complex_evolute_ideal(C, run);
        return principal_in_u(sat, {0, 1, 2, 3}, DiscKind::ComplexVirtual, run);
    }
    try {
        GBRun symbolic_run(run.opts);
        IdealQ sat = complex_evolute_ideal(C, symbolic_run);
        DiscriminantPoly full = principal_in_u(sat, {0, 1, 2, 3}, DiscKind::ComplexVirtual, symbolic_run);
        run.tick(symbolic_run.steps);
        // restrict to real points: v = u
        poly::RingPtr uring = poly::make_ring({"u1", "u2"});
        PolyQ r = poly::map_vars(full.poly, uring, {0, 1, 0, 1});
        return {poly::primitive_part(r), DiscKind::ComplexRealLocus};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Budget) throw;
        // fallback: identify v with u before eliminating
        ComplexEvoluteData D = complex_evolute_data(C, true);
        IdealQ I{D.ring, D.gens};
        IdealQ sat = ideal::saturate_by_ideal(I, IdealQ{D.ring, D.grads}, run);
        return principal_in_u(sat, {0, 1, 2, 3}, DiscKind::ComplexRealLocus, run);
    }
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

namespace {

bool univariate(const PolyQ& f) {
    return f.ring->nvars() == 1;
}

PolyQ poly_gcd(PolyQ a, PolyQ b, int var = 0) {
    // Euclid with monic remainders
    while (!b.is_zero()) {
        // a mod b
        PolyQ r = a;
        while (!r.is_zero() && r.lt().m.e[size_t(var)] >= b.lt().m.e[size_t(var)]) {
            Mono q = poly::mono_div(r.lt().m, b.lt().m, r.ring->nvars());
            r = poly::sub_mul(r, r.lt().c / b.lt().c, q, b);
        }
        a = b;
        b = r;
    }
    return poly::monic(a);
}

} // namespace

RatFun ratfun(const PolyQ& num, const PolyQ& den) {
    if (!univariate(num) || !univariate(den)) throw input_error("ratfun: univariate polynomials required");
    if (den.is_zero()) throw input_error("ratfun: zero denominator");
    PolyQ g = poly_gcd(num, den);
    RatFun r{num, den};
    if (!num.is_zero() && g.total_degree() > 0) {
        auto qn = poly::div_exact(num, g);
        auto qd = poly::div_exact(den, g);
        if (qn && qd) r = {*qn, *qd};
    }
    // normalize: monic denominator
    GaussianRational lc = r.den.lt().c;
    r.den = poly::mul_term(r.den, coeff::inv(lc), Mono{});
    r.num = poly::mul_term(r.num, coeff::inv(lc), Mono{});
    return r;
}

RatFun ratfun(const PolyQ& num) {
    return ratfun(num, poly::make_const(num.ring, GaussianRational(1)));
}

RatFun rf_add(const RatFun& a, const RatFun& b) {
    return ratfun(poly::add(poly::mul(a.num, b.den), poly::mul(b.num, a.den)), poly::mul(a.den, b.den));
}
RatFun rf_sub(const RatFun& a, const RatFun& b) {
    return ratfun(poly::sub(poly::mul(a.num, b.den), poly::mul(b.num, a.den)), poly::mul(a.den, b.den));
}
RatFun rf_mul(const RatFun& a, const RatFun& b) {
    return ratfun(poly::mul(a.num, b.num), poly::mul(a.den, b.den));
}
RatFun rf_div(const RatFun& a, const RatFun& b) {
    if (b.num.is_zero()) throw input_error("ratfun: division by zero");
    return ratfun(poly::mul(a.num, b.den), poly::mul(a.den, b.num));
}
RatFun rf_derivative(const RatFun& a) {
    PolyQ n = poly::sub(poly::mul(poly::derivative(a.num, 0), a.den), poly::mul(a.num, poly::derivative(a.den, 0)));
    return ratfun(n, poly::mul(a.den, a.den));
}
bool rf_is_zero(const RatFun& a) { return a.num.is_zero(); }
bool rf_equal(const RatFun& a, const RatFun& b) {
    return poly::equal(poly::mul(a.num, b.den), poly::mul(b.num, a.den));
}
GaussianRational rf_eval(const RatFun& a, const GaussianRational& t) {
    GaussianRational one(1);
    GaussianRational n = poly::evaluate(a.num, {t}, one);
    GaussianRational d = poly::evaluate(a.den, {t}, one);
    if (d.is_zero()) throw input_error("ratfun: pole at evaluation point");
    return n / d;
}

RatFun parse_ratfun(const std::string& text, const poly::RingPtr& ring) {
    // split at a top-level '/'
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '/' && depth == 0) {
            PolyQ den = poly::parse_poly(text.substr(i + 1), ring);
            if (!den.is_constant())
                return ratfun(poly::parse_poly(text.substr(0, i), ring), den);
        }
    }
    return ratfun(poly::parse_poly(text, ring));
}

std::string rf_to_string(const RatFun& a) {
    if (a.den.is_constant()) return poly::to_string(a.num);
    return "(" + poly::to_string(a.num) + ")/(" + poly::to_string(a.den) + ")";
}

std::pair<RatFun, RatFun> parametric_evolute(const std::pair<RatFun, RatFun>& psi) {
    RatFun p1 = rf_derivative(psi.first), p2 = rf_derivative(psi.second);
    RatFun p1p = rf_derivative(p1), p2p = rf_derivative(p2);
    RatFun curv = rf_sub(rf_mul(p1, p2p), rf_mul(p1p, p2));
    if (rf_is_zero(curv)) throw input_error("ZeroCurvature: the parametrization traces a line");
    RatFun speed = rf_add(rf_mul(p1, p1), rf_mul(p2, p2));
    RatFun s = rf_div(speed, curv);
    return {rf_sub(psi.first, rf_mul(p2, s)), rf_add(psi.second, rf_mul(p1, s))};
}

std::pair<RatFun, RatFun> parametric_outward(const std::pair<RatFun, RatFun>& psi) {
    auto e = parametric_evolute(psi);
    auto twice = [](const RatFun& f) {
        return ratfun(poly::mul_term(f.num, GaussianRational(2), Mono{}), f.den);
    };
    return {rf_sub(twice(psi.first), e.first), rf_sub(twice(psi.second), e.second)};
}

} // namespace hermdeg::evolute
