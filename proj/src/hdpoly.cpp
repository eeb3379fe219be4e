#include "hermdeg/hdpoly.hpp"

#include <random>
#include <sstream>

#include "hermdeg/parser.hpp"

namespace hermdeg::hdpoly {

using hermitian::CriticalSystem;
using ideal::Ideal;
using ideal::IdealQ;
using poly::Mono;

namespace {

std::vector<std::string> canonical_names(const char* prefix, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

// split a principal generator in (.., T) into T-coefficients living in the
// subring without T (T must be the last variable)
HDPoly split_by_T(const PolyQ& gen, const RingPtr& subring) {
    int n = gen.ring->nvars();
    int tvar = n - 1;
    uint32_t dT = poly::degree_in(gen, tvar);
    std::vector<PolyQ> coeffs(size_t(dT) + 1, poly::make_zero<GaussianRational>(subring));
    std::vector<int> drop(size_t(n), -1);
    for (int i = 0; i + 1 < n; ++i) drop[size_t(i)] = i;
    for (const auto& t : gen.t) {
        uint16_t k = t.m.e[size_t(tvar)];
        Mono m = t.m;
        m.deg -= k;
        m.e[size_t(tvar)] = 0;
        PolyQ piece{gen.ring, {{t.c, m}}};
        coeffs[size_t(k)] = poly::add(coeffs[size_t(k)], poly::map_vars(piece, subring, drop));
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    HDPoly P;
    P.uvring = subring;
    P.coeffs = std::move(coeffs);
    return P;
}

// scale so the integer content over all coefficients is 1, with a canonical
// leading sign
HDPoly normalize(HDPoly P) {
    coeff::Int den_lcm = 1, g = 0;
    bool any = false;
    for (const auto& c : P.coeffs)
        for (const auto& t : c.t) {
            any = true;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.re.get_den().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.im.get_den().get_mpz_t());
        }
    if (!any) return P;
    for (const auto& c : P.coeffs)
        for (const auto& t : c.t) {
            coeff::Int a = t.c.re.get_num() * (den_lcm / t.c.re.get_den());
            coeff::Int b = t.c.im.get_num() * (den_lcm / t.c.im.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
        }
    if (g == 0) g = 1;
    GaussianRational scale{coeff::Rational(den_lcm) / coeff::Rational(g)};
    for (auto& c : P.coeffs) c = poly::mul_term(c, scale, Mono{});
    GaussianRational lc = P.coeffs.back().is_zero() ? GaussianRational(1) : P.coeffs.back().lt().c;
    if (lc.re < 0 || (lc.re == 0 && lc.im < 0))
        for (auto& c : P.coeffs) c = poly::mul_term(c, GaussianRational(-1), Mono{});
    return P;
}

} // namespace

HDPoly vhd_polynomial(const VarietySpec& V, GBRun& run) {
    CriticalSystem S = hermitian::build_critical_system(V, false);
    int n = S.n;
    // extend with T as the last variable
    std::vector<std::string> names = S.ring->vars;
    names.push_back("T");
    RingPtr R = poly::make_ring(names);
    std::vector<int> inj(size_t(4 * n));
    for (int i = 0; i < 4 * n; ++i) inj[size_t(i)] = i;
    IdealQ I{R, {}};
    for (const auto& f : S.equations) I.gens.push_back(poly::map_vars(f, R, inj));
    PolyQ T = poly::make_varq(R, 4 * n);
    I.gens.push_back(poly::sub(T, poly::map_vars(hermitian::distance_pairing(S), R, inj)));
    std::vector<PolyQ> sing, sing_star;
    for (const auto& f : S.sing) sing.push_back(poly::map_vars(f, R, inj));
    for (const auto& f : S.sing_star) sing_star.push_back(poly::map_vars(f, R, inj));
    I = ideal::saturate_by_ideal(I, IdealQ{R, sing}, run);
    I = ideal::saturate_by_ideal(I, IdealQ{R, sing_star}, run);
    std::vector<int> zw;
    for (int i = 0; i < 2 * n; ++i) zw.push_back(i);
    IdealQ E = ideal::eliminate(I, zw, run); // lives in (u, v, T)
    if (E.gens.empty()) throw internal_error("vhd_polynomial: elimination returned the zero ideal");
    if (E.gens.size() > 1) {
        std::string msg = "EliminationNotPrincipal:";
        for (const auto& g : E.gens) msg += "\n  " + poly::to_string(g);
        throw internal_error(msg);
    }
    std::vector<std::string> uv = canonical_names("u", n);
    for (auto& s : canonical_names("v", n)) uv.push_back(s);
    RingPtr uvring = poly::make_ring(uv);
    return normalize(split_by_T(E.gens[0], uvring));
}

HDPoly vhd_polynomial_at(const VarietySpec& V, const std::vector<GaussianRational>& u,
                         const std::vector<GaussianRational>& v, GBRun& run) {
    CriticalSystem S = hermitian::build_critical_system(V, false);
    QueryPoint q;
    q.u = u;
    q.v = v;
    std::vector<PolyQ> sing, sing_star;
    PolyQ pairing_sym = hermitian::distance_pairing(S);
    Ideal<GaussianRational> zwI = hermitian::specialize_critical(S, q, &sing, &sing_star, nullptr);
    // move to a [z, w, T] ring
    int n = S.n;
    std::vector<std::string> names = zwI.ring->vars;
    names.push_back("T");
    RingPtr R = poly::make_ring(names);
    std::vector<int> inj(size_t(2 * n));
    for (int i = 0; i < 2 * n; ++i) inj[size_t(i)] = i;
    IdealQ I{R, {}};
    for (const auto& f : zwI.gens) I.gens.push_back(poly::map_vars(f, R, inj));
    // specialize the pairing too
    std::vector<std::optional<GaussianRational>> vals(size_t(4 * n));
    for (int i = 0; i < n; ++i) {
        vals[size_t(S.ui(i))] = u[size_t(i)];
        vals[size_t(S.vi(i))] = v[size_t(i)];
    }
    std::vector<int> proj(size_t(4 * n), -1);
    for (int i = 0; i < 2 * n; ++i) proj[size_t(i)] = i;
    PolyQ pairing = poly::map_vars(poly::substitute_values(pairing_sym, vals), R, proj);
    I.gens.push_back(poly::sub(poly::make_varq(R, 2 * n), pairing));
    std::vector<PolyQ> sing_R, sing_star_R;
    for (const auto& f : sing) sing_R.push_back(poly::map_vars(f, R, inj));
    for (const auto& f : sing_star) sing_star_R.push_back(poly::map_vars(f, R, inj));
    I = ideal::saturate_by_ideal(I, IdealQ{R, sing_R}, run);
    I = ideal::saturate_by_ideal(I, IdealQ{R, sing_star_R}, run);
    std::vector<int> zw;
    for (int i = 0; i < 2 * n; ++i) zw.push_back(i);
    IdealQ E = ideal::eliminate(I, zw, run); // univariate in T
    if (E.gens.size() != 1) {
        std::string msg = "EliminationNotPrincipal (specialized):";
        for (const auto& g : E.gens) msg += "\n  " + poly::to_string(g);
        throw internal_error(msg);
    }
    return normalize(split_by_T(E.gens[0], poly::make_ring({})));
}

HDPoly hd_polynomial_at(const VarietySpec& V, const std::vector<GaussianRational>& u, GBRun& run) {
    std::vector<GaussianRational> v;
    v.reserve(u.size());
    for (const auto& c : u) v.push_back(coeff::conj(c));
    return vhd_polynomial_at(V, u, v, run);
}

HDPoly real_locus(const HDPoly& P) {
    int n2 = P.uvring->nvars();
    int n = n2 / 2;
    RingPtr uring = poly::make_ring(canonical_names("u", n));
    auto fold = std::vector<int>(size_t(n2));
    for (int i = 0; i < n; ++i) {
        fold[size_t(i)] = i;
        fold[size_t(n + i)] = i;
    }
    HDPoly out;
    out.uvring = uring;
    for (const auto& c : P.coeffs) out.coeffs.push_back(poly::map_vars(c, uring, fold));
    while (out.coeffs.size() > 1 && out.coeffs.back().is_zero()) out.coeffs.pop_back();
    return normalize(std::move(out));
}

std::vector<GaussianRational> specialize(const HDPoly& P, const std::vector<GaussianRational>& u,
                                         const std::vector<GaussianRational>& v) {
    int n = int(u.size());
    std::vector<GaussianRational> point;
    for (const auto& c : u) point.push_back(c);
    for (const auto& c : v) point.push_back(c);
    if (P.uvring->nvars() != 2 * n) throw input_error("specialize: wrong point dimension");
    std::vector<GaussianRational> out;
    for (const auto& c : P.coeffs) out.push_back(poly::evaluate(c, point, GaussianRational(1)));
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

std::string to_string(const HDPoly& P) {
    std::ostringstream os;
    bool first = true;
    for (int k = P.degree_T(); k >= 0; --k) {
        const PolyQ& c = P.coeffs[size_t(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << "(" << poly::to_string(c) << ")";
        } else {
            os << "(" << poly::to_string(c) << ")*T";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

DualityReport check_duality(const VarietySpec& V, int samples, uint64_t seed, GBRun& run) {
    DualityReport rep;
    VarietySpec dual = hermitian::dual_variety(V, run);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 3);
    auto rand_q = [&]() {
        long num = long(rng() % 41) - 20;
        long den = long(rng() % 7) + 1;
        return GaussianRational(coeff::make_rational(num, den));
    };
    int n = V.n;
    for (int s = 0; s < samples; ++s) {
        std::vector<GaussianRational> u, v;
        for (int i = 0; i < n; ++i) u.push_back(rand_q());
        for (int i = 0; i < n; ++i) v.push_back(rand_q());
        HDPoly P1 = vhd_polynomial_at(V, u, v, run);
        HDPoly P2 = vhd_polynomial_at(dual, v, u, run);
        // substitute T -> <u,v>_R - T into P2
        GaussianRational uv(0);
        for (int i = 0; i < n; ++i) uv += u[size_t(i)] * v[size_t(i)];
        int d2 = P2.degree_T();
        std::vector<GaussianRational> q2(size_t(d2) + 1, GaussianRational(0));
        // expand sum_k c_k (uv - T)^k with binomials
        std::vector<std::vector<coeff::Int>> binom(size_t(d2) + 1, std::vector<coeff::Int>(size_t(d2) + 1, 0));
        for (int i = 0; i <= d2; ++i) {
            binom[size_t(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                binom[size_t(i)][size_t(j)] =
                    binom[size_t(i - 1)][size_t(j - 1)] + (j <= i - 1 ? binom[size_t(i - 1)][size_t(j)] : 0);
        }
        for (int k = 0; k <= d2; ++k) {
            GaussianRational ck = poly::evaluate(P2.coeffs[size_t(k)], {}, GaussianRational(1));
            if (P2.uvring->nvars() != 0) throw internal_error("check_duality: expected specialized coefficients");
            GaussianRational up(1);
            // (uv - T)^k = sum_j binom(k,j) uv^(k-j) (-T)^j
            for (int j = 0; j <= k; ++j) {
                GaussianRational term = ck * GaussianRational(coeff::Rational(binom[size_t(k)][size_t(j)]));
                GaussianRational uvpow(1);
                for (int e = 0; e < k - j; ++e) uvpow *= uv;
                term = term * uvpow;
                if (j % 2 == 1) term = -term;
                q2[size_t(j)] += term;
            }
            (void)up;
        }
        while (q2.size() > 1 && q2.back().is_zero()) q2.pop_back();
        // compare with P1 up to scalar
        std::vector<GaussianRational> q1;
        for (const auto& c : P1.coeffs) q1.push_back(poly::evaluate(c, {}, GaussianRational(1)));
        bool match = q1.size() == q2.size();
        if (match && !q1.empty() && !q2.back().is_zero()) {
            GaussianRational scale = q1.back() / q2.back();
            for (size_t k2 = 0; k2 < q1.size() && match; ++k2) match = (q1[k2] == q2[k2] * scale);
        }
        rep.samples += 1;
        rep.matched += match ? 1 : 0;
    }
    return rep;
}

PolyQ discriminant_T(const HDPoly& P, GBRun& run) {
    int d = P.degree_T();
    if (d < 1) throw input_error("discriminant_T: degree in T must be >= 1");
    if (d == 1) return poly::make_const(P.uvring, GaussianRational(1));
    // Sylvester matrix of P and dP/dT over the coefficient ring
    std::vector<PolyQ> p = P.coeffs; // ascending
    std::vector<PolyQ> dp;
    for (int k = 1; k <= d; ++k)
        dp.push_back(poly::mul_term(p[size_t(k)], GaussianRational(long(k)), Mono{}));
    int size = 2 * d - 1;
    if (size > 9) throw budget_error("discriminant_T: symbolic resultant limited to degree 5 in T");
    auto S = poly::PolyMatrix<GaussianRational>(size_t(size),
                                         std::vector<PolyQ>(size_t(size), poly::make_zero<GaussianRational>(P.uvring)));
    // d-1 rows of P (degree d), d rows of P' (degree d-1); columns are T^(2d-2) .. T^0
    for (int r = 0; r < d - 1; ++r)
        for (int k = 0; k <= d; ++k) S[size_t(r)][size_t(r + (d - k))] = p[size_t(k)];
    for (int r = 0; r < d; ++r)
        for (int k = 0; k <= d - 1; ++k) S[size_t(d - 1 + r)][size_t(r + (d - 1 - k))] = dp[size_t(k)];
    PolyQ res = poly::det(S);
    run.tick(uint64_t(size) * size);
    // disc = (-1)^(d(d-1)/2) Res / lc
    if ((d * (d - 1) / 2) % 2 == 1) res = poly::neg(res);
    auto q = poly::div_exact(res, p[size_t(d)]);
    if (!q) throw internal_error("discriminant_T: leading coefficient does not divide the resultant");
    return *q;
}

GaussianRational discriminant_T_value(const std::vector<GaussianRational>& coeffs) {
    int d = int(coeffs.size()) - 1;
    while (d >= 0 && coeffs[size_t(d)].is_zero()) --d;
    if (d < 1) throw input_error("discriminant_T_value: degree must be >= 1");
    if (d == 1) return GaussianRational(1);
    // Sylvester determinant over the field
    std::vector<GaussianRational> p(coeffs.begin(), coeffs.begin() + d + 1), dp;
    for (int k = 1; k <= d; ++k) dp.push_back(p[size_t(k)] * GaussianRational(long(k)));
    int size = 2 * d - 1;
    auto S = std::vector<std::vector<GaussianRational>>(size_t(size), std::vector<GaussianRational>(size_t(size)));
    for (int r = 0; r < d - 1; ++r)
        for (int k = 0; k <= d; ++k) S[size_t(r)][size_t(r + (d - k))] = p[size_t(k)];
    for (int r = 0; r < d; ++r)
        for (int k = 0; k <= d - 1; ++k) S[size_t(d - 1 + r)][size_t(r + (d - 1 - k))] = dp[size_t(k)];
    // Gaussian elimination determinant
    GaussianRational detv(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (!S[size_t(r)][size_t(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return GaussianRational(0);
        if (piv != col) {
            std::swap(S[size_t(piv)], S[size_t(col)]);
            detv = -detv;
        }
        detv *= S[size_t(col)][size_t(col)];
        GaussianRational inv_p = coeff::inv(S[size_t(col)][size_t(col)]);
        for (int r = col + 1; r < size; ++r) {
            GaussianRational f = S[size_t(r)][size_t(col)] * inv_p;
            if (f.is_zero()) continue;
            for (int c2 = col; c2 < size; ++c2) S[size_t(r)][size_t(c2)] -= f * S[size_t(col)][size_t(c2)];
        }
    }
    if ((d * (d - 1) / 2) % 2 == 1) detv = -detv;
    return detv / p[size_t(d)];
}

} // namespace hermdeg::hdpoly
