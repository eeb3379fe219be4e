#ifndef HERMDEG_POLY_HPP
#define HERMDEG_POLY_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "hermdeg/ring.hpp"

namespace hermdeg::poly {

using coeff::Fp;
using coeff::GaussianRational;
using coeff::Rational;

template <class F>
struct Term {
    F c;
    Mono m;
};

// Sparse multivariate polynomial: term list strictly descending under the
// ring's active order, no zero coefficients, no duplicate monomials.
template <class F>
struct Poly {
    RingPtr ring;
    std::vector<Term<F>> t;

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].m.is_one()); }
    const Term<F>& lt() const { return t.front(); }
    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& x : t) d = std::max(d, x.m.deg);
        return d;
    }
};

using PolyQ = Poly<GaussianRational>;
using PolyP = Poly<Fp>;

template <class F>
Poly<F> make_zero(const RingPtr& ring) {
    return Poly<F>{ring, {}};
}

template <class F>
Poly<F> make_const(const RingPtr& ring, const F& c) {
    Poly<F> f{ring, {}};
    if (!c.is_zero()) f.t.push_back({c, Mono{}});
    return f;
}

template <class F>
Poly<F> make_var(const RingPtr& ring, int i, const F& one) {
    Mono m;
    m.bump(i);
    return Poly<F>{ring, {{one, m}}};
}

inline PolyQ make_varq(const RingPtr& ring, int i) { return make_var<GaussianRational>(ring, i, GaussianRational(1)); }

// Sort an arbitrary term soup into canonical form.
template <class F>
void canonicalize(Poly<F>& f) {
    const auto& o = f.ring->order;
    int n = f.ring->nvars();
    std::sort(f.t.begin(), f.t.end(),
              [&](const Term<F>& a, const Term<F>& b) { return mono_cmp(a.m, b.m, o, n) > 0; });
    std::vector<Term<F>> out;
    out.reserve(f.t.size());
    for (auto& x : f.t) {
        if (!out.empty() && out.back().m == x.m) {
            out.back().c += x.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!x.c.is_zero()) {
            out.push_back(std::move(x));
        }
    }
    f.t = std::move(out);
}

template <class F>
Poly<F> neg(const Poly<F>& f) {
    Poly<F> r = f;
    for (auto& x : r.t) x.c = -x.c;
    return r;
}

template <class F>
Poly<F> add(const Poly<F>& f, const Poly<F>& g) {
    const auto& o = f.ring->order;
    int n = f.ring->nvars();
    Poly<F> r{f.ring, {}};
    r.t.reserve(f.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < f.t.size() && j < g.t.size()) {
        int c = mono_cmp(f.t[i].m, g.t[j].m, o, n);
        if (c > 0) r.t.push_back(f.t[i++]);
        else if (c < 0) r.t.push_back(g.t[j++]);
        else {
            F s = f.t[i].c + g.t[j].c;
            if (!s.is_zero()) r.t.push_back({s, f.t[i].m});
            ++i, ++j;
        }
    }
    for (; i < f.t.size(); ++i) r.t.push_back(f.t[i]);
    for (; j < g.t.size(); ++j) r.t.push_back(g.t[j]);
    return r;
}

template <class F>
Poly<F> sub(const Poly<F>& f, const Poly<F>& g) {
    return add(f, neg(g));
}

// f - c*m*g, the elementary reduction step.
template <class F>
Poly<F> sub_mul(const Poly<F>& f, const F& c, const Mono& m, const Poly<F>& g) {
    const auto& o = f.ring->order;
    int n = f.ring->nvars();
    Poly<F> r{f.ring, {}};
    r.t.reserve(f.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < f.t.size() && j < g.t.size()) {
        Mono gm = mono_mul(g.t[j].m, m, n);
        int cc = mono_cmp(f.t[i].m, gm, o, n);
        if (cc > 0) r.t.push_back(f.t[i++]);
        else if (cc < 0) {
            F s = -(c * g.t[j].c);
            if (!s.is_zero()) r.t.push_back({s, gm});
            ++j;
        } else {
            F s = f.t[i].c - c * g.t[j].c;
            if (!s.is_zero()) r.t.push_back({s, f.t[i].m});
            ++i, ++j;
        }
    }
    for (; i < f.t.size(); ++i) r.t.push_back(f.t[i]);
    for (; j < g.t.size(); ++j) {
        F s = -(c * g.t[j].c);
        if (!s.is_zero()) r.t.push_back({s, mono_mul(g.t[j].m, m, n)});
    }
    return r;
}

template <class F>
Poly<F> mul_term(const Poly<F>& f, const F& c, const Mono& m) {
    Poly<F> r{f.ring, {}};
    if (c.is_zero()) return r;
    r.t.reserve(f.t.size());
    int n = f.ring->nvars();
    for (const auto& x : f.t) {
        F s = x.c * c;
        if (!s.is_zero()) r.t.push_back({s, mono_mul(x.m, m, n)});
    }
    return r;
}

template <class F>
Poly<F> mul(const Poly<F>& f, const Poly<F>& g) {
    int n = f.ring->nvars();
    const auto& o = f.ring->order;
    auto cmp = [&](const Mono& a, const Mono& b) { return mono_cmp(a, b, o, n) > 0; };
    std::map<Mono, F, decltype(cmp)> acc(cmp);
    for (const auto& a : f.t)
        for (const auto& b : g.t) {
            Mono m = mono_mul(a.m, b.m, n);
            auto [it, fresh] = acc.try_emplace(m, a.c * b.c);
            if (!fresh) it->second += a.c * b.c;
        }
    Poly<F> r{f.ring, {}};
    r.t.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.t.push_back({c, m});
    return r;
}

template <class F>
F ring_one(const RingPtr& ring) {
    if constexpr (std::is_same_v<F, Fp>) return Fp{1, ring->p};
    else return F(1);
}

template <class F>
Poly<F> pow(const Poly<F>& f, uint32_t e) {
    Poly<F> r = make_const<F>(f.ring, ring_one<F>(f.ring));
    Poly<F> base = f;
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

template <class F>
bool equal(const Poly<F>& f, const Poly<F>& g) {
    if (f.t.size() != g.t.size()) return false;
    for (size_t i = 0; i < f.t.size(); ++i)
        if (f.t[i].m != g.t[i].m || f.t[i].c != g.t[i].c) return false;
    return true;
}

template <class F>
Poly<F> derivative(const Poly<F>& f, int var) {
    Poly<F> r{f.ring, {}};
    for (const auto& x : f.t) {
        uint16_t e = x.m.e[size_t(var)];
        if (!e) continue;
        F c = x.c;
        if constexpr (std::is_same_v<F, Fp>) c = c * Fp{e, c.p};
        else c = c * F(long(e));
        if (c.is_zero()) continue;
        Mono m = x.m;
        m.e[size_t(var)] = uint16_t(e - 1);
        m.deg -= 1;
        r.t.push_back({c, m});
    }
    // term order is preserved by d/dx under lex but not in general
    canonicalize(r);
    return r;
}

// The * involution: swaps conjugate-paired variables, conjugates coefficients.
inline PolyQ star(const PolyQ& f) {
    const auto& pair = f.ring->conj_pair;
    PolyQ r{f.ring, {}};
    r.t.reserve(f.t.size());
    for (const auto& x : f.t) {
        Mono m;
        m.deg = x.m.deg;
        for (int i = 0; i < f.ring->nvars(); ++i) {
            if (!x.m.e[size_t(i)]) continue;
            if (pair[size_t(i)] < 0)
                throw input_error("UnpairedVariable: '" + f.ring->vars[size_t(i)] + "' has no conjugate partner");
            m.e[size_t(pair[size_t(i)])] = x.m.e[size_t(i)];
        }
        r.t.push_back({coeff::conj(x.c), m});
    }
    canonicalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Ring morphisms and substitution
// ---------------------------------------------------------------------------

// var_map[i] = index in the target ring, or -1 (requires exponent 0).  The
// map may be non-injective (variable identification adds exponents).
template <class F>
Poly<F> map_vars(const Poly<F>& f, const RingPtr& target, const std::vector<int>& var_map) {
    Poly<F> r{target, {}};
    r.t.reserve(f.t.size());
    for (const auto& x : f.t) {
        Mono m;
        for (int i = 0; i < f.ring->nvars(); ++i) {
            uint16_t e = x.m.e[size_t(i)];
            if (!e) continue;
            if (var_map[size_t(i)] < 0)
                throw internal_error("map_vars: variable '" + f.ring->vars[size_t(i)] + "' has no image");
            m.bump(var_map[size_t(i)], e);
        }
        r.t.push_back({x.c, m});
    }
    canonicalize(r);
    return r;
}

// Substitute field values for a subset of variables (index -> value); the
// result lives in the same ring with those variables absent.
template <class F>
Poly<F> substitute_values(const Poly<F>& f, const std::vector<std::optional<F>>& values) {
    Poly<F> r{f.ring, {}};
    for (const auto& x : f.t) {
        F c = x.c;
        Mono m = x.m;
        for (int i = 0; i < f.ring->nvars(); ++i) {
            uint16_t e = x.m.e[size_t(i)];
            if (!e || !values[size_t(i)]) continue;
            F v = *values[size_t(i)];
            for (uint16_t k = 0; k < e; ++k) c = c * v;
            m.deg -= e;
            m.e[size_t(i)] = 0;
        }
        if (!c.is_zero()) r.t.push_back({c, m});
    }
    canonicalize(r);
    return r;
}

// General substitution: each variable maps to a polynomial in the target ring.
template <class F>
Poly<F> substitute(const Poly<F>& f, const RingPtr& target, const std::vector<Poly<F>>& images) {
    Poly<F> r = make_zero<F>(target);
    for (const auto& x : f.t) {
        Poly<F> term = make_const<F>(target, x.c);
        for (int i = 0; i < f.ring->nvars(); ++i) {
            uint16_t e = x.m.e[size_t(i)];
            if (!e) continue;
            term = mul(term, pow(images[size_t(i)], e));
        }
        r = add(r, term);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

template <class F>
F evaluate(const Poly<F>& f, const std::vector<F>& point, const F& one) {
    F acc = coeff::f_zero(one);
    for (const auto& x : f.t) {
        F term = x.c;
        for (int i = 0; i < f.ring->nvars(); ++i)
            for (uint16_t k = 0; k < x.m.e[size_t(i)]; ++k) term = term * point[size_t(i)];
        acc = acc + term;
    }
    return acc;
}

struct EvalResult {
    std::complex<double> value;
    double error_bound; // first-order rounding bound
};

// Floating evaluation with a running error bound: |computed - exact| <=
// error_bound, from the standard per-operation model with unit roundoff.
template <class F>
EvalResult evaluate_fp(const Poly<F>& f, const std::vector<std::complex<double>>& point) {
    static_assert(std::is_same_v<F, GaussianRational>);
    constexpr double u = 1.1e-16;
    std::complex<double> acc = 0.0;
    double mag = 0.0;
    for (const auto& x : f.t) {
        std::complex<double> term = x.c.to_complex();
        int ops = 0;
        for (int i = 0; i < f.ring->nvars(); ++i)
            for (uint16_t k = 0; k < x.m.e[size_t(i)]; ++k) {
                term *= point[size_t(i)];
                ++ops;
            }
        acc += term;
        mag += std::abs(term) * double(ops + 2);
    }
    return {acc, (mag + std::abs(acc)) * u * 4.0};
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

inline PolyQ monic(const PolyQ& f) {
    if (f.is_zero()) return f;
    return mul_term(f, coeff::inv(f.lt().c), Mono{});
}
inline PolyP monic(const PolyP& f) {
    if (f.is_zero()) return f;
    return mul_term(f, coeff::inv(f.lt().c), Mono{});
}

// Scale to Gaussian-integer coefficients with integer content 1 and a
// canonical leading unit (leading coefficient has re > 0, or re == 0 and
// im > 0).  Keeps Buchberger intermediates small and makes golden-test
// comparisons deterministic "up to scalar".
inline PolyQ primitive_part(const PolyQ& f) {
    if (f.is_zero()) return f;
    mpz_class den_lcm = 1;
    for (const auto& x : f.t) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.c.re.get_den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.c.im.get_den().get_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& x : f.t) {
        mpz_class a = x.c.re.get_num() * (den_lcm / x.c.re.get_den());
        mpz_class b = x.c.im.get_num() * (den_lcm / x.c.im.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
    }
    if (g == 0) g = 1;
    GaussianRational scale(Rational(den_lcm) / Rational(g));
    PolyQ r = mul_term(f, scale, Mono{});
    const GaussianRational& lc = r.lt().c;
    GaussianRational unit(1);
    if (lc.re < 0 || (lc.re == 0 && lc.im < 0)) unit = GaussianRational(-1);
    if (!(unit.is_one())) r = mul_term(r, unit, Mono{});
    return r;
}

// ---------------------------------------------------------------------------
// Calculus helpers
// ---------------------------------------------------------------------------

template <class F>
using PolyMatrix = std::vector<std::vector<Poly<F>>>;

template <class F>
PolyMatrix<F> jacobian(const std::vector<Poly<F>>& fs, const std::vector<int>& vars) {
    PolyMatrix<F> J;
    J.reserve(fs.size());
    for (const auto& f : fs) {
        std::vector<Poly<F>> row;
        row.reserve(vars.size());
        for (int v : vars) row.push_back(derivative(f, v));
        J.push_back(std::move(row));
    }
    return J;
}

template <class F>
Poly<F> det(const PolyMatrix<F>& M) {
    size_t n = M.size();
    if (n == 1) return M[0][0];
    // cofactor expansion along the first row; fine at the sizes we meet
    Poly<F> acc = make_zero<F>(M[0][0].ring);
    for (size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        PolyMatrix<F> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly<F>> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(M[i][k]);
            minor.push_back(std::move(row));
        }
        Poly<F> term = mul(M[0][j], det(minor));
        acc = (j % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

// All k x k minors in row-major lexicographic order of (row set, column set).
template <class F>
std::vector<Poly<F>> minors(const PolyMatrix<F>& M, int k) {
    int rows = int(M.size());
    int cols = rows ? int(M[0].size()) : 0;
    if (k < 1 || k > rows || k > cols) throw input_error("minors: k out of range");
    std::vector<Poly<F>> out;
    auto ri = std::vector<int>(size_t(k));
    auto ci = std::vector<int>(size_t(k));
    for (int i = 0; i < k; ++i) ri[size_t(i)] = i;
    auto next_comb = [](std::vector<int>& idx, int n) {
        int k2 = int(idx.size());
        for (int i = k2 - 1; i >= 0; --i) {
            if (idx[size_t(i)] < n - (k2 - i)) {
                ++idx[size_t(i)];
                for (int j = i + 1; j < k2; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        for (int i = 0; i < k; ++i) ci[size_t(i)] = i;
        do {
            PolyMatrix<F> block;
            block.reserve(size_t(k));
            for (int i = 0; i < k; ++i) {
                std::vector<Poly<F>> row;
                row.reserve(size_t(k));
                for (int j = 0; j < k; ++j) row.push_back(M[size_t(ri[size_t(i)])][size_t(ci[size_t(j)])]);
                block.push_back(std::move(row));
            }
            out.push_back(det(block));
        } while (next_comb(ci, cols));
    } while (next_comb(ri, rows));
    return out;
}

// Exact quotient a / b, or nullopt when b does not divide a.
template <class F>
std::optional<Poly<F>> div_exact(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) return std::nullopt;
    int n = a.ring->nvars();
    Poly<F> r = a;
    Poly<F> q{a.ring, {}};
    while (!r.is_zero()) {
        if (!mono_divides(b.lt().m, r.lt().m, n)) return std::nullopt;
        F c = r.lt().c / b.lt().c;
        Mono m = mono_div(r.lt().m, b.lt().m, n);
        q.t.push_back({c, m});
        r = sub_mul(r, c, m, b);
    }
    canonicalize(q);
    return q;
}

// ---------------------------------------------------------------------------
// Reduction to prime fields
// ---------------------------------------------------------------------------

inline PolyP reduce_mod(const PolyQ& f, uint32_t p, const RingPtr& target) {
    PolyP r{target, {}};
    r.t.reserve(f.t.size());
    for (const auto& x : f.t) {
        Fp c = coeff::reduce_mod(x.c, p);
        if (!c.is_zero()) r.t.push_back({c, x.m});
    }
    canonicalize(r);
    return r;
}

inline RingPtr mod_ring(const RingPtr& ring, uint32_t p) {
    auto r = std::make_shared<Ring>(*ring);
    r->field = FieldTag::PrimeField;
    r->p = p;
    return r;
}

template <class F>
uint32_t degree_in(const Poly<F>& f, int var) {
    uint32_t d = 0;
    for (const auto& x : f.t) d = std::max<uint32_t>(d, x.m.e[size_t(var)]);
    return d;
}

} // namespace hermdeg::poly

#endif
