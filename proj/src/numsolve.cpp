#include "hermdeg/numsolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace hermdeg::numsolve {

using coeff::GaussianRational;
using coeff::Rational;
using poly::Mono;

// ---------------------------------------------------------------------------
// Double-double arithmetic (Dekker/Knuth error-free transforms)
// ---------------------------------------------------------------------------

namespace {

struct dd {
    double hi = 0, lo = 0;
    dd() = default;
    dd(double h) : hi(h) {}
    dd(double h, double l) : hi(h), lo(l) {}
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(const dd& a, const dd& b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_neg(const dd& a) { return {-a.hi, -a.lo}; }
inline dd dd_sub(const dd& a, const dd& b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(const dd& a, const dd& b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(const dd& a, const dd& b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(dd(q1), b));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(dd(q2), b));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, dd(q3));
}

struct cdd {
    dd re, im;
    cdd() = default;
    cdd(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}
    cdd(dd r, dd i) : re(r), im(i) {}
    std::complex<double> to_complex() const { return {re.hi + re.lo, im.hi + im.lo}; }
};

inline cdd cdd_add(const cdd& a, const cdd& b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }
inline cdd cdd_sub(const cdd& a, const cdd& b) { return {dd_sub(a.re, b.re), dd_sub(a.im, b.im)}; }
inline cdd cdd_mul(const cdd& a, const cdd& b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}
inline cdd cdd_div(const cdd& a, const cdd& b) {
    dd n = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    cdd conj_b{b.re, dd_neg(b.im)};
    cdd num = cdd_mul(a, conj_b);
    return {dd_div(num.re, n), dd_div(num.im, n)};
}
inline double cdd_abs(const cdd& a) { return std::abs(a.to_complex()); }

cdd eval_poly_cdd(const PolyQ& f, const std::vector<cdd>& x) {
    cdd acc;
    int n = f.ring->nvars();
    for (const auto& t : f.t) {
        cdd term(t.c.to_complex());
        for (int i = 0; i < n; ++i)
            for (uint16_t k = 0; k < t.m.e[size_t(i)]; ++k) term = cdd_mul(term, x[size_t(i)]);
        acc = cdd_add(acc, term);
    }
    return acc;
}

// Relative backward-error style residual: |f(x)| / (1 + sum |c_a||x^a|).
double relative_residual(const PolyQ& f, const std::vector<std::complex<double>>& x) {
    std::complex<double> acc = 0;
    double mag = 0;
    int n = f.ring->nvars();
    for (const auto& t : f.t) {
        std::complex<double> term = t.c.to_complex();
        for (int i = 0; i < n; ++i)
            for (uint16_t k = 0; k < t.m.e[size_t(i)]; ++k) term *= x[size_t(i)];
        acc += term;
        mag += std::abs(term);
    }
    return std::abs(acc) / (1.0 + mag);
}

double system_residual(const std::vector<PolyQ>& system, const std::vector<std::complex<double>>& x) {
    double r = 0;
    for (const auto& f : system) r = std::max(r, relative_residual(f, x));
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Aberth-Ehrlich
// ---------------------------------------------------------------------------

std::vector<std::pair<std::complex<double>, int>> roots_univariate(
    const std::vector<std::complex<double>>& coeffs_in, double tol, int max_iters) {
    using C = std::complex<double>;
    std::vector<C> c = coeffs_in;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.empty()) throw input_error("roots_univariate: zero polynomial");
    if (c.size() == 1) return {};
    int zero_mult = 0;
    while (std::abs(c.front()) == 0.0) {
        c.erase(c.begin());
        ++zero_mult;
    }
    int n = int(c.size()) - 1;
    std::vector<std::pair<C, int>> out;
    if (zero_mult) out.push_back({C(0, 0), zero_mult});
    if (n == 0) return out;

    // Cauchy-style initial radius, points fanned on a circle
    double r = 0;
    for (int k = 0; k < n; ++k) r = std::max(r, std::pow(std::abs(c[size_t(k)] / c[size_t(n)]), 1.0 / (n - k)));
    r = 1.0 + 2.0 * r;
    auto x = std::vector<C>(size_t(n));
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * M_PI * (i + 0.5) / n + 0.7;
        x[size_t(i)] = std::polar(r * (0.5 + 0.5 * (i % 3) / 2.0), th);
    }

    auto eval = [&](const C& z, C& p, C& dp) {
        p = c[size_t(n)];
        dp = 0;
        for (int k = n - 1; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + c[size_t(k)];
        }
    };
    auto scale_at = [&](const C& z) {
        double az = std::abs(z), s = 0, zp = 1;
        for (int k = 0; k <= n; ++k) {
            s += std::abs(c[size_t(k)]) * zp;
            zp *= az;
        }
        return s;
    };

    std::vector<char> done(size_t(n), 0);
    for (int it = 0; it < max_iters; ++it) {
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (done[size_t(i)]) continue;
            C p, dp;
            eval(x[size_t(i)], p, dp);
            if (std::abs(p) <= 1e-14 * scale_at(x[size_t(i)])) {
                done[size_t(i)] = 1;
                continue;
            }
            C newton = (dp == C(0)) ? C(1e-12, 1e-12) : p / dp;
            C rep = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    C d = x[size_t(i)] - x[size_t(j)];
                    if (std::abs(d) < 1e-300) d = C(1e-200, 0);
                    rep += 1.0 / d;
                }
            C corr = newton / (1.0 - newton * rep);
            x[size_t(i)] -= corr;
            if (std::abs(corr) <= 1e-15 * (1.0 + std::abs(x[size_t(i)]))) done[size_t(i)] = 1;
            else all_done = false;
        }
        if (all_done) break;
        if (it == max_iters - 1) {
            for (int i = 0; i < n; ++i) {
                C p, dp;
                eval(x[size_t(i)], p, dp);
                if (std::abs(p) > std::sqrt(tol) * scale_at(x[size_t(i)]))
                    throw internal_error("NoConvergence: Aberth iteration did not converge");
            }
        }
    }

    // cluster into multiplicities
    std::vector<char> used(size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        if (used[size_t(i)]) continue;
        C sum = x[size_t(i)];
        int m = 1;
        used[size_t(i)] = 1;
        double rad = 1e-4 * (1.0 + std::abs(x[size_t(i)]));
        for (int j = i + 1; j < n; ++j) {
            if (used[size_t(j)]) continue;
            if (std::abs(x[size_t(j)] - x[size_t(i)]) <= rad) {
                used[size_t(j)] = 1;
                sum += x[size_t(j)];
                ++m;
            }
        }
        C center = sum / double(m);
        if (m == 1) { // polish simple roots with a few Newton steps
            for (int it = 0; it < 3; ++it) {
                C p, dp;
                eval(center, p, dp);
                if (dp == C(0)) break;
                center -= p / dp;
            }
        }
        out.push_back({center, m});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Newton refinement / certification
// ---------------------------------------------------------------------------

namespace {

// Pick an nvars-row square subsystem with a well-conditioned Jacobian at x.
std::vector<int> select_square_rows(const std::vector<PolyQ>& system,
                                    const std::vector<std::vector<PolyQ>>& jac,
                                    const std::vector<std::complex<double>>& x) {
    int nv = int(x.size());
    int ne = int(system.size());
    Eigen::MatrixXcd Jt(nv, ne); // columns = equations
    for (int e = 0; e < ne; ++e)
        for (int v = 0; v < nv; ++v) {
            std::complex<double> val = 0;
            const PolyQ& d = jac[size_t(e)][size_t(v)];
            int n = d.ring->nvars();
            for (const auto& t : d.t) {
                std::complex<double> term = t.c.to_complex();
                for (int i = 0; i < n; ++i)
                    for (uint16_t k = 0; k < t.m.e[size_t(i)]; ++k) term *= x[size_t(i)];
                val += term;
            }
            Jt(v, e) = val;
        }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(Jt);
    std::vector<int> rows;
    auto perm = qr.colsPermutation().indices();
    for (int k = 0; k < nv && k < ne; ++k) rows.push_back(int(perm(k)));
    return rows;
}

} // namespace

Root certify(const std::vector<PolyQ>& system, Root p, const SolveOptions& opts) {
    if (system.empty()) return p;
    int nv = int(p.x.size());
    std::vector<std::vector<PolyQ>> jac;
    auto all = std::vector<int>(size_t(nv));
    for (int i = 0; i < nv; ++i) all[size_t(i)] = i;
    for (const auto& f : system) {
        std::vector<PolyQ> row;
        for (int v : all) row.push_back(poly::derivative(f, v));
        jac.push_back(std::move(row));
    }
    std::vector<int> rows = select_square_rows(system, jac, p.x);
    if (int(rows.size()) < nv) {
        p.residual = system_residual(system, p.x);
        p.singular_jacobian = true;
        return p;
    }

    auto x = std::vector<cdd>(size_t(nv));
    for (int i = 0; i < nv; ++i) x[size_t(i)] = cdd(p.x[size_t(i)]);

    for (int it = 0; it < opts.max_newton; ++it) {
        // residual vector and Jacobian of the square subsystem in dd
        auto F = std::vector<cdd>(size_t(nv));
        auto J = std::vector<std::vector<cdd>>(size_t(nv), std::vector<cdd>(size_t(nv)));
        for (int r = 0; r < nv; ++r) {
            F[size_t(r)] = eval_poly_cdd(system[size_t(rows[size_t(r)])], x);
            for (int v = 0; v < nv; ++v) J[size_t(r)][size_t(v)] = eval_poly_cdd(jac[size_t(rows[size_t(r)])][size_t(v)], x);
        }
        // Gaussian elimination with partial pivoting in complex dd
        auto piv = std::vector<int>(size_t(nv));
        for (int i = 0; i < nv; ++i) piv[size_t(i)] = i;
        bool singular = false;
        for (int col = 0; col < nv; ++col) {
            int best = col;
            double mag = cdd_abs(J[size_t(col)][size_t(col)]);
            for (int r = col + 1; r < nv; ++r) {
                double m2 = cdd_abs(J[size_t(r)][size_t(col)]);
                if (m2 > mag) {
                    mag = m2;
                    best = r;
                }
            }
            if (mag < 1e-14) {
                singular = true;
                break;
            }
            std::swap(J[size_t(col)], J[size_t(best)]);
            std::swap(F[size_t(col)], F[size_t(best)]);
            for (int r = col + 1; r < nv; ++r) {
                cdd factor = cdd_div(J[size_t(r)][size_t(col)], J[size_t(col)][size_t(col)]);
                for (int cc = col; cc < nv; ++cc)
                    J[size_t(r)][size_t(cc)] = cdd_sub(J[size_t(r)][size_t(cc)], cdd_mul(factor, J[size_t(col)][size_t(cc)]));
                F[size_t(r)] = cdd_sub(F[size_t(r)], cdd_mul(factor, F[size_t(col)]));
            }
        }
        if (singular) {
            auto xc = std::vector<std::complex<double>>(size_t(nv));
            for (int i = 0; i < nv; ++i) xc[size_t(i)] = x[size_t(i)].to_complex();
            p.x = xc;
            p.residual = system_residual(system, xc);
            p.singular_jacobian = true;
            return p;
        }
        auto delta = std::vector<cdd>(size_t(nv));
        for (int r = nv - 1; r >= 0; --r) {
            cdd acc = F[size_t(r)];
            for (int cc = r + 1; cc < nv; ++cc) acc = cdd_sub(acc, cdd_mul(J[size_t(r)][size_t(cc)], delta[size_t(cc)]));
            delta[size_t(r)] = cdd_div(acc, J[size_t(r)][size_t(r)]);
        }
        double step = 0;
        for (int i = 0; i < nv; ++i) {
            x[size_t(i)] = cdd_sub(x[size_t(i)], delta[size_t(i)]);
            step = std::max(step, cdd_abs(delta[size_t(i)]) / (1.0 + cdd_abs(x[size_t(i)])));
        }
        auto xc = std::vector<std::complex<double>>(size_t(nv));
        for (int i = 0; i < nv; ++i) xc[size_t(i)] = x[size_t(i)].to_complex();
        double res = system_residual(system, xc);
        if (res < opts.tol || step < 1e-28) {
            p.x = xc;
            p.residual = res;
            p.refined = true;
            return p;
        }
    }
    auto xc = std::vector<std::complex<double>>(size_t(nv));
    for (int i = 0; i < nv; ++i) xc[size_t(i)] = x[size_t(i)].to_complex();
    double res = system_residual(system, xc);
    if (res < system_residual(system, p.x)) p.x = xc;
    p.residual = system_residual(system, p.x);
    p.refined = p.residual < opts.tol;
    return p;
}

// ---------------------------------------------------------------------------
// Quotient-algebra eigenvalue solver
// ---------------------------------------------------------------------------

namespace {

// exact characteristic polynomial by Faddeev-LeVerrier; coefficients ascending
std::vector<GaussianRational> char_poly_exact(const std::vector<std::vector<GaussianRational>>& M) {
    int d = int(M.size());
    std::vector<GaussianRational> cs(size_t(d) + 1);
    cs[size_t(d)] = GaussianRational(1);
    auto A = M;
    GaussianRational c;
    for (int k = 1; k <= d; ++k) {
        if (k > 1) {
            // A <- M (A + c I)
            auto B = A;
            for (int i = 0; i < d; ++i) B[size_t(i)][size_t(i)] += c;
            auto C = std::vector<std::vector<GaussianRational>>(size_t(d), std::vector<GaussianRational>(size_t(d)));
            for (int i = 0; i < d; ++i)
                for (int l = 0; l < d; ++l) {
                    if (M[size_t(i)][size_t(l)].is_zero()) continue;
                    for (int j = 0; j < d; ++j) {
                        if (B[size_t(l)][size_t(j)].is_zero()) continue;
                        C[size_t(i)][size_t(j)] += M[size_t(i)][size_t(l)] * B[size_t(l)][size_t(j)];
                    }
                }
            A = std::move(C);
        }
        GaussianRational tr(0);
        for (int i = 0; i < d; ++i) tr += A[size_t(i)][size_t(i)];
        c = -(tr / GaussianRational(long(k)));
        cs[size_t(d - k)] = c;
    }
    return cs;
}

std::vector<std::complex<double>> normalize_to_double(const std::vector<GaussianRational>& cs) {
    // divide by the largest |coefficient|~ (max of |re|,|im|) exactly, then convert
    Rational mx(0);
    for (const auto& c : cs) {
        Rational a = abs(c.re), b = abs(c.im);
        if (a > mx) mx = a;
        if (b > mx) mx = b;
    }
    if (mx == 0) mx = 1;
    std::vector<std::complex<double>> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back({Rational(c.re / mx).get_d(), Rational(c.im / mx).get_d()});
    return out;
}

} // namespace

SolveReport solve_zero_dim(const IdealQ& I, const std::vector<PolyQ>& refine_system, const SolveOptions& opts,
                           GBRun& run) {
    using C = std::complex<double>;
    SolveReport rep;
    ideal::GroebnerBasis<GaussianRational> G = ideal::groebner(I, run);
    if (G.is_unit()) {
        rep.method = "eigenvalue";
        return rep;
    }
    int64_t D = ideal::degree_zero_dim(G); // throws NotZeroDimensional when dim > 0
    rep.total_with_multiplicity = D;
    std::vector<Mono> basis = ideal::standard_monomials(G);
    int n = I.ring->nvars();
    int d = int(D);

    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + 17);
    auto build = [&](int attempt) {
        // separating linear form with small random real integer coefficients
        auto cl = std::vector<long>(size_t(n));
        for (int i = 0; i < n; ++i) cl[size_t(i)] = long(rng() % 199) - 99 + (attempt + 1);
        PolyQ ell = poly::make_zero<GaussianRational>(I.ring);
        for (int i = 0; i < n; ++i)
            ell = poly::add(ell, poly::mul_term(poly::make_varq(I.ring, i), GaussianRational(cl[size_t(i)]), Mono{}));
        return ell;
    };

    auto index_of = [&](const Mono& m) {
        for (int j = 0; j < d; ++j)
            if (basis[size_t(j)] == m) return j;
        return -1;
    };

    auto coords_of = [&](const PolyQ& f) {
        auto v = std::vector<GaussianRational>(size_t(d));
        for (const auto& t : f.t) {
            int j = index_of(t.m);
            if (j < 0) throw internal_error("solver: normal form outside the standard basis");
            v[size_t(j)] = t.c;
        }
        return v;
    };

    // normal forms of the coordinate functions, reused for extraction
    auto nf_var = std::vector<std::vector<GaussianRational>>(size_t(n));
    for (int i = 0; i < n; ++i)
        nf_var[size_t(i)] = coords_of(ideal::normal_form(poly::make_varq(I.ring, i), G, run));

    for (int attempt = 0; attempt < 2; ++attempt) {
        PolyQ ell = build(attempt);
        auto M = std::vector<std::vector<GaussianRational>>(size_t(d), std::vector<GaussianRational>(size_t(d)));
        for (int j = 0; j < d; ++j) {
            PolyQ bj{I.ring, {{GaussianRational(1), basis[size_t(j)]}}};
            std::vector<GaussianRational> col = coords_of(ideal::normal_form(poly::mul(ell, bj), G, run));
            for (int i = 0; i < d; ++i) M[size_t(i)][size_t(j)] = col[size_t(i)];
        }

        Eigen::MatrixXcd Md(d, d), Mt(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Md(i, j) = M[size_t(i)][size_t(j)].to_complex();
                Mt(j, i) = Md(i, j);
            }

        std::vector<std::pair<C, int>> eigs;
        if (d <= opts.charpoly_max_dim) {
            std::vector<GaussianRational> cp = char_poly_exact(M);
            eigs = roots_univariate(normalize_to_double(cp), opts.tol);
            rep.method = "eigenvalue";
        } else {
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Md, false);
            for (int i = 0; i < d; ++i) eigs.push_back({es.eigenvalues()(i), 1});
            rep.method = "eigenvalue-qr";
        }

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> est(Mt, true);
        Eigen::VectorXcd evals = est.eigenvalues();

        std::vector<Root> roots;
        std::vector<C> root_lambda;
        bool ok = true;
        std::vector<char> used(size_t(d), 0);
        for (auto& [lambda, mult] : eigs) {
            // nearest unused eigenvector of M^T
            int best = -1;
            double dist = 1e300;
            for (int i = 0; i < d; ++i) {
                if (used[size_t(i)]) continue;
                double dist2 = std::abs(evals(i) - lambda);
                if (dist2 < dist) {
                    dist = dist2;
                    best = i;
                }
            }
            if (best < 0) {
                ok = false;
                break;
            }
            used[size_t(best)] = 1;
            Eigen::VectorXcd y = est.eigenvectors().col(best);
            C denom = 0; // y . e_1  (basis monomial 1 is first)
            denom = y(0);
            if (std::abs(denom) < 1e-100) {
                ok = false;
                break;
            }
            Root r;
            r.multiplicity = mult;
            r.x.resize(size_t(n));
            for (int v = 0; v < n; ++v) {
                C acc = 0;
                for (int j = 0; j < d; ++j) acc += y(j) * nf_var[size_t(v)][size_t(j)].to_complex();
                r.x[size_t(v)] = acc / denom;
            }
            roots.push_back(std::move(r));
            root_lambda.push_back(lambda);
        }
        if (!ok) continue; // ShapeFailure: second random linear form

        const std::vector<PolyQ>& sys = refine_system.empty() ? I.gens : refine_system;
        for (auto& r : roots) r = certify(sys, std::move(r), opts);

        // the refined point must still evaluate the separating form to its
        // eigenvalue; otherwise the form was not separating
        for (size_t k = 0; k < roots.size() && ok; ++k) {
            if (roots[k].multiplicity != 1 || !roots[k].refined) continue;
            C lv = 0;
            for (const auto& t : ell.t) {
                C term = t.c.to_complex();
                for (int i = 0; i < n; ++i)
                    for (uint16_t e = 0; e < t.m.e[size_t(i)]; ++e) term *= roots[k].x[size_t(i)];
                lv += term;
            }
            if (std::abs(lv - root_lambda[k]) > 1e-6 * (1.0 + std::abs(root_lambda[k]))) ok = false;
        }
        if (!ok) continue;

        // cluster refined points into multiplicities
        std::vector<Root> merged;
        std::vector<char> taken(roots.size(), 0);
        for (size_t i = 0; i < roots.size(); ++i) {
            if (taken[i]) continue;
            Root acc = roots[i];
            taken[i] = 1;
            for (size_t j = i + 1; j < roots.size(); ++j) {
                if (taken[j]) continue;
                double dmax = 0;
                for (int v = 0; v < n; ++v)
                    dmax = std::max(dmax, std::abs(roots[i].x[size_t(v)] - roots[j].x[size_t(v)]) /
                                              (1.0 + std::abs(roots[i].x[size_t(v)])));
                if (dmax <= 1e3 * opts.tol) {
                    acc.multiplicity += roots[j].multiplicity;
                    acc.singular_jacobian = acc.singular_jacobian || roots[j].singular_jacobian;
                    taken[j] = 1;
                }
            }
            merged.push_back(std::move(acc));
        }

        int64_t total = 0;
        bool residual_ok = true;
        for (const auto& r : merged) {
            total += r.multiplicity;
            if (r.multiplicity == 1 && !r.singular_jacobian && r.residual > std::sqrt(opts.tol))
                residual_ok = false;
        }
        if (total != D || !residual_ok) {
            if (attempt == 0) continue;
            throw internal_error("NoConvergence: solver failed to certify all " + std::to_string(D) +
                                 " solutions");
        }
        rep.roots = std::move(merged);
        return rep;
    }
    throw internal_error("ShapeFailure: no separating linear form found in two attempts");
}

} // namespace hermdeg::numsolve
