#ifndef HERMDEG_GROEBNER_HPP
#define HERMDEG_GROEBNER_HPP

#include <cstdint>
#include <unordered_set>

#include "hermdeg/poly.hpp"

namespace hermdeg::ideal {

using poly::Mono;
using poly::MonomialOrder;
using poly::Poly;
using poly::RingPtr;

struct GBOptions {
    uint64_t budget = 10'000'000; // elementary reduction steps
    bool fast_saturate = false;
    uint64_t seed = 1;
};

// Mutable per-computation state; a single Groebner run is sequential and
// deterministic, distinct runs share nothing.
struct GBRun {
    GBOptions opts;
    uint64_t steps = 0;

    explicit GBRun(const GBOptions& o = {}) : opts(o) {}
    void tick(uint64_t n = 1) {
        steps += n;
        if (steps > opts.budget)
            throw budget_error("BudgetExceeded: " + std::to_string(steps) + " reduction steps (budget " +
                               std::to_string(opts.budget) + ")");
    }
};

template <class F>
struct GroebnerBasis {
    RingPtr ring;              // carries the order the basis was computed under
    std::vector<Poly<F>> g;    // reduced, monic, sorted ascending by leading monomial
    bool is_unit() const { return g.size() == 1 && g[0].is_constant() && !g[0].is_zero(); }
};

namespace detail {

// Full reduction.  For GaussianRational the computation is fraction-free:
// h <- lc(g)*h - c*m*g with content stripped, so the result is the normal
// form up to a scalar (exact for monic reducers when `exact` is set).
template <class F>
Poly<F> reduce_impl(Poly<F> h, const std::vector<Poly<F>>& basis, const std::vector<char>* skip, GBRun& run,
                    bool exact) {
    if (h.is_zero()) return h;
    const RingPtr& ring = h.ring;
    int n = ring->nvars();
    size_t pos = 0; // everything before pos is irreducible
    uint64_t since_strip = 0;
    while (pos < h.t.size()) {
        const Mono& m = h.t[pos].m;
        const Poly<F>* red = nullptr;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (skip && (*skip)[k]) continue;
            if (basis[k].is_zero()) continue;
            if (poly::mono_divides(basis[k].lt().m, m, n)) {
                red = &basis[k];
                break;
            }
        }
        if (!red) {
            ++pos;
            continue;
        }
        run.tick();
        Mono q = poly::mono_div(m, red->lt().m, n);
        if constexpr (std::is_same_v<F, poly::GaussianRational>) {
            if (exact) {
                h = poly::sub_mul(h, h.t[pos].c / red->lt().c, q, *red);
            } else {
                // fraction-free: lc(g)*h - c*q*g, result meaningful up to scalar
                F lcg = red->lt().c;
                F c = h.t[pos].c;
                h = poly::sub_mul(poly::mul_term(h, lcg, Mono{}), c, q, *red);
                if (++since_strip >= 4) {
                    h = poly::primitive_part(h);
                    since_strip = 0;
                }
            }
        } else {
            h = poly::sub_mul(h, h.t[pos].c / red->lt().c, q, *red);
        }
    }
    return h;
}

} // namespace detail

// Exact normal form against a (typically reduced, monic) basis.
template <class F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& basis, GBRun& run) {
    return detail::reduce_impl(f, basis, nullptr, run, true);
}

template <class F>
Poly<F> normal_form(const Poly<F>& f, const GroebnerBasis<F>& G, GBRun& run) {
    return detail::reduce_impl(f, G.g, nullptr, run, true);
}

namespace detail {

template <class F>
Poly<F> normalize_elem(const Poly<F>& f) {
    if constexpr (std::is_same_v<F, poly::GaussianRational>) return poly::primitive_part(f);
    else return poly::monic(f);
}

// Fraction-free full reduction for the engine: result is NF up to a nonzero
// scalar, returned in normalized (primitive / monic) form.  When `sugars` is
// given, the phantom ("sugar") degree of the result is tracked in `sugar`.
template <class F>
Poly<F> reduce_scaled(Poly<F> h, const std::vector<Poly<F>>& basis, const std::vector<char>& redundant,
                      GBRun& run, const std::vector<uint32_t>* sugars = nullptr, uint32_t* sugar = nullptr) {
    if (h.is_zero()) return h;
    const RingPtr& ring = h.ring;
    int n = ring->nvars();
    size_t pos = 0;
    uint64_t since_strip = 0;
    while (pos < h.t.size()) {
        const Mono& m = h.t[pos].m;
        const Poly<F>* red = nullptr;
        size_t red_idx = 0;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (redundant[k] || basis[k].is_zero()) continue;
            if (poly::mono_divides(basis[k].lt().m, m, n)) {
                red = &basis[k];
                red_idx = k;
                break;
            }
        }
        if (!red) {
            ++pos;
            continue;
        }
        run.tick();
        Mono q = poly::mono_div(m, red->lt().m, n);
        if (sugars && sugar) *sugar = std::max(*sugar, (*sugars)[red_idx] + q.deg);
        if constexpr (std::is_same_v<F, poly::GaussianRational>) {
            // lc(g)*h - c*q*g, all Gaussian-integer arithmetic
            F lcg = red->lt().c;
            F c = h.t[pos].c;
            Poly<F> scaled = poly::mul_term(h, lcg, Mono{});
            h = poly::sub_mul(scaled, c, q, *red);
            if (++since_strip >= 4) {
                h = poly::primitive_part(h);
                since_strip = 0;
            }
        } else {
            h = poly::sub_mul(h, h.t[pos].c / red->lt().c, q, *red);
        }
    }
    return h.is_zero() ? h : normalize_elem(h);
}

} // namespace detail

// Buchberger with sugar-flavoured normal selection and the Gebauer-Moeller
// pair criteria; deterministic for fixed input order.
template <class F>
GroebnerBasis<F> buchberger(std::vector<Poly<F>> gens, const RingPtr& ring, GBRun& run) {
    int n = ring->nvars();
    const MonomialOrder& ord = ring->order;

    struct Pair {
        int i, j;
        Mono lcm;
        uint32_t sugar;
    };
    std::vector<Poly<F>> g;
    std::vector<uint32_t> sugars;
    std::vector<char> redundant;
    std::vector<Pair> pairs;

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = poly::mono_cmp(a.lcm, b.lcm, ord, n);
        if (c) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };

    auto pair_sugar = [&](int i, int j, const Mono& lcm) {
        uint32_t si = sugars[size_t(i)] + (lcm.deg - g[size_t(i)].lt().m.deg);
        uint32_t sj = sugars[size_t(j)] + (lcm.deg - g[size_t(j)].lt().m.deg);
        return std::max(si, sj);
    };

    auto add_element = [&](Poly<F> h, uint32_t sug) {
        int t = int(g.size());
        Mono tau = h.lt().m;
        g.push_back(std::move(h));
        sugars.push_back(sug);
        redundant.push_back(0);
        // new-pair candidates with the Gebauer-Moeller M/F criteria
        std::vector<Pair> fresh;
        for (int i = 0; i < t; ++i) {
            if (redundant[size_t(i)]) continue;
            Mono lcm = poly::mono_lcm(g[size_t(i)].lt().m, tau, n);
            fresh.push_back({i, t, lcm, pair_sugar(i, t, lcm)});
        }
        std::vector<char> drop(fresh.size(), 0), coprime(fresh.size(), 0);
        for (size_t a = 0; a < fresh.size(); ++a)
            coprime[a] = poly::mono_coprime(g[size_t(fresh[a].i)].lt().m, tau, n);
        for (size_t a = 0; a < fresh.size(); ++a) { // M criterion: strict lcm divisor wins
            for (size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (fresh[b].lcm != fresh[a].lcm && poly::mono_divides(fresh[b].lcm, fresh[a].lcm, n))
                    drop[a] = 1;
            }
        }
        for (size_t a = 0; a < fresh.size(); ++a) { // F criterion on equal-lcm classes
            if (drop[a]) continue;
            bool any_coprime = coprime[a] != 0;
            for (size_t b = a + 1; b < fresh.size(); ++b) {
                if (drop[b] || fresh[b].lcm != fresh[a].lcm) continue;
                any_coprime = any_coprime || coprime[b];
                drop[b] = 1;
            }
            if (any_coprime) drop[a] = 1; // product criterion covers the class
        }
        // B criterion on surviving old pairs
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (const Pair& p : pairs) {
            const Mono& l = p.lcm;
            if (poly::mono_divides(tau, l, n) &&
                poly::mono_lcm(g[size_t(p.i)].lt().m, tau, n) != l &&
                poly::mono_lcm(g[size_t(p.j)].lt().m, tau, n) != l)
                continue;
            kept.push_back(p);
        }
        pairs = std::move(kept);
        for (size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.push_back(fresh[a]);
        // older elements whose leading monomial the new one divides become
        // redundant for pair-building purposes
        for (int i = 0; i < t; ++i)
            if (!redundant[size_t(i)] && poly::mono_divides(tau, g[size_t(i)].lt().m, n)) redundant[size_t(i)] = 1;
    };

    for (auto& f : gens) {
        if (f.is_zero()) continue;
        uint32_t sug = f.total_degree();
        Poly<F> h = detail::reduce_scaled(std::move(f), g, redundant, run, &sugars, &sug);
        if (!h.is_zero()) add_element(std::move(h), std::max(sug, h.total_degree()));
    }

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pair_less(pairs[k], pairs[best])) best = k;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + long(best));
        run.tick();

        const Poly<F>& a = g[size_t(p.i)];
        const Poly<F>& b = g[size_t(p.j)];
        Mono qa = poly::mono_div(p.lcm, a.lt().m, n);
        Mono qb = poly::mono_div(p.lcm, b.lt().m, n);
        Poly<F> s;
        if constexpr (std::is_same_v<F, poly::GaussianRational>) {
            s = poly::sub(poly::mul_term(a, b.lt().c, qa), poly::mul_term(b, a.lt().c, qb));
        } else {
            F one = poly::ring_one<F>(ring);
            s = poly::sub(poly::mul_term(a, one / a.lt().c, qa), poly::mul_term(b, one / b.lt().c, qb));
        }
        uint32_t sug = p.sugar;
        Poly<F> h = detail::reduce_scaled(std::move(s), g, redundant, run, &sugars, &sug);
        if (!h.is_zero()) add_element(std::move(h), std::max(sug, h.total_degree()));
    }

    // minimalize + inter-reduce + make monic
    std::vector<Poly<F>> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            if (!poly::mono_divides(g[j].lt().m, g[i].lt().m, n)) continue;
            if (g[j].lt().m == g[i].lt().m && j > i) continue;
            keep = false;
            break;
        }
        if (keep) minimal.push_back(g[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly<F>& x, const Poly<F>& y) {
        return poly::mono_cmp(x.lt().m, y.lt().m, ord, n) < 0;
    });
    GroebnerBasis<F> out{ring, {}};
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<char> skip(minimal.size(), 0);
        skip[i] = 1;
        Poly<F> h = minimal[i];
        // reduce the tail against the other elements
        Poly<F> r = detail::reduce_impl(std::move(h), minimal, &skip, run, false);
        out.g.push_back(poly::monic(detail::normalize_elem(r)));
    }
    std::sort(out.g.begin(), out.g.end(), [&](const Poly<F>& x, const Poly<F>& y) {
        return poly::mono_cmp(x.lt().m, y.lt().m, ord, n) < 0;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Dimension and degree of the quotient
// ---------------------------------------------------------------------------

namespace detail {

inline bool lm_in_subset(const Mono& m, const std::vector<char>& subset, int n) {
    for (int i = 0; i < n; ++i)
        if (m.e[size_t(i)] && !subset[size_t(i)]) return false;
    return true;
}

inline int max_independent(const std::vector<Mono>& lms, std::vector<char>& subset, int next, int n) {
    // subset independent <=> no leading monomial supported inside it
    int best = 0;
    for (int i = next; i < n; ++i) {
        subset[size_t(i)] = 1;
        bool ok = true;
        for (const Mono& m : lms)
            if (lm_in_subset(m, subset, n)) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, 1 + max_independent(lms, subset, i + 1, n));
        subset[size_t(i)] = 0;
    }
    return best;
}

} // namespace detail

// Krull dimension of R/I via maximal independent variable sets modulo LT(I).
template <class F>
int dimension(const GroebnerBasis<F>& G) {
    int n = G.ring->nvars();
    if (G.is_unit()) return -1; // empty variety
    std::vector<Mono> lms;
    for (const auto& f : G.g)
        if (!f.is_zero()) lms.push_back(f.lt().m);
    std::vector<char> subset(size_t(n), 0);
    return detail::max_independent(lms, subset, 0, n);
}

// Number of standard monomials (= dim of the quotient = degree with
// multiplicity for zero-dimensional ideals).
template <class F>
int64_t degree_zero_dim(const GroebnerBasis<F>& G, int64_t cap = 2'000'000) {
    int n = G.ring->nvars();
    if (G.is_unit()) return 0;
    std::vector<Mono> lms;
    for (const auto& f : G.g)
        if (!f.is_zero()) lms.push_back(f.lt().m);
    // zero-dimensionality: every variable occurs as a pure power among LTs
    for (int i = 0; i < n; ++i) {
        bool pure = false;
        for (const Mono& m : lms) {
            if (!m.e[size_t(i)]) continue;
            if (m.deg == m.e[size_t(i)]) {
                pure = true;
                break;
            }
        }
        if (!pure) throw input_error("NotZeroDimensional: no pure power of '" + G.ring->vars[size_t(i)] +
                                     "' among leading terms");
    }
    std::unordered_set<Mono, poly::MonoHash> seen;
    std::vector<Mono> frontier{Mono{}};
    int64_t count = 0;
    auto divisible = [&](const Mono& m) {
        for (const Mono& l : lms)
            if (poly::mono_divides(l, m, n)) return true;
        return false;
    };
    while (!frontier.empty()) {
        Mono m = frontier.back();
        frontier.pop_back();
        if (seen.count(m)) continue;
        seen.insert(m);
        if (divisible(m)) continue;
        if (++count > cap) throw budget_error("degree_zero_dim: quotient dimension exceeds cap");
        for (int i = 0; i < n; ++i) {
            Mono m2 = m;
            m2.bump(i);
            frontier.push_back(m2);
        }
    }
    return count;
}

// Monomials outside LT(I), ascending under the ring order.
template <class F>
std::vector<Mono> standard_monomials(const GroebnerBasis<F>& G, int64_t cap = 100'000) {
    int n = G.ring->nvars();
    std::vector<Mono> lms;
    for (const auto& f : G.g)
        if (!f.is_zero()) lms.push_back(f.lt().m);
    std::unordered_set<Mono, poly::MonoHash> seen;
    std::vector<Mono> frontier{Mono{}}, out;
    auto divisible = [&](const Mono& m) {
        for (const Mono& l : lms)
            if (poly::mono_divides(l, m, n)) return true;
        return false;
    };
    while (!frontier.empty()) {
        Mono m = frontier.back();
        frontier.pop_back();
        if (seen.count(m)) continue;
        seen.insert(m);
        if (divisible(m)) continue;
        out.push_back(m);
        if (int64_t(out.size()) > cap) throw budget_error("standard_monomials: quotient too large");
        for (int i = 0; i < n; ++i) {
            Mono m2 = m;
            m2.bump(i);
            frontier.push_back(m2);
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Mono& x, const Mono& y) { return poly::mono_cmp(x, y, G.ring->order, n) < 0; });
    return out;
}

} // namespace hermdeg::ideal

#endif
