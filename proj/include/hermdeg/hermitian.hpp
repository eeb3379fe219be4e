#ifndef HERMDEG_HERMITIAN_HPP
#define HERMDEG_HERMITIAN_HPP

#include "hermdeg/variety.hpp"

namespace hermdeg::hermitian {

using coeff::GaussianRational;
using ideal::GBRun;
using ideal::IdealQ;
using poly::PolyQ;
using poly::RingPtr;

// Query (u, v): symbolic when u is empty; HD mode sets v = conj(u).
struct QueryPoint {
    std::vector<GaussianRational> u;
    std::vector<GaussianRational> v;

    bool symbolic() const { return u.empty(); }
    static QueryPoint sym() { return {}; }
    static QueryPoint hd(std::vector<GaussianRational> point) {
        QueryPoint q;
        q.v.reserve(point.size());
        for (const auto& c : point) q.v.push_back(coeff::conj(c));
        q.u = std::move(point);
        return q;
    }
};

// I_X + <c-minors of J(f)> in the ambient z-ring.
IdealQ singular_locus_ideal(const VarietySpec& V);

// The unsaturated critical system plus the pieces it is saturated by; the
// degree computations specialize/reduce these before saturating.
// Variable layout in `ring`: z_1..z_n, w_1..w_n, u_1..u_n, v_1..v_n.
struct CriticalSystem {
    RingPtr ring;
    std::vector<PolyQ> equations; // f, f*, minors, minors*
    std::vector<PolyQ> sing;      // I_sing mapped into ring
    std::vector<PolyQ> sing_star;
    PolyQ zw_real;                // <z,w>_R; projective systems saturate by it
    bool projective = false;
    int n = 0;

    int zi(int k) const { return k; }
    int wi(int k) const { return n + k; }
    int ui(int k) const { return 2 * n + k; }
    int vi(int k) const { return 3 * n + k; }
};

CriticalSystem build_critical_system(const VarietySpec& V, bool projective);

// Substitute concrete (u, v) and drop the query variables; result lives in
// the [z, w] subring.
ideal::Ideal<GaussianRational> specialize_critical(const CriticalSystem& S, const QueryPoint& q,
                                                   std::vector<PolyQ>* sing_out = nullptr,
                                                   std::vector<PolyQ>* sing_star_out = nullptr,
                                                   PolyQ* zw_out = nullptr);

// Eq. (cond): saturated Hermitian critical ideal, symbolic or specialized.
IdealQ hermitian_critical_ideal(const VarietySpec& V, const QueryPoint& q, GBRun& run);

// Eq. (cond3): bi-homogeneous projective variant with symbolic (u, v).
IdealQ projective_critical_ideal(const VarietySpec& V, GBRun& run);

// Eq. (conded): ED critical ideal for real-coefficient varieties; symbolic u
// when `u` is empty.
IdealQ ed_critical_ideal(const VarietySpec& V, const std::vector<GaussianRational>& u, GBRun& run);

// X~ = V(Re f_k, Im f_k) in 2n real variables x_1..x_n, y_1..y_n.
VarietySpec realification(const VarietySpec& V);

// N_X in C[z, s], and the dual variety (eliminate z, rename s -> z).
IdealQ conormal_ideal(const VarietySpec& V, GBRun& run);
VarietySpec dual_variety(const VarietySpec& V, GBRun& run);

// Gradient system of D_{u,v}(z, w) for parametrized varieties; symbolic
// (u, v) when q is symbolic.  Ring layout: z_1..z_m, w_1..w_m [, u, v].
struct ParametrizedSystem {
    RingPtr ring;
    std::vector<PolyQ> equations; // 2m gradient polynomials
    int m = 0;
    int n = 0;
    bool symbolic = false;
};
ParametrizedSystem parametrized_critical_system(const VarietySpec& V, const QueryPoint& q);

// Distance polynomial <u-z, v-w>_R in a critical-system ring (symbolic) or
// the squared-distance value at a specialized solution.
PolyQ distance_pairing(const CriticalSystem& S);

} // namespace hermdeg::hermitian

#endif
