#ifndef HERMDEG_EVOLUTE_HPP
#define HERMDEG_EVOLUTE_HPP

#include "hermdeg/hermitian.hpp"

namespace hermdeg::evolute {

using coeff::GaussianRational;
using ideal::GBRun;
using ideal::IdealQ;
using poly::PolyQ;
using poly::RingPtr;

struct PlaneCurve {
    PolyQ f; // in a two-variable ring
    bool real_coefficients = true;
};

PlaneCurve plane_curve(const VarietySpec& V);

enum class DiscKind { Evolute, Outward, ComplexVirtual, ComplexRealLocus };

struct DiscriminantPoly {
    PolyQ poly; // in (u1, u2) or (u, v); primitive, positive leading coefficient
    DiscKind kind;
};

// I_X^E = <f, g, phi> : <df>^infty in C[z, u], with
// g = (u2-z2) d1f - (u1-z1) d2f and phi = (d1g)(d2f) - (d2g)(d1f).
IdealQ evolute_ideal(const PlaneCurve& C, GBRun& run);
DiscriminantPoly evolute_poly(const PlaneCurve& C, GBRun& run);

// Same with third generator phi - 2|grad f|^2.
IdealQ outward_evolute_ideal(const PlaneCurve& C, GBRun& run);
DiscriminantPoly outward_evolute_poly(const PlaneCurve& C, GBRun& run);

// Virtual complex evolute: <f, f*, g~, g~*, xi> : <df, df*>^infty in
// C[z, w, u, v]; xi = phi~ phi~* - <grad_z f, grad_w f*>_R^2.
IdealQ complex_evolute_ideal(const PlaneCurve& C, GBRun& run);
// real_locus substitutes v = u; on budget exhaustion of the symbolic
// elimination the real-locus variant restarts with v = u set up front.
DiscriminantPoly complex_evolute_poly(const PlaneCurve& C, bool real_locus, GBRun& run);

// ---------------------------------------------------------------------------
// Univariate rational functions over the Gaussian rationals, for the
// parametric evolute formulas.
// ---------------------------------------------------------------------------

struct RatFun {
    PolyQ num, den; // univariate; den nonzero, reduced, monic
};

RatFun ratfun(const PolyQ& num, const PolyQ& den);
RatFun ratfun(const PolyQ& num);
RatFun rf_add(const RatFun& a, const RatFun& b);
RatFun rf_sub(const RatFun& a, const RatFun& b);
RatFun rf_mul(const RatFun& a, const RatFun& b);
RatFun rf_div(const RatFun& a, const RatFun& b);
RatFun rf_derivative(const RatFun& a);
bool rf_equal(const RatFun& a, const RatFun& b);
bool rf_is_zero(const RatFun& a);
GaussianRational rf_eval(const RatFun& a, const GaussianRational& t);
RatFun parse_ratfun(const std::string& text, const RingPtr& ring);
std::string rf_to_string(const RatFun& a);

// psi^E per the center-of-osculating-circle formula; errors with
// ZeroCurvature when the curvature numerator vanishes identically.
std::pair<RatFun, RatFun> parametric_evolute(const std::pair<RatFun, RatFun>& psi);
// psi-outward = 2 psi - psi^E
std::pair<RatFun, RatFun> parametric_outward(const std::pair<RatFun, RatFun>& psi);

} // namespace hermdeg::evolute

#endif
