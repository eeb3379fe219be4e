#ifndef HERMDEG_HDPOLY_HPP
#define HERMDEG_HDPOLY_HPP

#include "hermdeg/hermitian.hpp"

namespace hermdeg::hdpoly {

using coeff::GaussianRational;
using hermitian::QueryPoint;
using ideal::GBRun;
using poly::PolyQ;
using poly::RingPtr;

// The vHD polynomial in the formal variable T = t^2: coefficients indexed by
// power of T, exact polynomials in (u, v) (constants once specialized).
struct HDPoly {
    RingPtr uvring;              // u_1..u_n, v_1..v_n; or the empty ring when specialized
    std::vector<PolyQ> coeffs;   // coeffs[k] multiplies T^k; coeffs.back() nonzero
    int degree_T() const { return int(coeffs.size()) - 1; }
};

// Symbolic elimination of (z, w) from critical ideal + <T - <u-z, v-w>_R>.
HDPoly vhd_polynomial(const VarietySpec& V, GBRun& run);

// Specialize (u, v) first, then eliminate; much cheaper.  hd mode uses
// v = conj(u).
HDPoly vhd_polynomial_at(const VarietySpec& V, const std::vector<GaussianRational>& u,
                         const std::vector<GaussianRational>& v, GBRun& run);
HDPoly hd_polynomial_at(const VarietySpec& V, const std::vector<GaussianRational>& u, GBRun& run);

// Restrict a symbolic HDPoly to the real locus v = u (polynomials in u alone).
HDPoly real_locus(const HDPoly& P);

// Evaluate the coefficients at concrete (u, v).
std::vector<GaussianRational> specialize(const HDPoly& P, const std::vector<GaussianRational>& u,
                                         const std::vector<GaussianRational>& v);

std::string to_string(const HDPoly& P); // variety grammar extended with T

struct DualityReport {
    int samples = 0;
    int matched = 0;
    bool holds() const { return samples > 0 && matched == samples; }
};

// Theorem-level duality check: vHDp_{X,u,v}(T) = vHDp_{X^dual,v,u}(<u,v>_R - T)
// up to scalar, at random rational points.
DualityReport check_duality(const VarietySpec& V, int samples, uint64_t seed, GBRun& run);

// Discriminant with respect to T (resultant of P and dP/dT over the
// coefficient ring, divided by the leading coefficient).
PolyQ discriminant_T(const HDPoly& P, GBRun& run);

// Univariate discriminant of a specialized HD polynomial.
GaussianRational discriminant_T_value(const std::vector<GaussianRational>& coeffs);

} // namespace hermdeg::hdpoly

#endif
