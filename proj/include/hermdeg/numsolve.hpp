#ifndef HERMDEG_NUMSOLVE_HPP
#define HERMDEG_NUMSOLVE_HPP

#include <complex>

#include "hermdeg/ideal.hpp"

namespace hermdeg::numsolve {

using ideal::GBRun;
using ideal::IdealQ;
using poly::PolyQ;

struct Root {
    std::vector<std::complex<double>> x; // values of all ring variables
    double residual = 0;                 // max relative backward error over the system
    int multiplicity = 1;
    bool refined = false;
    bool singular_jacobian = false;
};

struct SolveReport {
    std::vector<Root> roots;
    int64_t total_with_multiplicity = 0; // = degree of the specialized ideal
    std::string method;                  // "eigenvalue" or "eigenvalue-qr"
};

struct SolveOptions {
    double tol = 1e-10;        // certification tolerance (relative residual)
    uint64_t seed = 1;
    int max_newton = 50;
    int charpoly_max_dim = 64; // exact char poly guard; larger quotients use QR eigenvalues
};

// All complex roots by Aberth-Ehrlich simultaneous iteration; coefficients
// ascending (c[0] + c[1] t + ...).  Multiplicities by cluster radius.
std::vector<std::pair<std::complex<double>, int>> roots_univariate(
    const std::vector<std::complex<double>>& coeffs, double tol, int max_iters = 1000);

// Quotient-algebra eigenvalue solver for a zero-dimensional ideal over the
// Gaussian rationals.  `refine_system` is the original generator set used for
// Newton refinement and residual certification.
SolveReport solve_zero_dim(const IdealQ& I, const std::vector<PolyQ>& refine_system, const SolveOptions& opts,
                           GBRun& run);

// Newton refinement in double-double precision with error-tracked residual.
Root certify(const std::vector<PolyQ>& system, Root p, const SolveOptions& opts);

} // namespace hermdeg::numsolve

#endif
