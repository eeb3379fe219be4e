#ifndef HERMDEG_DEGREES_HPP
#define HERMDEG_DEGREES_HPP

#include <set>

#include "hermdeg/hermitian.hpp"
#include "hermdeg/numsolve.hpp"

namespace hermdeg::degrees {

using coeff::GaussianRational;
using coeff::Rational;
using hermitian::QueryPoint;

struct Config {
    std::vector<uint32_t> primes{coeff::kPrimes.begin(), coeff::kPrimes.end()};
    int trials = 3;
    double tol = 1e-6;          // conjugate-match tolerance
    double residual_tol = 1e-10;
    uint64_t budget = 10'000'000;
    uint64_t seed = 1;
    bool fast_saturate = false;
    int jobs = 0; // 0 = logical cores

    ideal::GBOptions gb() const { return {budget, fast_saturate, seed}; }
};

enum class Route { Auto, Affine, Projective, Parametrized };

struct Trial {
    uint32_t prime = 0;
    uint64_t point_seed = 0;
    int64_t degree = -1;
    bool finite = false;
};

struct DegreeReport {
    int64_t vhd = 0;
    std::vector<Trial> trials;
    bool consensus = false;
    Route route = Route::Affine;
};

DegreeReport vhd(const VarietySpec& V, const Config& cfg, Route route = Route::Auto);

// ED degree via Eq. (conded) over random modular specializations; requires
// real-coefficient generators.
DegreeReport ed_degree(const VarietySpec& V, const Config& cfg);

// ---------------------------------------------------------------------------
// HD sampling (v = conj u, exact specialization, numeric solve)
// ---------------------------------------------------------------------------

struct SolutionPoint {
    std::vector<std::complex<double>> z, w;
    double residual = 0;
    int multiplicity = 1;
    bool is_conjugated_single = false;
};

struct HDSample {
    std::vector<GaussianRational> u;      // the point actually used (after any nudge)
    int count = 0;                        // conjugated singles = critical points
    int paired = 0;                       // associated pairs
    int other = 0;                        // non-single solutions not matched into pairs
    std::vector<double> distances_sq;     // sorted t^2 of the singles
    std::vector<SolutionPoint> solutions;
    int64_t total_with_multiplicity = 0;
    bool nudged = false;
};

HDSample hd_sample(const VarietySpec& V, std::vector<GaussianRational> u, const Config& cfg);

struct ScanGrid {
    std::vector<Rational> xs, ys;
    std::vector<int> counts; // row-major over ys then xs; -1 = degenerate cell
    int at(size_t ix, size_t iy) const { return counts[iy * xs.size() + ix]; }
};

ScanGrid hd_scan(const VarietySpec& V, const Rational& xmin, const Rational& xmax, const Rational& ymin,
                 const Rational& ymax, const Rational& step, const Config& cfg);
std::string scan_to_csv(const ScanGrid& g);

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

struct HypersurfaceBounds {
    coeff::Int bezout; // d^2 sum (k+1)(d-1)^k, k = 0..2n-2
    coeff::Int bkk;    // d^2 sum binom(n-1,k)^2 (d-1)^(2k)
    coeff::Int final;  // min of the two
    bool bezout_attains_min = false; // strictly smaller (the "underlined" entries)
};
HypersurfaceBounds bound_hypersurface(int d, int n);

struct ParametrizedBounds {
    coeff::Int bezout; // (2d-1)^(2m)
    coeff::Int bkk;    // sum binom(m,k)^2 d^(2(m-k)) (d-1)^(2k)
};
ParametrizedBounds bound_parametrized(int d, int m);

// ---------------------------------------------------------------------------
// Product lemma utilities
// ---------------------------------------------------------------------------

inline int64_t product_vhd(int64_t a, int64_t b) { return a * b; }
std::set<int64_t> product_hd(const std::set<int64_t>& a, const std::set<int64_t>& b);

} // namespace hermdeg::degrees

#endif
