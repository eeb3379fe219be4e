#ifndef HERMDEG_VARIETY_HPP
#define HERMDEG_VARIETY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hermdeg/ideal.hpp"
#include "hermdeg/parser.hpp"

namespace hermdeg {

using ideal::IdealQ;
using poly::PolyQ;
using poly::RingPtr;

// A variety over the Gaussian rationals: implicit generators in the ambient
// z-ring, optionally a polynomial parametrization psi: C^m -> C^n.
struct VarietySpec {
    int n = 0;
    RingPtr zring;                       // ambient variables
    std::vector<PolyQ> generators;
    int codim = -1;                      // = #generators for complete intersections
    bool homogeneous = false;
    RingPtr pring;                       // parameter ring, when parametrized
    std::vector<PolyQ> parametrization;  // n component polynomials
    std::string name;

    bool parametrized() const { return !parametrization.empty(); }
    int nparams() const { return pring ? pring->nvars() : 0; }
};

// Variety file grammar (UTF-8 text, '#' comments):
//   vars: z1, z2, ..., zn
//   homogeneous: true|false        (optional, default false)
//   codim: c                       (optional, default #generators)
//   params: t1, ..., tm            (optional)
//   param: <polynomial in params>  (n lines when params given)
//   <generator polynomial>         (one per line)
VarietySpec parse_variety(const std::string& text, const std::string& name = "");
VarietySpec load_variety(const std::string& path);
std::string variety_to_string(const VarietySpec& v);

// Ideals print in the same grammar plus an `order:` header.
std::string ideal_to_string(const IdealQ& I);
IdealQ parse_ideal(const std::string& text);

// X x Y with ambient variables concatenated (generators renamed into the
// product ring).
VarietySpec product_variety(const VarietySpec& a, const VarietySpec& b);

// X -> c*X + b, exact; used by the invariance tests and the scaling lemma.
VarietySpec scale_translate(const VarietySpec& v, const coeff::GaussianRational& c,
                            const std::vector<coeff::GaussianRational>& b);

} // namespace hermdeg

#endif
