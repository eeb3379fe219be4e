#ifndef HERMDEG_RING_HPP
#define HERMDEG_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "hermdeg/coeff.hpp"
#include "hermdeg/monomial.hpp"

namespace hermdeg::poly {

enum class FieldTag { GaussianRationals, PrimeField };

// Immutable ring metadata shared by polynomials.  conj_pair[i] is the index
// of the star-partner of variable i (z_k <-> w_k, u_k <-> v_k), i itself for
// self-paired variables like t, and -1 when unpaired.
struct Ring {
    std::vector<std::string> vars;
    FieldTag field = FieldTag::GaussianRationals;
    uint32_t p = 0;
    std::vector<int> conj_pair;
    MonomialOrder order = MonomialOrder::degrevlex();

    int nvars() const { return int(vars.size()); }
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return int(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

// Pairs zK <-> wK and uK <-> vK by name, self-pairs t/T, leaves the rest
// unpaired.
inline std::vector<int> derive_conjugate_pairing(const std::vector<std::string>& vars) {
    std::vector<int> pair(vars.size(), -1);
    auto find = [&](const std::string& name) -> int {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return int(i);
        return -1;
    };
    for (size_t i = 0; i < vars.size(); ++i) {
        const std::string& v = vars[i];
        if (v == "t" || v == "T") {
            pair[i] = int(i);
            continue;
        }
        if (v.size() < 2) continue;
        char c = v[0];
        char partner = c == 'z' ? 'w' : c == 'w' ? 'z' : c == 'u' ? 'v' : c == 'v' ? 'u' : 0;
        if (!partner) continue;
        int j = find(partner + v.substr(1));
        if (j >= 0) pair[i] = j;
    }
    return pair;
}

inline RingPtr make_ring(std::vector<std::string> vars, FieldTag field = FieldTag::GaussianRationals,
                         MonomialOrder order = MonomialOrder::degrevlex(), uint32_t p = 0) {
    if (int(vars.size()) > kMaxVars)
        throw input_error("ring has " + std::to_string(vars.size()) + " variables; at most " +
                          std::to_string(kMaxVars) + " supported");
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == "i") throw input_error("variable name 'i' is reserved for the imaginary unit");
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw input_error("duplicate variable name '" + vars[i] + "'");
    }
    auto r = std::make_shared<Ring>();
    r->conj_pair = derive_conjugate_pairing(vars);
    r->vars = std::move(vars);
    r->field = field;
    r->p = p;
    r->order = order;
    return r;
}

inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    auto r = std::make_shared<Ring>(*ring);
    r->order = order;
    return r;
}

} // namespace hermdeg::poly

#endif
