#ifndef HERMDEG_MONOMIAL_HPP
#define HERMDEG_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <functional>

#include "hermdeg/error.hpp"

namespace hermdeg::poly {

inline constexpr int kMaxVars = 24;
inline constexpr uint32_t kMaxExponent = 1u << 15; // overflow guard; paper instances are low degree

struct Mono {
    uint32_t deg = 0;
    std::array<uint16_t, kMaxVars> e{};

    uint16_t operator[](int i) const { return e[size_t(i)]; }
    bool is_one() const { return deg == 0; }

    void bump(int i, uint32_t k = 1) {
        uint32_t n = uint32_t(e[size_t(i)]) + k;
        if (n >= kMaxExponent) throw budget_error("DegreeOverflow: exponent exceeds 2^15");
        e[size_t(i)] = uint16_t(n);
        deg += k;
    }

    friend bool operator==(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
};

inline Mono mono_mul(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    r.deg = a.deg + b.deg;
    for (int i = 0; i < nvars; ++i) {
        uint32_t n = uint32_t(a.e[size_t(i)]) + b.e[size_t(i)];
        if (n >= kMaxExponent) throw budget_error("DegreeOverflow: exponent exceeds 2^15");
        r.e[size_t(i)] = uint16_t(n);
    }
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b, int nvars) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < nvars; ++i)
        if (a.e[size_t(i)] > b.e[size_t(i)]) return false;
    return true;
}

// b / a, precondition: a | b
inline Mono mono_div(const Mono& b, const Mono& a, int nvars) {
    Mono r;
    r.deg = b.deg - a.deg;
    for (int i = 0; i < nvars; ++i) r.e[size_t(i)] = uint16_t(b.e[size_t(i)] - a.e[size_t(i)]);
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    uint32_t d = 0;
    for (int i = 0; i < nvars; ++i) {
        uint16_t m = a.e[size_t(i)] > b.e[size_t(i)] ? a.e[size_t(i)] : b.e[size_t(i)];
        r.e[size_t(i)] = m;
        d += m;
    }
    r.deg = d;
    return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a.e[size_t(i)] && b.e[size_t(i)]) return false;
    return true;
}

struct MonoHash {
    size_t operator()(const Mono& m) const {
        size_t h = m.deg;
        for (int i = 0; i < kMaxVars; ++i) h = h * 1000003u + m.e[size_t(i)];
        return h;
    }
};

// ---------------------------------------------------------------------------
// Monomial orders: lex, degrevlex, and the elimination block order
// block(k, inner) which is degrevlex on the first k variables, breaking ties
// with `inner` on the rest.
// ---------------------------------------------------------------------------

enum class OrderKind { Lex, DegRevLex, Block };

struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    int block = 0;                         // size of the eliminated (leading) block
    OrderKind inner = OrderKind::DegRevLex; // order on the remaining variables

    static MonomialOrder lex() { return {OrderKind::Lex, 0, OrderKind::Lex}; }
    static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0, OrderKind::DegRevLex}; }
    static MonomialOrder elim(int k, OrderKind inner = OrderKind::DegRevLex) {
        return {OrderKind::Block, k, inner};
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.block == b.block && a.inner == b.inner;
    }
};

// Compare in the range [lo, hi); returns +1 if a > b.
inline int cmp_lex(const Mono& a, const Mono& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        if (a.e[size_t(i)] != b.e[size_t(i)]) return a.e[size_t(i)] > b.e[size_t(i)] ? 1 : -1;
    }
    return 0;
}

inline int cmp_degrevlex(const Mono& a, const Mono& b, int lo, int hi) {
    uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[size_t(i)];
        db += b.e[size_t(i)];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.e[size_t(i)] != b.e[size_t(i)]) return a.e[size_t(i)] < b.e[size_t(i)] ? 1 : -1;
    }
    return 0;
}

inline int mono_cmp(const Mono& a, const Mono& b, const MonomialOrder& o, int nvars) {
    switch (o.kind) {
        case OrderKind::Lex:
            return cmp_lex(a, b, 0, nvars);
        case OrderKind::DegRevLex:
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            return cmp_degrevlex(a, b, 0, nvars);
        case OrderKind::Block: {
            int c = cmp_degrevlex(a, b, 0, o.block);
            if (c) return c;
            if (o.inner == OrderKind::Lex) return cmp_lex(a, b, o.block, nvars);
            return cmp_degrevlex(a, b, o.block, nvars);
        }
    }
    return 0;
}

} // namespace hermdeg::poly

#endif
