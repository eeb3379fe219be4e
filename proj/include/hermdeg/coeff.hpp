#ifndef HERMDEG_COEFF_HPP
#define HERMDEG_COEFF_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hermdeg/error.hpp"

namespace hermdeg::coeff {

using Int = mpz_class;
using Rational = mpq_class; // always canonical: gcd(|num|,den)=1, den>0

// ---------------------------------------------------------------------------
// Gaussian rationals a + b*i with a,b in Q.
// ---------------------------------------------------------------------------

struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long a) : re(a), im(0) {}
    GaussianRational(const Rational& a) : re(a), im(0) {}
    GaussianRational(Rational a, Rational b) : re(std::move(a)), im(std::move(b)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw input_error("GaussianRational: division by zero");
        Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

// mpq_class(num, den) does not reduce; route fraction literals through here
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline GaussianRational conj(const GaussianRational& a) { return {a.re, -a.im}; }
inline GaussianRational inv(const GaussianRational& a) { return GaussianRational(1) / a; }
inline Rational norm(const GaussianRational& a) { return a.re * a.re + a.im * a.im; }
inline GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

// ---------------------------------------------------------------------------
// Prime fields F_p for p odd, p < 2^31, p = 1 (mod 4).  Elements carry their
// modulus so generic polynomial code stays field-agnostic.
// ---------------------------------------------------------------------------

struct Fp {
    uint32_t v = 0;
    uint32_t p = 0;

    Fp() = default;
    Fp(uint32_t value, uint32_t prime) : v(value % prime), p(prime) {}

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v != b.v; }
};

inline Fp operator+(const Fp& a, const Fp& b) {
    uint64_t s = uint64_t(a.v) + b.v;
    uint32_t p = a.p ? a.p : b.p;
    if (s >= p) s -= p;
    return Fp{uint32_t(s), p};
}
inline Fp operator-(const Fp& a, const Fp& b) {
    uint32_t p = a.p ? a.p : b.p;
    return Fp{a.v >= b.v ? a.v - b.v : uint32_t(uint64_t(a.v) + p - b.v), p};
}
inline Fp operator-(const Fp& a) { return Fp{a.v == 0 ? 0 : a.p - a.v, a.p}; }
inline Fp operator*(const Fp& a, const Fp& b) {
    uint32_t p = a.p ? a.p : b.p;
    return Fp{uint32_t((uint64_t(a.v) * b.v) % p), p};
}
inline Fp& operator+=(Fp& a, const Fp& b) { a = a + b; return a; }
inline Fp& operator-=(Fp& a, const Fp& b) { a = a - b; return a; }
inline Fp& operator*=(Fp& a, const Fp& b) { a = a * b; return a; }

inline Fp pow(Fp a, uint64_t e) {
    Fp r{1, a.p};
    while (e) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}
inline Fp inv(const Fp& a) {
    if (a.v == 0) throw input_error("Fp: division by zero");
    return pow(a, a.p - 2);
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }
inline Fp conj(const Fp& a) { return a; } // star is never applied after reduction; see reduce_mod

// Fixed table of primes = 1 (mod 4) just below 2^30: headroom for 64-bit
// products and a guaranteed square root of -1.
inline constexpr std::array<uint32_t, 20> kPrimes = {
    1073741789u, 1073741741u, 1073741717u, 1073741689u, 1073741621u,
    1073741561u, 1073741477u, 1073741441u, 1073741381u, 1073741329u,
    1073741309u, 1073741237u, 1073741213u, 1073741197u, 1073741189u,
    1073741173u, 1073741101u, 1073741077u, 1073740933u, 1073740909u,
};

uint32_t sqrt_minus_one(uint32_t p); // cached per prime
Fp reduce_mod(const Rational& a, uint32_t p);
Fp reduce_mod(const GaussianRational& a, uint32_t p); // i -> iota

// Field-generic helpers used by templated polynomial code.
inline GaussianRational f_zero(const GaussianRational&) { return GaussianRational(0); }
inline GaussianRational f_one(const GaussianRational&) { return GaussianRational(1); }
inline Fp f_zero(const Fp& like) { return Fp{0, like.p}; }
inline Fp f_one(const Fp& like) { return Fp{1, like.p}; }

std::string to_string(const Rational& a);
std::string to_string(const GaussianRational& a); // coefficient syntax: a, a/b, i, a+b*i
std::string to_string(const Fp& a);

} // namespace hermdeg::coeff

#endif
