#include "hermdeg/coeff.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hermdeg::coeff {

uint32_t sqrt_minus_one(uint32_t p) {
    static std::mutex mu;
    static std::map<uint32_t, uint32_t> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    if (p % 4 != 1) throw input_error("BadPrime: p = " + std::to_string(p) + " is not 1 mod 4");
    // x^((p-1)/4) is a square root of -1 whenever x is a non-residue; half of
    // all x work, so scan small candidates.
    uint32_t iota = 0;
    for (uint32_t x = 2; x < p; ++x) {
        Fp c = pow(Fp{x, p}, (p - 1) / 4);
        if ((uint64_t(c.v) * c.v) % p == p - 1) {
            iota = c.v;
            break;
        }
    }
    if (!iota) throw internal_error("sqrt_minus_one: no root found (p not prime?)");
    std::lock_guard<std::mutex> lock(mu);
    cache[p] = iota;
    return iota;
}

static uint32_t mod_of(const mpz_class& z, uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return uint32_t(r.get_ui());
}

Fp reduce_mod(const Rational& a, uint32_t p) {
    if (p % 4 != 1) throw input_error("BadPrime: p = " + std::to_string(p) + " is not 1 mod 4");
    uint32_t den = mod_of(a.get_den(), p);
    if (den == 0) throw input_error("DenominatorVanishes: denominator of " + to_string(a) + " is 0 mod p");
    Fp num{mod_of(a.get_num(), p), p};
    return num * inv(Fp{den, p});
}

Fp reduce_mod(const GaussianRational& a, uint32_t p) {
    Fp re = reduce_mod(a.re, p);
    if (a.im == 0) return re;
    Fp im = reduce_mod(a.im, p);
    return re + im * Fp{sqrt_minus_one(p), p};
}

std::string to_string(const Rational& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

std::string to_string(const GaussianRational& a) {
    if (a.im == 0) return to_string(a.re);
    std::string im_part;
    if (a.im == 1) im_part = "i";
    else if (a.im == -1) im_part = "-i";
    else im_part = to_string(a.im) + "*i";
    if (a.re == 0) return im_part;
    if (a.im > 0) return to_string(a.re) + "+" + im_part;
    return to_string(a.re) + im_part; // im_part already carries the minus sign
}

std::string to_string(const Fp& a) { return std::to_string(a.v); }

} // namespace hermdeg::coeff
