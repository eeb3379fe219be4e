#include "doctest.h"
#include "hermdeg/parser.hpp"

#include <random>

using namespace hermdeg;
using namespace hermdeg::poly;
using coeff::GaussianRational;
using coeff::Rational;

namespace {

RingPtr zring2() { return make_ring({"z1", "z2"}); }

PolyQ P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

PolyQ random_poly(const RingPtr& r, std::mt19937_64& rng, int terms = 4, int maxdeg = 3) {
    PolyQ f = make_zero<GaussianRational>(r);
    for (int t = 0; t < terms; ++t) {
        Mono m;
        for (int i = 0; i < r->nvars(); ++i) m.bump(i, uint32_t(rng() % uint64_t(maxdeg + 1)));
        GaussianRational c{Rational(long(rng() % 19) - 9), Rational(long(rng() % 5) - 2)};
        f = add(f, PolyQ{r, {{c, m}}});
    }
    canonicalize(f);
    return f;
}

} // namespace

TEST_CASE("parser golden examples and round trips") {
    auto r = zring2();
    PolyQ parab = P("z2 - z1^2", r);
    CHECK(parab.t.size() == 2);
    CHECK(to_string(parse_poly(to_string(parab), r)) == to_string(parab));

    PolyQ ell = P("z1^2 + 4*z2^2 - 4", r);
    CHECK(ell.t.size() == 3);
    CHECK(to_string(parse_poly(to_string(ell), r)) == to_string(ell));

    CHECK(P("0", r).is_zero());
    CHECK(P("0", r).t.empty());

    PolyQ mixed = P("(1/2 + 3/4*i)*z1*z2 - i*z2^2 + 2/3", r);
    CHECK(to_string(parse_poly(to_string(mixed), r)) == to_string(mixed));
}

TEST_CASE("parser errors carry position") {
    auto r = zring2();
    CHECK_THROWS_WITH_AS(P("z1 + q", r), doctest::Contains("UnknownVariable"), Error);
    CHECK_THROWS_WITH_AS(P("z1 + ", r), doctest::Contains("line 1"), Error);
    CHECK_THROWS_WITH_AS(P("z1 ^ z2", r), doctest::Contains("exponent"), Error);
}

TEST_CASE("ring axioms and degree additivity on random polynomials") {
    auto r = zring2();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        PolyQ f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
        CHECK(equal(mul(f, add(g, h)), add(mul(f, g), mul(f, h))));
        CHECK(equal(mul(f, g), mul(g, f)));
        CHECK(equal(add(f, neg(f)), make_zero<GaussianRational>(r)));
        if (!f.is_zero() && !g.is_zero()) {
            CHECK(mul(f, g).lt().m.deg == f.lt().m.deg + g.lt().m.deg); // degrevlex: top degree adds
        }
    }
}

TEST_CASE("star is a coefficient-conjugating involution") {
    auto r = make_ring({"z1", "z2", "w1", "w2"});
    PolyQ f = P("z2 - z1^2", r);
    CHECK(to_string(star(f)) == "-w1^2 + w2");
    PolyQ iz = P("i*z1", r);
    CHECK(to_string(star(iz)) == "-i*w1");

    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        PolyQ a = random_poly(r, rng), b = random_poly(r, rng);
        CHECK(equal(star(star(a)), a));
        CHECK(equal(star(mul(a, b)), mul(star(a), star(b))));
    }

    auto unpaired = make_ring({"z1", "q7"});
    CHECK_THROWS_WITH_AS(star(P("z1 + q7", unpaired)), doctest::Contains("UnpairedVariable"), Error);
}

TEST_CASE("t is self-paired under star") {
    auto r = make_ring({"z1", "w1", "t"});
    PolyQ f = P("i*t^2 + z1*t", r);
    CHECK(to_string(star(f)) == "w1*t - i*t^2");
}

TEST_CASE("jacobian entries") {
    auto r = zring2();
    auto J = jacobian<GaussianRational>({P("z1^2 + z2^2 - 1", r)}, {0, 1});
    CHECK(to_string(J[0][0]) == "2*z1");
    CHECK(to_string(J[0][1]) == "2*z2");
    auto J2 = jacobian<GaussianRational>({P("z2 - z1^2", r)}, {0, 1});
    CHECK(to_string(J2[0][0]) == "-2*z1");
    CHECK(to_string(J2[0][1]) == "1");
    auto J3 = jacobian<GaussianRational>({P("5", r)}, {0, 1});
    CHECK(J3[0][0].is_zero());
    CHECK(J3[0][1].is_zero());
}

TEST_CASE("minors") {
    auto r = make_ring({"z1", "z2", "w1", "w2", "u1", "u2", "v1", "v2"});
    // [[v1-w1, v2-w2], [-2 z1, 1]]
    PolyMatrix<GaussianRational> M{{P("v1 - w1", r), P("v2 - w2", r)}, {P("-2*z1", r), P("1", r)}};
    auto ms = minors(M, 2);
    REQUIRE(ms.size() == 1);
    CHECK(to_string(ms[0]) == to_string(P("(v1 - w1) + 2*z1*(v2 - w2)", r)));

    PolyMatrix<GaussianRational> I2{{P("1", r), P("0", r)}, {P("0", r), P("1", r)}};
    CHECK(to_string(minors(I2, 2)[0]) == "1");

    PolyMatrix<GaussianRational> rep{{P("z1", r), P("z2", r)}, {P("z1", r), P("z2", r)}};
    for (auto& m : minors(rep, 2)) CHECK(m.is_zero());
}

TEST_CASE("evaluation, exact and floating") {
    auto r = zring2();
    PolyQ circ = P("z1^2 + z2^2 - 1", r);
    GaussianRational one(1);
    CHECK(evaluate(circ, {GaussianRational(1), GaussianRational(0)}, one).is_zero());
    CHECK(evaluate(P("z2 - z1^2", r), {GaussianRational(2), GaussianRational(4)}, one).is_zero());
    CHECK(evaluate(circ, {GaussianRational(3), GaussianRational(0)}, one) == GaussianRational(8));

    EvalResult e = evaluate_fp(circ, {{3.0, 0.0}, {0.0, 0.0}});
    CHECK(std::abs(e.value - std::complex<double>(8, 0)) < 1e-12);
    CHECK(e.error_bound < 1e-12);
    CHECK(e.error_bound > 0);
}

TEST_CASE("product rule on random instances") {
    auto r = zring2();
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        PolyQ f = random_poly(r, rng), g = random_poly(r, rng);
        PolyQ lhs = derivative(mul(f, g), 0);
        PolyQ rhs = add(mul(f, derivative(g, 0)), mul(g, derivative(f, 0)));
        CHECK(equal(lhs, rhs));
    }
}

TEST_CASE("exact division") {
    auto r = zring2();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) {
        PolyQ f = random_poly(r, rng), g = random_poly(r, rng);
        if (g.is_zero()) continue;
        auto q = div_exact(mul(f, g), g);
        REQUIRE(q.has_value());
        CHECK(equal(*q, f));
    }
    CHECK(!div_exact(P("z1^2 + 1", r), P("z1 + 2", r)).has_value());
}

TEST_CASE("exponent overflow is caught") {
    auto r = zring2();
    CHECK_THROWS_AS(P("z1^40000", r), Error);
}
