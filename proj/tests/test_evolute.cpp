#include "doctest.h"
#include "hermdeg/evolute.hpp"
#include "hermdeg/parser.hpp"

using namespace hermdeg;
using namespace hermdeg::evolute;
using coeff::GaussianRational;
using coeff::make_rational;
using ideal::GBRun;
using poly::parse_poly;
using poly::PolyQ;

namespace {

PlaneCurve curve(const char* gen) {
    return plane_curve(parse_variety(std::string("vars: z1, z2\n") + gen + "\n", gen));
}

bool same_up_to_scalar(const PolyQ& a, const char* expected) {
    PolyQ e = poly::primitive_part(parse_poly(expected, a.ring));
    return poly::equal(poly::primitive_part(a), e);
}

} // namespace

TEST_CASE("evolute golden polynomials") {
    GBRun run;
    SUBCASE("parabola") {
        auto D = evolute_poly(curve("z2 - z1^2"), run);
        CHECK(same_up_to_scalar(D.poly, "2*(2*u2 - 1)^3 - 27*u1^2"));
    }
    SUBCASE("circle: degenerates to the center") {
        auto D = evolute_poly(curve("z1^2 + z2^2 - 1"), run);
        CHECK(same_up_to_scalar(D.poly, "u1^2 + u2^2"));
    }
    SUBCASE("line has an empty evolute") {
        auto I = evolute_ideal(curve("z2 - 3*z1 - 1"), run);
        GBRun run2;
        CHECK(ideal::contains_one(I, run2));
        auto D = evolute_poly(curve("z2 - 3*z1 - 1"), run);
        CHECK(D.poly.is_constant());
    }
    SUBCASE("ellipse") {
        auto D = evolute_poly(curve("z1^2 + 4*z2^2 - 4"), run);
        CHECK(same_up_to_scalar(D.poly, "(4*u1^2 + u2^2 - 9)^3 + 972*u1^2*u2^2"));
    }
}

TEST_CASE("outward evolute golden polynomials") {
    GBRun run;
    SUBCASE("parabola") {
        auto D = outward_evolute_poly(curve("z2 - z1^2"), run);
        CHECK(same_up_to_scalar(D.poly, "8*u2^2*(2*u2 + 1) + u1^2"));
    }
    SUBCASE("circle") {
        auto D = outward_evolute_poly(curve("z1^2 + z2^2 - 1"), run);
        CHECK(same_up_to_scalar(D.poly, "u1^2 + u2^2 - 4"));
    }
    SUBCASE("ellipse") {
        auto D = outward_evolute_poly(curve("z1^2 + 4*z2^2 - 4"), run);
        CHECK(same_up_to_scalar(
            D.poly,
            "(4*u1^2 + u2^2)^3 - 880*u1^4 - 236*u1^2*u2^2 + 5*u2^4 + 3900*u1^2 - 525*u2^2 - 5625"));
    }
}

TEST_CASE("complex evolute real locus factors as evolute times outward cubed") {
    GBRun run;
    SUBCASE("parabola") {
        auto D = complex_evolute_poly(curve("z2 - z1^2"), true, run);
        CHECK(same_up_to_scalar(D.poly, "(2*(2*u2 - 1)^3 - 27*u1^2)*(8*u2^2*(2*u2 + 1) + u1^2)^3"));
        // recover the factors by exact division
        GBRun run2;
        auto ev = evolute_poly(curve("z2 - z1^2"), run2);
        auto ow = outward_evolute_poly(curve("z2 - z1^2"), run2);
        PolyQ rest = poly::primitive_part(D.poly);
        auto q1 = poly::div_exact(rest, poly::primitive_part(ev.poly));
        REQUIRE(q1.has_value());
        PolyQ cube = *q1;
        for (int k = 0; k < 3; ++k) {
            auto qk = poly::div_exact(cube, poly::primitive_part(ow.poly));
            REQUIRE(qk.has_value());
            cube = *qk;
        }
        CHECK(cube.is_constant());
    }
    SUBCASE("circle") {
        auto D = complex_evolute_poly(curve("z1^2 + z2^2 - 1"), true, run);
        CHECK(same_up_to_scalar(D.poly, "(u1^2 + u2^2)*(u1^2 + u2^2 - 4)^3"));
    }
}

TEST_CASE("rational function arithmetic") {
    auto r = poly::make_ring({"t"});
    RatFun t = ratfun(parse_poly("t", r));
    RatFun one = ratfun(parse_poly("1", r));
    RatFun f = rf_div(one, rf_add(t, one));              // 1/(t+1)
    RatFun g = rf_div(t, rf_add(rf_mul(t, t), one));     // t/(t^2+1)
    CHECK(rf_equal(rf_add(f, g), parse_ratfun("(t^2 + t^2*t + t + 1 + t)/((t+1)*(t^2+1))", r)));
    CHECK(rf_is_zero(rf_sub(f, f)));
    // d/dt 1/(t+1) = -1/(t+1)^2
    CHECK(rf_equal(rf_derivative(f), parse_ratfun("(-1)/((t+1)^2)", r)));
    CHECK(rf_eval(g, GaussianRational(2)) == GaussianRational(make_rational(2, 5)));
    // reduction: (t^2-1)/(t-1) = t+1
    RatFun red = ratfun(parse_poly("t^2 - 1", r), parse_poly("t - 1", r));
    CHECK(red.den.is_constant());
    CHECK(poly::equal(red.num, parse_poly("t + 1", r)));
}

TEST_CASE("parametric evolute of the parabola") {
    auto r = poly::make_ring({"t"});
    std::pair<RatFun, RatFun> psi{ratfun(parse_poly("t", r)), ratfun(parse_poly("t^2", r))};
    auto E = parametric_evolute(psi);
    CHECK(rf_equal(E.first, ratfun(parse_poly("-4*t^3", r))));
    CHECK(rf_equal(E.second, parse_ratfun("(3*t^2 + 1/2)/(1)", r)));

    // sampled points satisfy the implicit evolute polynomial exactly
    GBRun run;
    auto D = evolute_poly(curve("z2 - z1^2"), run);
    for (long k = -3; k <= 3; ++k) {
        GaussianRational t0(make_rational(k, 2));
        GaussianRational x = rf_eval(E.first, t0), y = rf_eval(E.second, t0);
        CHECK(poly::evaluate(D.poly, {x, y}, GaussianRational(1)).is_zero());
    }

    // tangency: <psi', (psi^E)'> = 0 as rational functions
    RatFun p1 = rf_derivative(psi.first), p2 = rf_derivative(psi.second);
    RatFun e1 = rf_derivative(E.first), e2 = rf_derivative(E.second);
    CHECK(rf_is_zero(rf_add(rf_mul(p1, e1), rf_mul(p2, e2))));

    // outward identity: <psi', (psi~)'> = 2 |psi'|^2
    auto O = parametric_outward(psi);
    RatFun o1 = rf_derivative(O.first), o2 = rf_derivative(O.second);
    RatFun lhs = rf_add(rf_mul(p1, o1), rf_mul(p2, o2));
    RatFun speed2 = rf_add(rf_mul(p1, p1), rf_mul(p2, p2));
    CHECK(rf_equal(lhs, rf_add(speed2, speed2)));
}

TEST_CASE("parametric evolute of the circle collapses to the center") {
    auto r = poly::make_ring({"t"});
    // rational parametrization ((1 - t^2)/(1 + t^2), 2t/(1 + t^2))
    RatFun x = parse_ratfun("(1 - t^2)/(1 + t^2)", r);
    RatFun y = parse_ratfun("(2*t)/(1 + t^2)", r);
    auto E = parametric_evolute({x, y});
    CHECK(rf_is_zero(E.first));
    CHECK(rf_is_zero(E.second));
}

TEST_CASE("zero curvature is rejected") {
    auto r = poly::make_ring({"t"});
    std::pair<RatFun, RatFun> line{ratfun(parse_poly("t", r)), ratfun(parse_poly("2*t + 1", r))};
    CHECK_THROWS_WITH_AS(parametric_evolute(line), doctest::Contains("ZeroCurvature"), Error);
}
