#include "doctest.h"
#include "hermdeg/ideal.hpp"
#include "hermdeg/parser.hpp"

#include <random>

using namespace hermdeg;
using namespace hermdeg::ideal;
using coeff::Fp;
using coeff::GaussianRational;
using coeff::Rational;
using poly::make_ring;
using poly::MonomialOrder;
using poly::parse_poly;
using poly::PolyQ;
using poly::RingPtr;

namespace {

IdealQ ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
    IdealQ I{r, {}};
    for (const char* g : gens) I.gens.push_back(parse_poly(g, r));
    return I;
}

} // namespace

TEST_CASE("buchberger basics") {
    auto r = make_ring({"z1", "z2"});
    GBRun run;
    auto G1 = groebner(ideal_of(r, {"z1", "z1"}), run);
    REQUIRE(G1.g.size() == 1);
    CHECK(poly::to_string(G1.g[0]) == "z1");

    auto G2 = groebner(ideal_of(r, {"z2 - z1^2", "z1"}), MonomialOrder::lex(), run);
    REQUIRE(G2.g.size() == 2);
    CHECK(poly::to_string(G2.g[0]) == "z2");
    CHECK(poly::to_string(G2.g[1]) == "z1");
}

TEST_CASE("buchberger over F_13") {
    uint32_t p = 13;
    auto r = make_ring({"x", "y"}, poly::FieldTag::PrimeField, MonomialOrder::degrevlex(), p);
    Ideal<Fp> I{r, {}};
    // x + y and x - y
    poly::Mono mx, my;
    mx.bump(0);
    my.bump(1);
    I.gens = {poly::PolyP{r, {{Fp{1, p}, mx}, {Fp{1, p}, my}}},
              poly::PolyP{r, {{Fp{1, p}, mx}, {Fp{12, p}, my}}}};
    GBRun run;
    auto G = groebner(I, run);
    REQUIRE(G.g.size() == 2);
    CHECK(G.g[0].lt().m == my);
    CHECK(G.g[1].lt().m == mx);
}

TEST_CASE("S-polynomials of a reduced basis reduce to zero") {
    auto r = make_ring({"z1", "z2", "z3"});
    GBRun run;
    auto I = ideal_of(r, {"z1^2*z2 - z3", "z1*z3 - 2*z2", "z2^2 - 3*z3"});
    auto G = groebner(I, run);
    int n = r->nvars();
    for (size_t i = 0; i < G.g.size(); ++i)
        for (size_t j = i + 1; j < G.g.size(); ++j) {
            auto lcm = poly::mono_lcm(G.g[i].lt().m, G.g[j].lt().m, n);
            PolyQ s = poly::sub(poly::mul_term(G.g[i], coeff::inv(G.g[i].lt().c), poly::mono_div(lcm, G.g[i].lt().m, n)),
                                poly::mul_term(G.g[j], coeff::inv(G.g[j].lt().c), poly::mono_div(lcm, G.g[j].lt().m, n)));
            CHECK(normal_form(s, G, run).is_zero());
        }
    // membership: every generator reduces to zero
    for (const auto& g : I.gens) CHECK(normal_form(g, G, run).is_zero());
}

TEST_CASE("normal form") {
    auto r = make_ring({"z1", "z2"});
    GBRun run;
    auto G = groebner(ideal_of(r, {"z1"}), run);
    CHECK(normal_form(parse_poly("z1^2", r), G, run).is_zero());
    CHECK(poly::to_string(normal_form(parse_poly("z2", r), G, run)) == "z2");
}

TEST_CASE("normal form is independent of generator order") {
    auto r = make_ring({"z1", "z2", "z3"});
    GBRun run;
    auto I = ideal_of(r, {"z1^2 - z2", "z2^2 - z3", "z1*z2 - z3"});
    auto G = groebner(I, run);
    auto G_rev = G;
    std::reverse(G_rev.g.begin(), G_rev.g.end());
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        poly::Mono m;
        for (int i = 0; i < 3; ++i) m.bump(i, uint32_t(rng() % 4));
        PolyQ f{r, {{GaussianRational(long(rng() % 9) + 1), m}}};
        CHECK(poly::equal(normal_form(f, G, run), normal_form(f, G_rev, run)));
    }
}

TEST_CASE("elimination") {
    auto r = make_ring({"z", "u", "v"});
    GBRun run;
    auto E1 = eliminate(ideal_of(r, {"z - u"}), {0}, run);
    CHECK(E1.gens.empty()); // trivial ideal

    auto E2 = eliminate(ideal_of(r, {"z - u", "z - v"}), {0}, run);
    REQUIRE(E2.gens.size() == 1);
    CHECK(poly::to_string(E2.gens[0]) == "u - v");
}

TEST_CASE("parabola ED eliminant has degree 3 in T at generic real u") {
    // ED critical ideal of the parabola plus T - |u - z|^2, z eliminated
    auto r = make_ring({"z1", "z2", "T"});
    GBRun run;
    // u = (3/7, -2/5)
    const char* f = "z2 - z1^2";
    const char* g = "(3/7 - z1) + 2*z1*(-2/5 - z2)"; // minor of [u - z; J(f)] up to sign
    std::string dist = "T - ((3/7 - z1)^2 + (-2/5 - z2)^2)";
    IdealQ I{r, {parse_poly(f, r), parse_poly(g, r), parse_poly(dist, r)}};
    auto E = eliminate(I, {0, 1}, run);
    REQUIRE(E.gens.size() == 1);
    CHECK(poly::degree_in(E.gens[0], 0) == 3); // ED(parabola) = 3
}

TEST_CASE("saturation") {
    auto r = make_ring({"z1", "z2"});
    GBRun run;
    auto S1 = saturate(ideal_of(r, {"z1*z2"}), parse_poly("z1", r), run);
    REQUIRE(S1.gens.size() == 1);
    CHECK(poly::to_string(S1.gens[0]) == "z2");

    auto S2 = saturate(ideal_of(r, {"z1^2"}), parse_poly("z1", r), run);
    REQUIRE(S2.gens.size() == 1);
    CHECK(poly::to_string(S2.gens[0]) == "1");

    auto I = ideal_of(r, {"z1^2 + z2^2 - 1", "z1*z2"});
    auto S3 = saturate(I, parse_poly("1", r), run);
    CHECK(ideal_equal(S3, I, run));
}

TEST_CASE("saturation is idempotent") {
    auto r = make_ring({"z1", "z2"});
    GBRun run;
    auto I = ideal_of(r, {"z1^2*z2 - z1*z2^2"});
    PolyQ g = parse_poly("z1", r);
    auto S1 = saturate(I, g, run);
    auto S2 = saturate(S1, g, run);
    CHECK(ideal_equal(S1, S2, run));
}

TEST_CASE("saturation by an ideal") {
    auto r = make_ring({"z1", "z2", "z3"});
    GBRun run;
    auto I = ideal_of(r, {"z1*z2", "z1*z3"});
    auto S = saturate_by_ideal(I, ideal_of(r, {"z1"}), run);
    auto expect = ideal_of(r, {"z2", "z3"});
    CHECK(ideal_equal(S, expect, run));

    auto S2 = saturate_by_ideal(I, ideal_of(r, {"1"}), run);
    CHECK(ideal_equal(S2, I, run));

    // components in V(z1) survive saturation by <z1, z2> but not by z1*z2
    auto J = ideal_of(r, {"z1*z2"});
    auto S3 = saturate_by_ideal(J, ideal_of(r, {"z1", "z2"}), run);
    CHECK(ideal_equal(S3, J, run));
}

TEST_CASE("fast saturation agrees with the exact route") {
    auto r = make_ring({"z1", "z2", "z3"});
    GBOptions fast;
    fast.fast_saturate = true;
    GBRun run_fast(fast), run;
    auto I = ideal_of(r, {"z1*z2", "z1*z3"});
    auto a = saturate_by_ideal(I, ideal_of(r, {"z2", "z3"}), run_fast);
    auto b = saturate_by_ideal(I, ideal_of(r, {"z2", "z3"}), run);
    CHECK(ideal_equal(a, b, run));
}

TEST_CASE("dimension") {
    auto r = make_ring({"z1", "z2"});
    GBRun run;
    CHECK(dimension(groebner(ideal_of(r, {"z1", "z2"}), run)) == 0);
    CHECK(dimension(groebner(ideal_of(r, {"z2 - z1^2"}), run)) == 1);
    CHECK(dimension(groebner(ideal_of(r, {"1"}), run)) == -1);
}

TEST_CASE("degree of zero-dimensional ideals") {
    auto r = make_ring({"z1", "z2"});
    GBRun run;
    CHECK(degree_zero_dim(groebner(ideal_of(r, {"z1^2 - 1", "z2 - 1"}), run)) == 2);
    CHECK_THROWS_WITH_AS(degree_zero_dim(groebner(ideal_of(r, {"z2 - z1^2"}), run)),
                         doctest::Contains("NotZeroDimensional"), Error);
}

TEST_CASE("degree is invariant under the monomial order") {
    auto r = make_ring({"z1", "z2"});
    GBRun run;
    auto I = ideal_of(r, {"z1^3 - z2", "z2^2 - 2*z1"});
    auto Gd = groebner(I, MonomialOrder::degrevlex(), run);
    auto Gl = groebner(I, MonomialOrder::lex(), run);
    CHECK(degree_zero_dim(Gd) == degree_zero_dim(Gl));
}

TEST_CASE("elimination commutes with specialization of kept variables") {
    // one-way containment always holds; equality on this instance
    auto r = make_ring({"z", "u1", "u2"});
    GBRun run;
    auto I = ideal_of(r, {"z^2 - u1", "z*u2 - 1 - u1"});
    auto E = eliminate(I, {0}, run); // ideal in (u1, u2)
    // specialize u2 = 3 afterwards
    auto ru = make_ring({"u1", "u2"});
    std::vector<std::optional<GaussianRational>> vals(2);
    vals[1] = GaussianRational(3);
    auto ru1 = make_ring({"u1"});
    IdealQ after{ru1, {}};
    for (const auto& g : E.gens) {
        PolyQ s = poly::substitute_values(g, vals);
        if (!s.is_zero()) after.gens.push_back(poly::map_vars(s, ru1, {0, -1}));
    }
    // specialize first, then eliminate
    auto r2 = make_ring({"z", "u1"});
    auto I2 = ideal_of(r2, {"z^2 - u1", "3*z - 1 - u1"});
    auto E2 = eliminate(I2, {0}, run);
    CHECK(ideal_equal(after, E2, run));
}

TEST_CASE("budget exceeds loudly") {
    auto r = make_ring({"z1", "z2", "z3"});
    GBOptions tiny;
    tiny.budget = 3;
    GBRun run(tiny);
    auto I = ideal_of(r, {"z1^4*z2 - z3^2", "z1*z3^3 - z2^2", "z2^3 - z1*z3"});
    CHECK_THROWS_WITH_AS(groebner(I, run), doctest::Contains("BudgetExceeded"), Error);
}
