#include "doctest.h"
#include "hermdeg/hermitian.hpp"
#include "hermdeg/numsolve.hpp"

#include <complex>

using namespace hermdeg;
using namespace hermdeg::hermitian;
using coeff::GaussianRational;
using coeff::make_rational;
using ideal::GBRun;
using ideal::IdealQ;
using poly::parse_poly;
using poly::PolyQ;

namespace {

VarietySpec curve(const char* gen, bool homogeneous = false) {
    std::string text = std::string("vars: z1, z2\n") + (homogeneous ? "homogeneous: true\n" : "") + gen + "\n";
    return parse_variety(text, gen);
}

VarietySpec parabola() { return curve("z2 - z1^2"); }
VarietySpec circle() { return curve("z1^2 + z2^2 - 1"); }

} // namespace

TEST_CASE("singular locus ideals") {
    GBRun run;
    // smooth parabola: the 1-minors include the constant 1
    auto Ip = singular_locus_ideal(parabola());
    CHECK(ideal::contains_one(Ip, run));

    // circle: <f, 2 z1, 2 z2> has empty variety
    auto Ic = singular_locus_ideal(circle());
    CHECK(Ic.gens.size() == 3);
    CHECK(ideal::contains_one(Ic, run));

    // V(z1 z2): singular locus is the origin
    auto In = singular_locus_ideal(curve("z1*z2"));
    auto G = ideal::groebner(In, run);
    CHECK(ideal::dimension(G) == 0);
    CHECK(ideal::degree_zero_dim(G) == 1);
}

TEST_CASE("parabola critical system matches the displayed generators") {
    GBRun run;
    IdealQ I = hermitian_critical_ideal(parabola(), QueryPoint::sym(), run);
    auto r = I.ring;
    // the paper displays {z2 - z1^2, w2 - w1^2, z1 - u1 + 2 w1 (z2 - u2),
    // w1 - v1 + 2 z1 (w2 - v2)}; compare as ideals
    IdealQ paper{r, {parse_poly("z2 - z1^2", r), parse_poly("w2 - w1^2", r),
                     parse_poly("z1 - u1 + 2*w1*(z2 - u2)", r), parse_poly("w1 - v1 + 2*z1*(w2 - v2)", r)}};
    CHECK(ideal::ideal_equal(I, paper, run));
}

TEST_CASE("circle critical system matches the displayed generators") {
    GBRun run;
    IdealQ I = hermitian_critical_ideal(circle(), QueryPoint::sym(), run);
    auto r = I.ring;
    IdealQ paper{r, {parse_poly("z1^2 + z2^2 - 1", r), parse_poly("w1^2 + w2^2 - 1", r),
                     parse_poly("w2*(z1 - u1) - w1*(z2 - u2)", r), parse_poly("z2*(w1 - v1) - z1*(w2 - v2)", r)}};
    CHECK(ideal::ideal_equal(I, paper, run));
}

TEST_CASE("critical ideal is star invariant") {
    GBRun run;
    for (auto V : {parabola(), circle()}) {
        IdealQ I = hermitian_critical_ideal(V, QueryPoint::sym(), run);
        auto G = ideal::groebner(I, run);
        for (const auto& g : G.g) CHECK(ideal::normal_form(poly::star(g), G, run).is_zero());
    }
}

TEST_CASE("point on the variety is a critical point of itself") {
    GBRun run;
    // u = (2, 4) lies on the parabola; (u, conj u) solves the specialized system
    QueryPoint q = QueryPoint::hd({GaussianRational(2), GaussianRational(4)});
    IdealQ I = hermitian_critical_ideal(parabola(), q, run);
    GaussianRational one(1);
    std::vector<GaussianRational> point{GaussianRational(2), GaussianRational(4), GaussianRational(2),
                                        GaussianRational(4)};
    for (const auto& g : I.gens) CHECK(poly::evaluate(g, point, one).is_zero());
}

TEST_CASE("smooth curves: saturation does not change the specialized degree") {
    GBRun run;
    for (auto V : {parabola(), circle()}) {
        CriticalSystem S = build_critical_system(V, false);
        QueryPoint q;
        q.u = {GaussianRational(make_rational(1, 3)), GaussianRational(make_rational(-2, 7))};
        q.v = {GaussianRational(make_rational(3, 5)), GaussianRational(make_rational(1, 2))};
        auto I = specialize_critical(S, q);
        auto G_raw = ideal::groebner(I, run);
        IdealQ sat = hermitian_critical_ideal(V, q, run);
        auto G_sat = ideal::groebner(sat, run);
        CHECK(ideal::degree_zero_dim(G_raw) == ideal::degree_zero_dim(G_sat));
    }
}

TEST_CASE("ed critical ideal degrees for the conics") {
    GBRun run;
    auto degree_at = [&](const VarietySpec& V) {
        std::vector<GaussianRational> u{GaussianRational(make_rational(3, 7)), GaussianRational(make_rational(-2, 5))};
        IdealQ I = ed_critical_ideal(V, u, run);
        return ideal::degree_zero_dim(ideal::groebner(I, run));
    };
    CHECK(degree_at(parabola()) == 3);
    CHECK(degree_at(circle()) == 2);
    CHECK(degree_at(curve("z1^2 + 4*z2^2 - 4")) == 4);
    CHECK_THROWS_WITH_AS(ed_critical_ideal(curve("z1^2 + i*z2"), {}, run), doctest::Contains("NotReal"),
                         Error);
}

TEST_CASE("realification") {
    // V(z - c) -> V(x - Re c, y - Im c)
    VarietySpec pt;
    {
        auto r = poly::make_ring({"z1"});
        pt.n = 1;
        pt.zring = r;
        pt.codim = 1;
        pt.generators = {parse_poly("z1 - (2 + 3*i)", r)};
    }
    VarietySpec R = hermitian::realification(pt);
    REQUIRE(R.generators.size() == 2);
    CHECK(poly::to_string(R.generators[0]) == "x1 - 2");
    CHECK(poly::to_string(R.generators[1]) == "y1 - 3");
    CHECK(R.codim == 2);

    VarietySpec Rp = hermitian::realification(parabola());
    REQUIRE(Rp.generators.size() == 2);
    // z2 - z1^2 -> (x2 - x1^2 + y1^2) and (y2 - 2 x1 y1)
    auto r = Rp.zring;
    CHECK(poly::equal(Rp.generators[0], parse_poly("x2 - x1^2 + y1^2", r)));
    CHECK(poly::equal(Rp.generators[1], parse_poly("y2 - 2*x1*y1", r)));
}

TEST_CASE("vHD(parabola) equals ED of its realification") {
    GBRun run;
    VarietySpec Rp = hermitian::realification(parabola());
    std::vector<GaussianRational> u{GaussianRational(make_rational(1, 3)), GaussianRational(make_rational(-2, 7)),
                                    GaussianRational(make_rational(2, 5)), GaussianRational(make_rational(5, 4))};
    IdealQ I = ed_critical_ideal(Rp, u, run);
    CHECK(ideal::degree_zero_dim(ideal::groebner(I, run)) == 5);
}

TEST_CASE("conormal and dual varieties") {
    GBRun run;
    VarietySpec quad = parse_variety("vars: z1, z2, z3\nhomogeneous: true\nz1^2 + z2^2 - z3^2\n", "quadric");

    SUBCASE("fermat quadric is self-dual") {
        VarietySpec dual = dual_variety(quad, run);
        REQUIRE(dual.generators.size() == 1);
        CHECK(poly::to_string(dual.generators[0]) == "z1^2 + z2^2 - z3^2");
    }

    SUBCASE("dual of a hyperplane through 0 is a projective point") {
        VarietySpec hyp = parse_variety("vars: z1, z2, z3\nhomogeneous: true\n2*z1 + 3*z2 - z3\n", "hyp");
        VarietySpec dual = dual_variety(hyp, run);
        // the line spanned by (2, 3, -1)
        auto G = ideal::groebner(IdealQ{dual.zring, dual.generators}, run);
        CHECK(ideal::dimension(G) == 1); // a line through the origin = projective point
        GaussianRational one(1);
        std::vector<GaussianRational> pt2{GaussianRational(2), GaussianRational(3), GaussianRational(-1)};
        for (const auto& g : dual.generators) CHECK(poly::evaluate(g, pt2, one).is_zero());
    }

    SUBCASE("biduality on a conic") {
        VarietySpec conic =
            parse_variety("vars: z1, z2, z3\nhomogeneous: true\nz1^2 + 2*z2^2 + 3*z3^2\n", "conic");
        VarietySpec dd = dual_variety(dual_variety(conic, run), run);
        REQUIRE(dd.generators.size() == 1);
        GBRun run2;
        CHECK(ideal::ideal_equal(IdealQ{conic.zring, conic.generators},
                                 IdealQ{dd.zring, dd.generators}, run2));
    }
}

TEST_CASE("parametrized critical system") {
    VarietySpec par = parabola();
    // attach psi(t) = (t, t^2)
    par.pring = poly::make_ring({"t1"});
    par.parametrization = {parse_poly("t1", par.pring), parse_poly("t1^2", par.pring)};

    SUBCASE("symbolic gradient system matches the paper") {
        ParametrizedSystem S = parametrized_critical_system(par, QueryPoint::sym());
        REQUIRE(S.equations.size() == 2);
        auto r = S.ring;
        // d/dz D = (z - u1) + 2 w (z^2 - u2), d/dw D = (w - v1) + 2 z (w^2 - v2)
        CHECK(poly::equal(S.equations[0], parse_poly("(z1 - u1) + 2*w1*(z1^2 - u2)", r)));
        CHECK(poly::equal(S.equations[1], parse_poly("(w1 - v1) + 2*z1*(w1^2 - v2)", r)));
    }

    SUBCASE("line psi(t) = (t, a t + b) has the closed-form critical point") {
        VarietySpec line;
        line.n = 2;
        line.zring = poly::make_ring({"z1", "z2"});
        line.generators = {parse_poly("z2 - 2*z1 - 3", line.zring)};
        line.codim = 1;
        line.pring = poly::make_ring({"t1"});
        line.parametrization = {parse_poly("t1", line.pring), parse_poly("2*t1 + 3", line.pring)};
        QueryPoint q =
            QueryPoint::hd({GaussianRational(make_rational(7, 2)), GaussianRational(make_rational(-1, 3))});
        ParametrizedSystem S = parametrized_critical_system(line, q);
        REQUIRE(S.equations.size() == 2);
        // unique critical point: z = (u2 - b - a u1) a / (1 + a^2) + u1 with a = 2, b = 3
        GaussianRational u1 = q.u[0], u2 = q.u[1];
        GaussianRational a(2), b(3), five(5);
        GaussianRational z = (u2 - b - a * u1) * a / five + u1;
        GaussianRational w = coeff::conj(z);
        GaussianRational one(1);
        for (const auto& g : S.equations) CHECK(poly::evaluate(g, {z, w}, one).is_zero());
    }

    SUBCASE("missing parametrization errors") {
        CHECK_THROWS_WITH_AS(parametrized_critical_system(circle(), QueryPoint::sym()),
                             doctest::Contains("NoParametrization"), Error);
    }
}

TEST_CASE("perpendicularity certificate at numeric critical points") {
    // solutions with w = conj z at v = conj u satisfy <u - z, tau>_C = 0 for
    // the tangent tau = (1, 2 z1) of the parabola
    GBRun run;
    QueryPoint q = QueryPoint::hd({GaussianRational(make_rational(1, 4)), GaussianRational(2)});
    IdealQ I = hermitian_critical_ideal(parabola(), q, run);
    numsolve::SolveOptions opts;
    auto rep = numsolve::solve_zero_dim(I, I.gens, opts, run);
    CHECK(rep.total_with_multiplicity == 5);
    std::complex<double> u1 = q.u[0].to_complex(), u2 = q.u[1].to_complex();
    int singles = 0;
    for (const auto& r : rep.roots) {
        std::complex<double> z1 = r.x[0], z2 = r.x[1], w1 = r.x[2], w2 = r.x[3];
        if (std::abs(w1 - std::conj(z1)) > 1e-8 || std::abs(w2 - std::conj(z2)) > 1e-8) continue;
        ++singles;
        std::complex<double> pairing = (u1 - z1) + (u2 - z2) * std::conj(2.0 * z1);
        CHECK(std::abs(pairing) < 1e-8);
    }
    CHECK(singles >= 1);
}
