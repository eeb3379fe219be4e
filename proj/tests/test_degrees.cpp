#include "doctest.h"
#include "hermdeg/degrees.hpp"

using namespace hermdeg;
using namespace hermdeg::degrees;
using coeff::GaussianRational;
using coeff::make_rational;

namespace {

VarietySpec V(const char* text, const char* name = "") { return parse_variety(text, name); }

Config fast_cfg() {
    Config c;
    c.trials = 2;
    return c;
}

GaussianRational Q(long a, long b = 1) { return GaussianRational(make_rational(a, b)); }

} // namespace

TEST_CASE("vhd golden values") {
    Config cfg = fast_cfg();
    CHECK(vhd(V("vars: z1, z2\nz2 - z1^2\n"), cfg).vhd == 5);
    CHECK(vhd(V("vars: z1, z2\nz1^2 + z2^2 - 1\n"), cfg).vhd == 6);
    CHECK(vhd(V("vars: z1, z2\nz1^3 + z2^3 - 1\n"), cfg).vhd == 45);
}

TEST_CASE("vhd consensus across primes and points") {
    Config cfg;
    cfg.trials = 3;
    auto rep = vhd(V("vars: z1, z2\nz2 - z1^2\n"), cfg);
    CHECK(rep.consensus);
    CHECK(rep.trials.size() == 3);
    CHECK(rep.trials[0].prime != rep.trials[1].prime);
}

TEST_CASE("parametrized route") {
    Config cfg = fast_cfg();
    auto rep = vhd(V("vars: z1, z2\nparams: t1\nparam: t1\nparam: t1^2\nz2 - z1^2\n"), cfg,
                   Route::Parametrized);
    CHECK(rep.vhd == 5);
    CHECK(rep.route == Route::Parametrized);
}

TEST_CASE("hd_sample on the circle") {
    Config cfg;
    SUBCASE("outside the outward evolute: 4 critical points") {
        auto s = hd_sample(V("vars: z1, z2\nz1^2 + z2^2 - 1\n"), {Q(3), Q(0)}, cfg);
        CHECK(s.count == 4);
        CHECK(s.paired == 1);
        CHECK(s.total_with_multiplicity == 6);
        REQUIRE(s.distances_sq.size() == 4);
        // brute-force oracle values: {3.5, 3.5, 4, 16}
        CHECK(s.distances_sq[0] == doctest::Approx(3.5).epsilon(1e-9));
        CHECK(s.distances_sq[1] == doctest::Approx(3.5).epsilon(1e-9));
        CHECK(s.distances_sq[2] == doctest::Approx(4.0).epsilon(1e-9));
        CHECK(s.distances_sq[3] == doctest::Approx(16.0).epsilon(1e-9));
    }
    SUBCASE("inside: 2 critical points") {
        auto s = hd_sample(V("vars: z1, z2\nz1^2 + z2^2 - 1\n"), {Q(1, 2), Q(0)}, cfg);
        CHECK(s.count == 2);
        std::vector<double> expect{0.25, 2.25};
        REQUIRE(s.distances_sq.size() == 2);
        CHECK(s.distances_sq[0] == doctest::Approx(expect[0]).epsilon(1e-9));
        CHECK(s.distances_sq[1] == doctest::Approx(expect[1]).epsilon(1e-9));
    }
    SUBCASE("center is degenerate but a nudge rescues it") {
        auto s = hd_sample(V("vars: z1, z2\nz1^2 + z2^2 - 1\n"), {Q(0), Q(0)}, cfg);
        CHECK(s.nudged);
        CHECK(s.count == 2);
    }
}

TEST_CASE("hd_sample on the parabola (oracle-checked counts)") {
    Config cfg;
    auto P = V("vars: z1, z2\nz2 - z1^2\n");
    // counts from the brute-force parametrized oracle: 3 inside the evolute
    // cusp, 3 inside the outward loop, 1 in the middle band
    CHECK(hd_sample(P, {Q(0), Q(1)}, cfg).count == 3);
    CHECK(hd_sample(P, {Q(0), Q(-1)}, cfg).count == 3);
    CHECK(hd_sample(P, {Q(0), Q(-2, 5)}, cfg).count == 1);
    CHECK(hd_sample(P, {Q(1), Q(1, 5)}, cfg).count == 1);
    // parity: counts match vHD = 5 mod 2
    for (auto& u2 : {Q(1), Q(-1), Q(-2, 5)}) CHECK(hd_sample(P, {Q(0), u2}, cfg).count % 2 == 1);
}

TEST_CASE("hd_sample invariances: translation, scaling, rotation") {
    Config cfg;
    auto circle = V("vars: z1, z2\nz1^2 + z2^2 - 1\n");
    auto base = hd_sample(circle, {Q(3), Q(0)}, cfg);

    SUBCASE("translation") {
        std::vector<GaussianRational> b{Q(1), Q(-2)};
        VarietySpec moved = scale_translate(circle, Q(1), b);
        auto s = hd_sample(moved, {Q(3) + b[0], Q(0) + b[1]}, cfg);
        CHECK(s.count == base.count);
        REQUIRE(s.distances_sq.size() == base.distances_sq.size());
        for (size_t i = 0; i < s.distances_sq.size(); ++i)
            CHECK(s.distances_sq[i] == doctest::Approx(base.distances_sq[i]).epsilon(1e-8));
    }
    SUBCASE("scaling doubles distances squared by |c|^2") {
        VarietySpec scaled = scale_translate(circle, Q(2), {Q(0), Q(0)});
        auto s = hd_sample(scaled, {Q(6), Q(0)}, cfg);
        CHECK(s.count == base.count);
        REQUIRE(s.distances_sq.size() == base.distances_sq.size());
        for (size_t i = 0; i < s.distances_sq.size(); ++i)
            CHECK(s.distances_sq[i] == doctest::Approx(4.0 * base.distances_sq[i]).epsilon(1e-8));
    }
    SUBCASE("rotation by the rational point (3/5, 4/5) on the unit circle") {
        // the circle is invariant; rotate u = (3, 0)
        auto s = hd_sample(circle, {Q(9, 5), Q(12, 5)}, cfg);
        CHECK(s.count == base.count);
        REQUIRE(s.distances_sq.size() == base.distances_sq.size());
        for (size_t i = 0; i < s.distances_sq.size(); ++i)
            CHECK(s.distances_sq[i] == doctest::Approx(base.distances_sq[i]).epsilon(1e-8));
    }
}

TEST_CASE("numeric multiplicity total matches the exact ideal degree at samples") {
    Config cfg;
    auto P = V("vars: z1, z2\nz2 - z1^2\n");
    auto C = V("vars: z1, z2\nz1^2 + z2^2 - 1\n");
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 5; ++k) {
        GaussianRational u1 = Q(long(rng() % 13) - 6, long(rng() % 4) + 1);
        GaussianRational u2 = Q(long(rng() % 13) - 6, long(rng() % 4) + 1);
        CHECK(hd_sample(P, {u1, u2}, cfg).total_with_multiplicity == 5);
        CHECK(hd_sample(C, {u1, u2}, cfg).total_with_multiplicity == 6);
    }
}

TEST_CASE("hd_scan on a coarse circle window") {
    Config cfg;
    cfg.jobs = 4;
    auto g = hd_scan(V("vars: z1, z2\nz1^2 + z2^2 - 1\n"), make_rational(-3, 1), make_rational(3, 1),
                     make_rational(-3, 1), make_rational(3, 1), make_rational(3, 4), cfg);
    CHECK(g.xs.size() == 9);
    CHECK(g.ys.size() == 9);
    bool saw2 = false, saw4 = false;
    for (int c : g.counts) {
        if (c < 0) continue; // points on the curve / discriminant may stay degenerate
        CHECK((c == 2 || c == 4));
        saw2 = saw2 || c == 2;
        saw4 = saw4 || c == 4;
    }
    CHECK(saw2);
    CHECK(saw4);
    std::string csv = scan_to_csv(g);
    CHECK(csv.substr(0, 12) == "x,y,count\n-3");
}

TEST_CASE("hypersurface bounds reproduce Table 1") {
    // 32 entries, d = 2..5, n = 1..8
    const int64_t table[4][8] = {
        {4, 8, 24, 80, 180, 264, 364, 480},
        {9, 45, 297, 2205, 17289, 139725, 884745, 4128777},
        {16, 160, 1888, 24640, 340576, 4868800, 71097280, 1053289600},
        {25, 425, 8025, 163625, 3513625, 78064425, 1774203225, 40958848425},
    };
    for (int d = 2; d <= 5; ++d)
        for (int n = 1; n <= 8; ++n) {
            auto b = bound_hypersurface(d, n);
            CHECK(b.final == coeff::Int(table[d - 2][n - 1]));
            CHECK(b.final == std::min(b.bezout, b.bkk));
        }
    // underlined entries: minimum attained strictly by the right-hand
    // (Bezout-type) formula
    std::set<std::pair<int, int>> underlined{{2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 7}, {3, 8}};
    for (int d = 2; d <= 5; ++d)
        for (int n = 1; n <= 8; ++n)
            CHECK(bound_hypersurface(d, n).bezout_attains_min == (underlined.count({d, n}) > 0));
    // hatted (sharp) entries are the n = 1, 2 columns; sharpness itself is
    // exercised against computed vHD values in the acceptance suite
    CHECK(bound_hypersurface(3, 2).final == 45);
    CHECK(bound_hypersurface(2, 5).final == 180);
    CHECK(bound_hypersurface(1, 4).bezout == 1);
    CHECK(bound_hypersurface(1, 4).bkk == 1);
}

TEST_CASE("parametrized bounds reproduce Table 2 and the row formulas") {
    const int64_t table[3][4] = {{5, 13, 25, 41}, {33, 241, 913, 2481}, {245, 5005, 37225, 167321}};
    for (int m = 1; m <= 3; ++m)
        for (int d = 2; d <= 5; ++d) CHECK(bound_parametrized(d, m).bkk == coeff::Int(table[m - 1][d - 2]));
    for (int d = 1; d <= 8; ++d) {
        int64_t dd = d;
        CHECK(bound_parametrized(d, 1).bkk == coeff::Int(2 * dd * dd - 2 * dd + 1));
        CHECK(bound_parametrized(d, 2).bkk ==
              coeff::Int(6 * dd * dd * dd * dd - 12 * dd * dd * dd + 10 * dd * dd - 4 * dd + 1));
        CHECK(bound_parametrized(d, 3).bkk ==
              coeff::Int(((((20 * dd - 60) * dd + 78) * dd - 56) * dd + 24) * dd * dd - 6 * dd + 1));
    }
    for (int d = 1; d <= 8; ++d)
        for (int m = 1; m <= 8; ++m) {
            auto b = bound_parametrized(d, m);
            CHECK(b.bkk <= b.bezout);
        }
}

TEST_CASE("vhd never exceeds the closed-form bound and dominates ED") {
    Config cfg = fast_cfg();
    struct Case {
        const char* text;
        int d, n;
    };
    for (auto c : {Case{"vars: z1, z2\nz2 - z1^2\n", 2, 2}, Case{"vars: z1, z2\nz1^2 + z2^2 - 1\n", 2, 2},
                   Case{"vars: z1, z2\nz1^3 + z2^3 - 1\n", 3, 2}}) {
        auto rep = vhd(V(c.text), cfg);
        auto b = bound_hypersurface(c.d, c.n);
        CHECK(coeff::Int(rep.vhd) <= b.final);
        auto ed = ed_degree(V(c.text), cfg);
        CHECK(rep.vhd >= ed.vhd);
    }
}

TEST_CASE("ed degrees for the conics") {
    Config cfg = fast_cfg();
    CHECK(ed_degree(V("vars: z1, z2\nz2 - z1^2\n"), cfg).vhd == 3);
    CHECK(ed_degree(V("vars: z1, z2\nz1^2 + z2^2 - 1\n"), cfg).vhd == 2);
    CHECK(ed_degree(V("vars: z1, z2\nz1^2 + 4*z2^2 - 4\n"), cfg).vhd == 4);
}

TEST_CASE("product utilities") {
    CHECK(product_vhd(5, 5) == 25);
    CHECK(product_vhd(7, 1) == 7);
    std::set<int64_t> a{1, 3}, b{1, 3}, c{2, 4}, d{1};
    CHECK(product_hd(a, b) == std::set<int64_t>{1, 3, 9});
    CHECK(product_hd(c, a) == std::set<int64_t>{2, 4, 6, 12});
    CHECK(product_hd(c, d) == c);
}

TEST_CASE("product variety vhd multiplies (parabola x parabola)") {
    Config cfg;
    cfg.trials = 2;
    auto P = V("vars: z1, z2\nz2 - z1^2\n", "parabola");
    VarietySpec PP = product_variety(P, P);
    CHECK(PP.n == 4);
    CHECK(PP.codim == 2);
    auto rep = vhd(PP, cfg);
    CHECK(rep.vhd == 25);
}
