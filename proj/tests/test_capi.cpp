#include "doctest.h"
#include "hermdeg.h"

#include <string>

namespace {

struct Session {
    hermdeg_session* s = hermdeg_session_create();
    ~Session() { hermdeg_session_destroy(s); }
};

struct String {
    char* p = nullptr;
    ~String() { hermdeg_free(p); }
    std::string str() const { return p ? p : ""; }
};

const char* kParabola = "vars: z1, z2\nz2 - z1^2\n";

} // namespace

TEST_CASE("c api: variety lifecycle and vhd") {
    Session s;
    hermdeg_variety* v = nullptr;
    REQUIRE(hermdeg_variety_parse(s.s, kParabola, &v) == HERMDEG_OK);
    REQUIRE(hermdeg_session_set(s.s, "trials", "2") == HERMDEG_OK);
    String out;
    REQUIRE(hermdeg_vhd(s.s, v, "auto", &out.p) == HERMDEG_OK);
    CHECK(out.str().find("\"vhd\": 5") != std::string::npos);
    CHECK(out.str().find("\"consensus\": true") != std::string::npos);
    hermdeg_variety_destroy(v);
}

TEST_CASE("c api: error paths set codes and messages") {
    Session s;
    hermdeg_variety* v = nullptr;
    CHECK(hermdeg_variety_parse(s.s, "no vars line\n", &v) == HERMDEG_ERR_INPUT);
    CHECK(std::string(hermdeg_last_error(s.s)).find("vars") != std::string::npos);

    CHECK(hermdeg_session_set(s.s, "trials", "0") == HERMDEG_ERR_INPUT);
    CHECK(hermdeg_session_set(s.s, "banana", "1") == HERMDEG_ERR_INPUT);

    REQUIRE(hermdeg_variety_parse(s.s, kParabola, &v) == HERMDEG_OK);
    String out;
    // a tiny budget trips the budget error, not a wrong answer
    REQUIRE(hermdeg_session_set(s.s, "budget", "4") == HERMDEG_OK);
    CHECK(hermdeg_vhd(s.s, v, "auto", &out.p) == HERMDEG_ERR_BUDGET);
    CHECK(std::string(hermdeg_last_error(s.s)).find("BudgetExceeded") != std::string::npos);
    hermdeg_variety_destroy(v);
}

TEST_CASE("c api: hd sample json") {
    Session s;
    hermdeg_variety* v = nullptr;
    REQUIRE(hermdeg_variety_parse(s.s, "vars: z1, z2\nz1^2 + z2^2 - 1\n", &v) == HERMDEG_OK);
    String out;
    REQUIRE(hermdeg_hd_sample(s.s, v, "3, 0", &out.p) == HERMDEG_OK);
    CHECK(out.str().find("\"count\": 4") != std::string::npos);
    hermdeg_variety_destroy(v);
}

TEST_CASE("c api: critical ideal text round-trips") {
    Session s;
    hermdeg_variety* v = nullptr;
    REQUIRE(hermdeg_variety_parse(s.s, kParabola, &v) == HERMDEG_OK);
    String out;
    REQUIRE(hermdeg_critical_ideal(s.s, v, nullptr, 0, &out.p) == HERMDEG_OK);
    CHECK(out.str().find("vars: z1, z2, w1, w2, u1, u2, v1, v2") != std::string::npos);
    CHECK(out.str().find("order: degrevlex") != std::string::npos);
    hermdeg_variety_destroy(v);
}

TEST_CASE("c api: bounds") {
    Session s;
    String out;
    REQUIRE(hermdeg_bounds_hypersurface(s.s, 3, 2, &out.p) == HERMDEG_OK);
    CHECK(out.str().find("\"bkk\": 45") != std::string::npos);
    CHECK(out.str().find("\"final\": 45") != std::string::npos);
    String out2;
    REQUIRE(hermdeg_bounds_parametrized(s.s, 2, 1, &out2.p) == HERMDEG_OK);
    CHECK(out2.str().find("\"bkk\": 5") != std::string::npos);
}

TEST_CASE("c api: product and dual emit parseable varieties") {
    Session s;
    hermdeg_variety *a = nullptr, *b = nullptr, *prod = nullptr;
    REQUIRE(hermdeg_variety_parse(s.s, kParabola, &a) == HERMDEG_OK);
    REQUIRE(hermdeg_variety_parse(s.s, kParabola, &b) == HERMDEG_OK);
    String text;
    REQUIRE(hermdeg_product(s.s, a, b, &text.p) == HERMDEG_OK);
    REQUIRE(hermdeg_variety_parse(s.s, text.p, &prod) == HERMDEG_OK);
    String rep;
    REQUIRE(hermdeg_session_set(s.s, "trials", "2") == HERMDEG_OK);
    REQUIRE(hermdeg_vhd(s.s, prod, "affine", &rep.p) == HERMDEG_OK);
    CHECK(rep.str().find("\"vhd\": 25") != std::string::npos);
    hermdeg_variety_destroy(a);
    hermdeg_variety_destroy(b);
    hermdeg_variety_destroy(prod);

    hermdeg_variety* quad = nullptr;
    REQUIRE(hermdeg_variety_parse(s.s, "vars: z1, z2, z3\nhomogeneous: true\nz1^2 + z2^2 - z3^2\n", &quad) ==
            HERMDEG_OK);
    String dual;
    REQUIRE(hermdeg_dual(s.s, quad, &dual.p) == HERMDEG_OK);
    CHECK(dual.str().find("z1^2 + z2^2 - z3^2") != std::string::npos);
    hermdeg_variety_destroy(quad);
}
