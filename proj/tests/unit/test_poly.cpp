#include "support.hpp"

#include "sympspin/parse.hpp"
#include "sympspin/spinor_poly.hpp"

#include <doctest.h>

using namespace sympspin;

TEST_SUITE("core-arith") {

TEST_CASE("poly_combine examples") {
    SpinorPoly p = parse_spinor("x1^2*q1 - 3/4*i*x2 + 5", 1);
    CHECK(poly_combine(p, -p, 1).is_zero());
    CHECK(poly_combine(p, p, -1).is_zero());

    SpinorPoly q = parse_spinor("x1*x2 + q1", 1);
    CHECK(poly_combine(p, q, 0) == p);

    SpinorPoly x1 = SpinorPoly::x(1, 1);
    SpinorPoly merged = poly_combine(x1, x1, GaussianRational::i());
    REQUIRE(merged.size() == 1);
    CHECK(merged.coeff(merged.terms().front().mono) == GaussianRational(1, 1, 1, 1));
    CHECK(merged.str() == "(1+i)*x1");
}

TEST_CASE("poly_mul examples") {
    SpinorPoly b = parse_spinor("x2 + i*x4", 2);
    CHECK(poly_mul(b, b) == parse_spinor("x2^2 + 2i*x2*x4 - x4^2", 2));
    SpinorPoly p = parse_spinor("x1*q2 - 7/3", 2);
    CHECK(poly_mul(p, SpinorPoly::constant(2, 1)) == p);
    SpinorPoly q1 = SpinorPoly::q(2, 1);
    CHECK(poly_mul(q1, q1).str() == "q1^2");
}

TEST_CASE("rank mismatch is an error") {
    SpinorPoly a = SpinorPoly::x(1, 1), b = SpinorPoly::x(2, 1);
    CHECK_THROWS_AS(poly_combine(a, b, 1), Error);
    CHECK_THROWS_AS(poly_mul(a, b), Error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 60; ++t) {
            auto p = testing_support::random_poly(n, rng);
            auto q = testing_support::random_poly(n, rng);
            auto r = testing_support::random_poly(n, rng);
            CHECK(poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r)));
            CHECK(poly_mul(p, q + r) == poly_mul(p, q) + poly_mul(p, r));
            CHECK(poly_mul(p, q) == poly_mul(q, p));
            CHECK((p + q) + r == p + (q + r));
            CHECK(p + q == q + p);
        }
    }
}

TEST_CASE("no zero coefficients are stored") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto p = testing_support::random_poly(2, rng, 6);
        auto q = testing_support::random_poly(2, rng, 6);
        for (const auto& s : {p - p, p + q - q, poly_mul(p, q) - poly_mul(q, p), p * GaussianRational()}) {
            for (const auto& term : s.terms()) {
                CHECK_FALSE(term.coef.is_zero());
            }
        }
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("serialize then parse reproduces the term map") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 100; ++t) {
            auto p = testing_support::random_poly(n, rng, 6, 3);
            SpinorPoly back = parse_spinor(p.str(), n);
            CHECK(back == p);
            CHECK(back.str() == p.str());
        }
    }
}

TEST_CASE("monomial order and text form") {
    const int n = 3;
    auto mono = [](const char* t) { return parse_spinor(t, n).terms().front().mono; };
    CHECK(mono("x1") > mono("x2"));
    CHECK(mono("x6") > mono("q1"));
    CHECK(mono("q1") > mono("q3"));
    CHECK(mono("q3^2") > mono("x1"));
    CHECK(mono("x1*x2") > mono("x1*q1"));

    SpinorPoly p = parse_spinor("(1/2+1/2i)*x1^2*q3 - i*x4", n);
    CHECK(p.str() == "(1/2+1/2i)*x1^2*q3 - i*x4");
    CHECK(p.max_x_degree() == 2);
    CHECK(p.max_q_degree() == 1);
    CHECK(SpinorPoly(n).max_x_degree() == -1);
    // Terms are stored ascending.
    CHECK(p.terms().front().mono < p.terms().back().mono);
}

TEST_CASE("monomial exponent bookkeeping") {
    SpinorMonomial m(2);
    CHECK(m.degree() == 0);
    CHECK(m.shift_x(3, 2));
    CHECK(m.shift_q(2, 1));
    CHECK(m.x_exp(3) == 2);
    CHECK(m.q_exp(2) == 1);
    CHECK_FALSE(m.shift_x(1, -1));
    CHECK(m.x_degree() == 2);
    CHECK(m.q_degree() == 1);
    CHECK(m.str() == "x3^2*q2");
}

}
