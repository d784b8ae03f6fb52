#include <doctest.h>

#include "jordanrep/error.hpp"
#include "jordanrep/freealg.hpp"
#include "jordanrep/random.hpp"
#include "jordanrep/strata.hpp"

using namespace jordanrep;

namespace {

const NcPolynomial X = NcPolynomial::x();
const NcPolynomial Y = NcPolynomial::y();

}  // namespace

TEST_CASE("parser and printer") {
    CHECK(parse_expr("x*y^2").str() == "x*y^2");
    CHECK(parse_expr("3/2*y*x^2").str() == "3/2*y*x^2");
    CHECK(parse_expr("-x + 2").str() == "-x + 2");
    CHECK(parse_expr("(x + y)^2") == X * X + X * Y + Y * X + Y * Y);
    CHECK(parse_expr("2*(x - y)*x") == 2 * X * X - 2 * Y * X);
    CHECK(parse_expr("x^0") == NcPolynomial(1));
    CHECK(parse_expr("u*v", kUV) == X * Y);
    CHECK(parse_expr("0").is_zero());
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse_expr("x^-1"), ParseError);
    CHECK_THROWS_AS(parse_expr("x + "), ParseError);
    CHECK_THROWS_AS(parse_expr("x*z"), ParseError);
    CHECK_THROWS_AS(parse_expr("1/0*x"), ParseError);
    CHECK_THROWS_AS(parse_expr("(x"), ParseError);
    CHECK_THROWS_AS(parse_expr("x^1001"), ParseError);
    try {
        parse_expr("x + *y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("normal form examples") {
    CHECK(normal_form(X * Y) == Y * X + Y * Y);
    CHECK(normal_form(X * Y * Y).str() == "y^2*x + 2*y^3");
    CHECK(normal_form(defining_relation()).is_zero());
    CHECK(normal_form(Y * X) == Y * X);
    // x^2 y = y x^2 + 2 y^2 x + 2 y^3
    CHECK(normal_form(X * X * Y) == Y * X * X + 2 * Y * Y * X + 2 * Y.pow(3));
    const auto big = normal_form(parse_expr("(x + y)^5 - x^3*y*x"));
    for (const auto& [w, c] : big.terms()) CHECK(is_pbw(w));
}

TEST_CASE("normal form properties on random polynomials") {
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        const auto p = random_nc_polynomial(rng, 4, 4, 6);
        const auto q = random_nc_polynomial(rng, 4, 3, 6);
        const auto r = random_nc_polynomial(rng, 3, 2, 6);
        const auto np = normal_form(p);
        CHECK(normal_form(np) == np);
        CHECK(normal_form(p * q) == normal_form(np * normal_form(q)));
        CHECK(normal_form(p + q) == np + normal_form(q));
        CHECK(normal_form(normal_form(p * q) * r) == normal_form(p * normal_form(q * r)));
        // adding ideal elements does not change the class
        CHECK(normal_form(p + q * defining_relation() * r) == np);
    }
}

TEST_CASE("evaluation is a homomorphism on relation-satisfying pairs") {
    const SamplePoint s = sample_point(Partition({3}), 1);
    const RatMatrix& x0 = s.x;
    const RatMatrix& y = s.y;
    REQUIRE((x0 * y - y * x0 - y * y).is_zero());
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_nc_polynomial(rng, 4, 4, 5), q = random_nc_polynomial(rng, 3, 3, 5);
        CHECK(evaluate(p * q, x0, y) == evaluate(p, x0, y) * evaluate(q, x0, y));
        CHECK(evaluate(normal_form(p), x0, y) == evaluate(p, x0, y));
    }
    CHECK_FALSE(evaluate(defining_relation(), y, x0).is_zero());
}

TEST_CASE("automorphisms") {
    const AutParams phi{2, RatPolynomial({1, 0, 1})};
    CHECK(check_endomorphism(phi.image_x(), phi.image_y()));
    CHECK_FALSE(check_endomorphism(Y, X));
    // x -> x + y^2, y -> 2y is not compatible with the relation
    CHECK_FALSE(check_endomorphism(X, 2 * Y));
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
        const AutParams a = random_aut_params(rng, 3, 5), b = random_aut_params(rng, 3, 5);
        CHECK(check_endomorphism(a.image_x(), a.image_y()));
        const AutParams inv = inverse_aut(a);
        CHECK(compose_aut(a, inv) == AutParams{1, {}});
        CHECK(compose_aut(inv, a) == AutParams{1, {}});
        const auto fx = substitute(b.image_x(), a.image_x(), a.image_y());
        const auto fy = substitute(b.image_y(), a.image_x(), a.image_y());
        CHECK(read_aut_params(fx, fy) == compose_aut(a, b));
    }
    CHECK_THROWS_AS(read_aut_params(X * X, Y), InvariantViolation);
}

TEST_CASE("truncated quotients") {
    for (std::size_t d = 0; d <= 10; ++d) CHECK(pbw_count(d) == (d + 1) * (d + 2) / 2);
    CHECK(pbw_basis(2).size() == 6);
    CHECK(quotient_dim({}, 3) == 10);
    CHECK(quotient_dim({Y}, 5) == 6);
    CHECK(quotient_dim({Y, X - NcPolynomial(Rational(3, 2))}, 4) == 1);
    CHECK(quotient_dim({NcPolynomial(1)}, 4) == 0);
    CHECK(all_words(3).size() == 15);
    // free algebra modulo the defining relation agrees with the PBW count
    for (std::size_t d = 0; d <= 4; ++d) CHECK(free_quotient_dim({defining_relation()}, d) == pbw_count(d));
}
