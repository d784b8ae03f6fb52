#include <doctest.h>

#include <json.hpp>

#include "jordanrep/error.hpp"
#include "jordanrep/json_io.hpp"
#include "jordanrep/linalg.hpp"
#include "jordanrep/matrix.hpp"
#include "jordanrep/polynomial.hpp"
#include "jordanrep/random.hpp"
#include "jordanrep/rational.hpp"

using namespace jordanrep;

namespace {

RatMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-bound, bound);
    return m;
}

}  // namespace

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK(Rational::parse("0").is_zero());
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational(1, 0), InputError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("matrix basics") {
    const RatMatrix a{{1, 2}, {3, 4}};
    const RatMatrix b{{0, 1}, {1, 0}};
    CHECK(a * b == RatMatrix{{2, 1}, {4, 3}});
    CHECK(commutator(a, b) == a * b - b * a);
    CHECK(a.trace() == Rational(5));
    CHECK(a.pow(0) == RatMatrix::identity(2));
    CHECK(RatMatrix::from_vec(a.vec(), 2, 2) == a);
    // vec is column-major
    CHECK(a.vec() == RatVector{1, 3, 2, 4});
}

TEST_CASE("sandwich operator realises vec(L X R)") {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        const auto l = random_matrix(rng, 3, 3, 4), r = random_matrix(rng, 3, 3, 4), x = random_matrix(rng, 3, 3, 4);
        CHECK(sandwich_operator(l, r) * x.vec() == (l * x * r).vec());
        CHECK(commutator_operator(l) * x.vec() == (x * l - l * x).vec());
    }
}

TEST_CASE("rref and nullspace") {
    const RatMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    const Rref r = rref(a);
    CHECK(r.rank() == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
    const auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(a * ns[0]));
    CHECK(nullspace(RatMatrix::identity(3)).empty());
    CHECK(nullspace(RatMatrix::zero(2, 3)).size() == 3);
}

TEST_CASE("solve_affine on random consistent systems") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = 1 + rng.uniform(0, 5), n = 1 + rng.uniform(0, 5);
        RatMatrix a = random_matrix(rng, m, n, 3);
        if (t % 3 == 0 && m > 1)
            for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = a(0, j) * 2;  // force a dependent row
        RatVector x0(n);
        for (auto& v : x0) v = rng.rational(5);
        const RatVector b = a * x0;
        const auto sol = solve_affine(a, b);
        REQUIRE(sol);
        CHECK(a * sol->particular == b);
        CHECK(rank(a) + sol->kernel_basis.size() == n);
        RatVector combo = sol->particular;
        for (const auto& k : sol->kernel_basis) {
            const Rational c = rng.rational(4);
            for (std::size_t i = 0; i < n; ++i) combo[i] += c * k[i];
        }
        CHECK(a * combo == b);
    }
}

TEST_CASE("solve_affine detects inconsistency and bad shapes") {
    const RatMatrix a{{1, 1}, {1, 1}};
    const RatVector b{1, 2};
    CHECK_FALSE(solve_affine(a, b));
    const RatVector wrong{1};
    CHECK_THROWS_AS(solve_affine(a, wrong), InputError);
}

TEST_CASE("determinant and inverse") {
    const RatMatrix a{{2, 1}, {5, 3}};
    CHECK(determinant(a) == Rational(1));
    CHECK(a * inverse(a) == RatMatrix::identity(2));
    CHECK_THROWS(inverse(RatMatrix{{1, 2}, {2, 4}}));
}

TEST_CASE("echelon basis") {
    EchelonBasis e(3);
    CHECK(e.insert({1, 2, 3}));
    CHECK_FALSE(e.insert({2, 4, 6}));
    CHECK(e.insert({Rational(1, 2), 0, 0}));
    CHECK(e.contains({3, 2, 3}));
    CHECK_FALSE(e.contains({0, 0, 1}));
    CHECK(e.dim() == 2);
    CHECK(is_zero(e.reduce({5, 4, 6})));
    EchelonBasis copy = e;
    CHECK(copy.insert({0, 0, 1}));
    CHECK(e.dim() == 2);
    CHECK(primitive(RatVector{Rational(1, 2), Rational(-3, 4)}) == RatVector{2, -3});
}

TEST_CASE("polynomial arithmetic") {
    const RatPolynomial p({-1, 0, 1});  // t^2 - 1
    const RatPolynomial q({1, 1});      // t + 1
    const auto [quo, rem] = divmod(p, q);
    CHECK(quo == RatPolynomial({-1, 1}));
    CHECK(rem.is_zero());
    CHECK(gcd(p, RatPolynomial({2, 2})) == q);
    CHECK(p.derivative() == RatPolynomial({0, 2}));
    CHECK(p(Rational(3)) == Rational(8));
    CHECK(RatPolynomial().degree() == -1);
    CHECK(p.scale_argument(2) == RatPolynomial({-1, 0, 4}));
}

TEST_CASE("char_poly and distinct eigenvalues") {
    // companion matrix of t^3 - t
    const RatMatrix c{{0, 0, 0}, {1, 0, 1}, {0, 1, 0}};
    CHECK(char_poly(c) == RatPolynomial({0, -1, 0, 1}));
    CHECK(distinct_eigenvalue_count(c) == 3);
    CHECK(distinct_eigenvalue_count(RatMatrix::identity(4)) == 1);
    const RatMatrix jordan{{2, 1}, {0, 2}};
    CHECK(distinct_eigenvalue_count(jordan) == 1);
    // x^2 + 1 has no rational roots but two distinct eigenvalues
    CHECK(distinct_eigenvalue_count(RatMatrix{{0, -1}, {1, 0}}) == 2);
}

TEST_CASE("Cayley-Hamilton on random matrices") {
    Rng rng(3);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int t = 0; t < 3; ++t) {
            const auto m = random_matrix(rng, n, n, 5);
            const auto p = char_poly(m);
            CHECK(p.degree() == static_cast<long>(n));
            CHECK(p(m).is_zero());
        }
}

TEST_CASE("nilpotency two ways") {
    Rng rng(5);
    for (std::size_t n = 1; n <= 6; ++n) {
        RatMatrix strict(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) strict(i, j) = rng.uniform(-4, 4);
        RatMatrix g;
        do g = random_matrix(rng, n, n, 3);
        while (determinant(g).is_zero());
        const RatMatrix m = g * strict * inverse(g);
        CHECK(is_nilpotent(m));
        CHECK(char_poly(m) == RatPolynomial::monomial(n));
        const RatMatrix shifted = m + RatMatrix::identity(n);
        CHECK_FALSE(is_nilpotent(shifted));
    }
}

TEST_CASE("matrix json round trip") {
    const RatMatrix a{{Rational(1, 2), -3}, {0, 7}};
    const nlohmann::json j = a;
    CHECK(j.at("entries")[0][0] == "1/2");
    CHECK(j.get<RatMatrix>() == a);
    nlohmann::json bad = j;
    bad["rows"] = 3;
    CHECK_THROWS(bad.get<RatMatrix>());
}

TEST_CASE("rng determinism and bounds") {
    Rng a = Rng::keyed({1, 2, 3}), b = Rng::keyed({1, 2, 3}), c = Rng::keyed({1, 2, 4});
    CHECK(a.next() == b.next());
    CHECK(a.next() != c.next());
    Rng r(9);
    for (int i = 0; i < 1000; ++i) {
        const long v = r.uniform(-3, 3);
        CHECK((v >= -3 && v <= 3));
    }
    for (int i = 0; i < 100; ++i) CHECK_FALSE(r.nonzero_rational(2).is_zero());
}
