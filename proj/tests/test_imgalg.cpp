#include <doctest.h>

#include "jordanrep/error.hpp"
#include "jordanrep/freealg.hpp"
#include "jordanrep/imgalg.hpp"
#include "jordanrep/strata.hpp"

using namespace jordanrep;

TEST_CASE("dimension bound") {
    const std::size_t expected[] = {0, 1, 2, 4, 6, 9, 12, 16, 20};
    for (std::size_t n = 1; n <= 8; ++n) CHECK(dimension_bound(n) == expected[n]);
    CHECK_THROWS_AS(dimension_bound(0), InputError);
}

TEST_CASE("generated subalgebra small cases") {
    const auto a = generated_subalgebra(RatMatrix{{2}}, RatMatrix{{0}});
    CHECK(a.dim() == 1);
    const RatMatrix e12{{0, 1}, {0, 0}}, e21{{0, 0}, {1, 0}};
    CHECK(generated_subalgebra(e12, e21).dim() == 4);
    CHECK(word_span_dim(e12, e21, 4) == 4);
    CHECK(generated_subalgebra(RatMatrix::zero(3, 3), RatMatrix::zero(3, 3)).dim() == 1);
}

TEST_CASE("image reports") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& p : partitions(n)) {
            const auto s = sample_point(p, 0);
            const Representation rho(s.x, s.y);
            const auto r = image_report(rho);
            CHECK(r.within_bound);
            CHECK(r.basic);
            CHECK(r.dim == word_span_dim(s.x, s.y, 2 * n));
            if (p.is_full_block()) {
                CHECK(r.dim == dimension_bound(n));
                CHECK(r.local);
                REQUIRE(r.loops);
                CHECK(*r.loops == (n == 1 ? 0u : n == 2 ? 1u : 2u));
            }
        }
}

TEST_CASE("presentations of full-block images") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto s = sample_point(Partition({static_cast<unsigned>(n)}), 0);
        const Representation rho(s.x, s.y);
        const auto pres = extract_presentation(rho, 4);
        const RatMatrix u = s.x - pres.alpha * RatMatrix::identity(n);
        for (const auto& rel : pres.all_relations()) CHECK(evaluate(rel, u, s.y).is_zero());
        CHECK(free_quotient_dim(pres.all_relations(), 4) == image_report(rho).dim);
    }
}

TEST_CASE("presentation relation counts") {
    // counts per degree at seed 0
    const auto s2 = sample_point(Partition({2}), 0);
    const auto p2 = extract_presentation(Representation(s2.x, s2.y), 3);
    std::vector<std::size_t> c2;
    for (const auto& rels : p2.relations_by_degree) c2.push_back(rels.size());
    CHECK(c2 == std::vector<std::size_t>{0, 1, 1, 0});
    const auto s3 = sample_point(Partition({3}), 0);
    const auto p3 = extract_presentation(Representation(s3.x, s3.y), 4);
    std::vector<std::size_t> c3;
    for (const auto& rels : p3.relations_by_degree) c3.push_back(rels.size());
    CHECK(c3 == std::vector<std::size_t>{0, 0, 3, 0, 0});
}

TEST_CASE("presentation rejects non-local or low degree input") {
    const auto s = sample_point(Partition({2, 1}), 0);
    CHECK_THROWS_AS(extract_presentation(Representation(s.x, s.y), 4), InputError);
    const auto f = sample_point(Partition({2}), 0);
    CHECK_THROWS_AS(extract_presentation(Representation(f.x, f.y), 1), InputError);
}

TEST_CASE("simple modules present the ground field") {
    const auto pres = extract_presentation(simple_module(Rational(5, 2)), 2);
    CHECK(pres.alpha == Rational(5, 2));
    REQUIRE(pres.relations_by_degree.size() == 3);
    CHECK(pres.relations_by_degree[1].size() == 2);
    CHECK(pres.relations_by_degree[2].empty());
    CHECK(free_quotient_dim(pres.all_relations(), 2) == 1);
    const auto r = image_report(simple_module(3));
    CHECK(r.dim == 1);
    CHECK(r.local);
    CHECK(r.loops == std::optional<std::size_t>(0));
}
