#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcp/oracle.hpp"
#include "test_util.hpp"

#include <random>

using namespace rcp;

TEST_CASE("points_in_range") {
    SUBCASE("unit disc at origin") {
        std::vector<Point> s = {{0, 0}, {5, 5}};
        auto in = points_in_range(s, {Disc({0, 0}, 1), Point{0, 0}});
        REQUIRE(in.size() == 1);
        CHECK(points_equal(in[0], {0, 0}));
    }
    SUBCASE("empty set") {
        CHECK(points_in_range({}, {Disc({0, 0}, 1), Point{0, 0}}).empty());
    }
    SUBCASE("random wedge translate equals independent containment scan") {
        std::mt19937_64 rng(23);
        auto pts = test::random_points(60, 42, -1, 1);
        for (int it = 0; it < 50; ++it) {
            Wedge w = test::random_wedge(rng);
            Point q = test::random_point(rng, -1, 1);
            auto got = points_in_range(pts, {w, q});
            std::vector<Point> expect;
            for (Point p : pts) {
                if (w.contains(p, q)) expect.push_back(p);
            }
            REQUIRE(got.size() == expect.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(points_equal(got[i], expect[i]));
        }
    }
}

TEST_CASE("closest_pair_brute") {
    SUBCASE("three points") {
        auto cp = closest_pair_brute({{0, 0}, {3, 0}, {3, 1}});
        REQUIRE(cp.has_value());
        CHECK(same_pair(*cp, PointPair({3, 0}, {3, 1})));
    }
    SUBCASE("single point gives nothing") {
        CHECK_FALSE(closest_pair_brute({{1, 1}}).has_value());
    }
    SUBCASE("duplicates rejected") {
        CHECK_THROWS_AS(closest_pair_brute({{0, 0}, {0, 0}, {1, 1}}), std::invalid_argument);
    }
    SUBCASE("matches full pairwise-distance sort") {
        auto pts = test::random_general_position(100, 77);
        auto cp = closest_pair_brute(pts);
        REQUIRE(cp.has_value());
        double best = 1e300;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist(pts[i], pts[j]));
        }
        CHECK(cp->length == doctest::Approx(best));
    }
}

TEST_CASE("rcp_answer composition and monotonicity") {
    auto pts = test::random_general_position(80, 5);
    std::mt19937_64 rng(6);
    for (int it = 0; it < 40; ++it) {
        double r1 = 0.1 + 0.2 * (it % 5);
        double r2 = r1 + 0.15;
        Point q = test::random_point(rng, 0, 1);
        auto a1 = rcp_answer(pts, {Disc({0, 0}, r1), q});
        auto a2 = rcp_answer(pts, {Disc({0, 0}, r2), q});
        if (a1 && a2) CHECK(a1->length >= a2->length - 1e-12);
        auto direct = closest_pair_brute(points_in_range(pts, {Disc({0, 0}, r1), q}));
        CHECK(a1.has_value() == direct.has_value());
        if (a1) CHECK(same_pair(*a1, *direct));
    }
}
