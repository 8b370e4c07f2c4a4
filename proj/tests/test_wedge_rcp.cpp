#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcp/oracle.hpp"
#include "rcp/wedge_rcp.hpp"
#include "test_util.hpp"

#include <random>

using namespace rcp;

TEST_CASE("wedge rcp basics") {
    Wedge ne({0, 0}, {1, 0}, {0, 1});
    SUBCASE("two points") {
        auto st = WedgeRcpStructure::build({{1, 1}, {2, 1}}, ne);
        auto ans = st.query({0, 0});
        REQUIRE(ans.has_value());
        CHECK(same_pair(*ans, PointPair({1, 1}, {2, 1})));
        CHECK_FALSE(st.query({1.5, 0}).has_value());
        CHECK_FALSE(st.query({10, 10}).has_value());
    }
    SUBCASE("empty and singleton datasets answer nothing") {
        auto st0 = WedgeRcpStructure::build({}, ne);
        CHECK_FALSE(st0.query({0, 0}).has_value());
        auto st1 = WedgeRcpStructure::build({{1, 2}}, ne);
        CHECK_FALSE(st1.query({0, 0}).has_value());
    }
    SUBCASE("single candidate: subdivision has one vertex") {
        auto st = WedgeRcpStructure::build({{1, 1}, {2, 1}}, ne);
        CHECK(st.candidate_count() == 1);
        CHECK(st.subdivision_vertex_count() == 1);
    }
}

TEST_CASE("wedge rcp differential against the oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-0.4, 1.4);
    for (int it = 0; it < 20; ++it) {
        auto pts = test::random_general_position(50, 3000 + it);
        Wedge w = test::random_wedge(rng);
        auto st = WedgeRcpStructure::build(pts, w);
        for (int k = 0; k < 500; ++k) {
            Point q{u(rng), u(rng)};
            auto got = st.query(q);
            auto expect = rcp_answer(pts, {w, q});
            REQUIRE(got.has_value() == expect.has_value());
            if (got) CHECK(same_pair(*got, *expect));
        }
    }
}

TEST_CASE("wedge rcp space accounting") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 10; ++it) {
        auto pts = test::random_general_position(50, 4000 + it);
        Wedge w = test::random_wedge(rng);
        auto st = WedgeRcpStructure::build(pts, w);
        std::size_t m = st.candidate_count();
        // Each overlay step contributes its corner plus at most two crossings
        // with the previously drawn boundary.
        CHECK(st.max_step_crossings() <= 2);
        CHECK(st.overlay_crossing_count() <= 2 * m);
        CHECK(st.subdivision_vertex_count() <= 3 * m);
        CHECK(st.fragment_count() <= 4 * m);
        CHECK(st.trapezoid_count() <= 8 * st.fragment_count() + 8);
    }
}

TEST_CASE("monotone answer-index property") {
    // Deeper query translates (containing the original wedge) never lengthen
    // the answer.
    Wedge ne({0, 0}, {1, 0}, {0, 1});
    auto pts = test::random_general_position(60, 77);
    auto st = WedgeRcpStructure::build(pts, ne);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> step(0.0, 0.3);
    for (int k = 0; k < 2000; ++k) {
        Point q{u(rng), u(rng)};
        Point deeper{q.x - step(rng), q.y - step(rng)};  // NE wedge: smaller q contains W_q
        auto a1 = st.query(q);
        auto a2 = st.query(deeper);
        if (a1) {
            REQUIRE(a2.has_value());
            CHECK(a2->length <= a1->length + 1e-12);
        }
    }
}
