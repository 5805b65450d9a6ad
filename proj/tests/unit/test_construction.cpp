#include "doctest.h"
#include "support/enumerate.hpp"
#include "tww/construction.hpp"
#include "tww/errors.hpp"

using namespace tww;

TEST_SUITE("construction") {

TEST_CASE("sampling the triple-matching class") {
    SUBCASE("n = 2 is the triple edge") {
        const C1Graph g = sample_c1(2, 1);
        for (const auto& m : g.matchings) {
            REQUIRE(m.size() == 1);
            CHECK(m[0] == std::pair(0, 1));
        }
        CHECK(g.to_multigraph().degree(0) == 3);
    }
    SUBCASE("every vertex has degree exactly 3 with multiplicity") {
        const C1Graph g = sample_c1(64, 7);
        const Graph multi = g.to_multigraph();
        for (int v = 0; v < 64; ++v) CHECK(multi.degree(v) == 3);
    }
    SUBCASE("odd n is rejected") { CHECK_THROWS_AS(sample_c1(5, 1), ArgumentError); }
    SUBCASE("deterministic per seed") {
        const C1Graph a = sample_c1(128, 99), b = sample_c1(128, 99), c = sample_c1(128, 100);
        CHECK(a.matchings == b.matchings);
        CHECK(a.matchings != c.matchings);
    }
}

TEST_CASE("short cycle enumeration") {
    SUBCASE("trees have none") {
        CHECK(short_cycles(twtest::path(6), 6).empty());
    }
    SUBCASE("C4 with cap 4 finds exactly the one cycle") {
        const auto cycles = short_cycles(twtest::cycle(4), 4);
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].vertices.size() == 4);
        CHECK(short_cycles(twtest::cycle(4), 3).empty());
    }
    SUBCASE("a double edge is one 2-cycle, a triple edge three") {
        CHECK(short_cycles(Graph::multigraph(2, {{0, 1}, {0, 1}}), 2).size() == 1);
        CHECK(short_cycles(Graph::multigraph(2, {{0, 1}, {0, 1}, {0, 1}}), 2).size() == 3);
    }
    SUBCASE("K4 has four triangles and three 4-cycles") {
        CHECK(short_cycles(twtest::complete(4), 3).size() == 4);
        CHECK(short_cycles(twtest::complete(4), 4).size() == 7);
    }
}

TEST_CASE("threshold arithmetic is exact") {
    CHECK(floor_quarter_log2(4096) == 3);
    CHECK(floor_quarter_log2(4095) == 2);
    CHECK(floor_quarter_log2(65536) == 4);
    CHECK(ceil_log2(4096) == 12);
    CHECK(ceil_log2(4097) == 13);
    CHECK(girth_exceeds_quarter_log2(4, 4096));       // 2^16 > 4096
    CHECK_FALSE(girth_exceeds_quarter_log2(3, 4096)); // 2^12 = 4096, not >
    CHECK(girth_exceeds_quarter_log2(std::nullopt, 4096));
    CHECK(diameter_within_3log2(36, 4096));           // 2^36 = 4096^3
    CHECK_FALSE(diameter_within_3log2(37, 4096));
    CHECK_FALSE(diameter_within_3log2(std::nullopt, 4096));
}

TEST_CASE("the repair pipeline at n = 4096") {
    const C1Graph g1 = sample_c1(4096, 12345);
    const EditResult res = edit_to_c2(g1);
    REQUIRE(res.outcome == EditResult::Outcome::success);
    CHECK(res.cert.pass);
    CHECK(res.cert.simple);
    CHECK(res.cert.connected);
    CHECK(res.cert.max_degree <= 6);
    REQUIRE(res.cert.diameter.has_value());
    CHECK(*res.cert.diameter <= 36);
    REQUIRE(res.cert.girth.has_value());
    CHECK(*res.cert.girth >= 4);
    CHECK(res.deleted_edges <= 864);  // 4 * 6^3
    // |X| within the n^(7/8) regime: the recorded constant stays small.
    CHECK(res.x_size <= 25 * 1448 + 1);
    SUBCASE("deterministic: identical seeds give identical graphs") {
        const EditResult again = edit_to_c2(sample_c1(4096, 12345));
        CHECK(to_text(again.graph) == to_text(res.graph));
    }
}

TEST_CASE("inputs already below every threshold pass untouched") {
    // K4: g = log2(4)/4 = 0.5, so only parallel edges would be deleted; the
    // certificate accepts girth 3 > 0.5.
    C1Graph g1;
    g1.n = 4;
    g1.matchings[0] = {{0, 1}, {2, 3}};
    g1.matchings[1] = {{0, 2}, {1, 3}};
    g1.matchings[2] = {{0, 3}, {1, 2}};
    const EditResult res = edit_to_c2(g1);
    REQUIRE(res.outcome == EditResult::Outcome::success);
    CHECK(res.deleted_edges == 0);
    CHECK(res.graph == twtest::complete(4));
}

TEST_CASE("sequence generation") {
    SUBCASE("a single entry works with the default increment") {
        const auto seq = generate_sequence({4096}, 31, 6, 8);
        REQUIRE(seq.entries.size() == 1);
        CHECK(seq.entries[0].cert.pass);
    }
    SUBCASE("girth increments hold with a relaxed increment") {
        const auto seq = generate_sequence({1024, 4096}, 7, 0, 32);
        REQUIRE(seq.entries.size() == 2);
        REQUIRE(seq.entries[0].cert.girth.has_value());
        REQUIRE(seq.entries[1].cert.girth.has_value());
        CHECK(*seq.entries[1].cert.girth >= *seq.entries[0].cert.girth);
        CHECK(seq.realized_a > 0.0);
    }
    SUBCASE("an unsatisfiable increment reports a schedule error") {
        CHECK_THROWS_WITH_AS(generate_sequence({64, 128}, 5, 50, 3),
                             doctest::Contains("schedule too dense"), ArgumentError);
    }
    SUBCASE("non-increasing schedules are rejected") {
        CHECK_THROWS_AS(generate_sequence({128, 128}, 5, 6, 3), ArgumentError);
    }
}

}  // TEST_SUITE
