#include <sstream>

#include "doctest.h"
#include "support/enumerate.hpp"
#include "tww/errors.hpp"
#include "tww/graph.hpp"
#include "tww/rng.hpp"

using namespace tww;

namespace {

// Floyd-Warshall all-pairs oracle for diameter, plus per-edge-removal girth.
GraphStats fw_stats(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (const auto& [u, v] : g.edges()) {
        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                                 d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    GraphStats s;
    s.max_degree = g.max_degree();
    int diam = 0;
    bool conn = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= inf) conn = false;
            else diam = std::max(diam, d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    if (conn || n == 0) s.diameter = n == 0 ? 0 : diam;
    int girth = inf;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        std::vector<std::pair<int, int>> rest;
        for (std::size_t f = 0; f < g.edges().size(); ++f)
            if (f != e) rest.push_back(g.edges()[f]);
        const Graph h = Graph::multigraph(n, rest);
        const auto dist = bfs_distances(h, g.edges()[e].first);
        const int dv = dist[static_cast<std::size_t>(g.edges()[e].second)];
        if (dv >= 0) girth = std::min(girth, dv + 1);
    }
    if (girth < inf) s.girth = girth;
    return s;
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("stats of the standard instances") {
    const auto k4 = graph_stats(twtest::complete(4));
    CHECK(k4.max_degree == 3);
    CHECK(k4.diameter == 1);
    CHECK(k4.girth == 3);

    const auto p4 = graph_stats(twtest::path(4));
    CHECK(p4.max_degree == 2);
    CHECK(p4.diameter == 3);
    CHECK_FALSE(p4.girth.has_value());

    const auto q3 = graph_stats(twtest::hypercube3());
    CHECK(q3.max_degree == 3);
    CHECK(q3.diameter == 3);
    CHECK(q3.girth == 4);

    const auto empty = graph_stats(Graph::simple(0, {}));
    CHECK(empty.max_degree == 0);
    CHECK(empty.diameter == 0);
    CHECK_FALSE(empty.girth.has_value());
}

TEST_CASE("disconnected graphs report infinite diameter") {
    const Graph g = Graph::simple(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(graph_stats(g).diameter.has_value());
    CHECK_FALSE(g.connected());
}

TEST_CASE("multigraph girth counts parallel edges as 2-cycles") {
    const Graph g = Graph::multigraph(2, {{0, 1}, {0, 1}});
    CHECK(graph_stats(g).girth == 2);
}

TEST_CASE("simple graphs reject duplicates and loops") {
    CHECK_THROWS_AS(Graph::simple(2, {{0, 1}, {1, 0}}), StructuralError);
    CHECK_THROWS_AS(Graph::simple(2, {{1, 1}}), StructuralError);
    CHECK_THROWS_AS(Graph::simple(2, {{0, 2}}), StructuralError);
}

TEST_CASE("stats agree with the all-pairs oracle") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : twtest::all_graphs_up_to_iso(n, false)) {
            const auto a = graph_stats(g);
            const auto b = fw_stats(g);
            CHECK(a.max_degree == b.max_degree);
            CHECK(a.diameter == b.diameter);
            CHECK(a.girth == b.girth);
        }
    SplitMix64 rng(20240917);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = twtest::random_graph(7, 20, rng);
        const auto a = graph_stats(g);
        const auto b = fw_stats(g);
        CHECK(a.diameter == b.diameter);
        CHECK(a.girth == b.girth);
    }
}

TEST_CASE("quotients") {
    const Graph p4 = twtest::path(4);
    SUBCASE("singleton partition is the identity") {
        CHECK(quotient_graph(p4, VertexPartition::singletons(4)) == p4);
    }
    SUBCASE("pairing the ends of a path gives one edge") {
        const Graph q = quotient_graph(p4, VertexPartition(4, {{0, 1}, {2, 3}}));
        CHECK(q.vertex_count() == 2);
        CHECK(q.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    }
    SUBCASE("trivial partition gives one isolated vertex, no loop") {
        const Graph q = quotient_graph(p4, VertexPartition::trivial(4));
        CHECK(q.vertex_count() == 1);
        CHECK(q.edge_count() == 0);
    }
    SUBCASE("malformed partitions are structural errors") {
        CHECK_THROWS_AS(VertexPartition(4, {{0, 1}, {1, 2, 3}}), StructuralError);
        CHECK_THROWS_AS(VertexPartition(4, {{0, 1}, {3}}), StructuralError);
    }
}

TEST_CASE("graph powers") {
    const Graph p4 = twtest::path(4);
    CHECK(graph_power(p4, 1) == p4);
    const Graph p4sq = graph_power(p4, 2);
    CHECK(p4sq.edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(p4sq.max_degree() == 3);
    CHECK(graph_power(twtest::cycle(6), 3) == twtest::complete(6));
    CHECK_THROWS_AS(graph_power(p4, 0), ArgumentError);
}

TEST_CASE("degree bound under powers and quotient/power inclusion") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(4));
        const Graph g = twtest::random_graph(n, 24, rng);
        for (int k = 1; k <= 3; ++k) {
            const Graph gk = graph_power(g, k);
            long long bound = 1;
            for (int i = 0; i < k; ++i) bound *= std::max(1, g.max_degree());
            CHECK(gk.max_degree() <= bound);
            // Random partition: G^(k)/P is a subgraph of (G/P)^(k).
            std::vector<std::vector<int>> parts;
            for (int v = 0; v < n; ++v) {
                const std::size_t p = rng.below(static_cast<std::uint64_t>(parts.size()) + 1);
                if (p == parts.size()) parts.push_back({v});
                else parts[p].push_back(v);
            }
            const VertexPartition part(n, parts);
            const Graph lhs = quotient_graph(gk, part);
            const Graph rhs = graph_power(quotient_graph(g, part),
                                          k);  // may have more edges
            for (const auto& e : lhs.edges()) CHECK(rhs.adjacent(e.first, e.second));
            // Quotient degree bound.
            CHECK(quotient_graph(g, part).max_degree() <=
                  g.max_degree() * part.max_part_size());
        }
    }
}

TEST_CASE("text format round-trips bit-exactly") {
    const Graph g = twtest::hypercube3();
    const std::string text = to_text(g);
    std::istringstream in(text);
    const Graph back = read_graph(in);
    CHECK(back == g);
    CHECK(to_text(back) == text);

    const Graph labelled = Graph::labelled(
        3, {{0, 1}, {1, 2}, {2, 0}}, {{0, false}, {1, true}, {2, false}}, {"a", "b", "c"});
    const std::string ltext = to_text(labelled);
    std::istringstream lin(ltext);
    const Graph lback = read_graph(lin);
    CHECK(lback == labelled);
    CHECK(to_text(lback) == ltext);
}

TEST_CASE("enumeration sanity: counts of connected graphs up to iso") {
    CHECK(twtest::all_graphs_up_to_iso(4, true).size() == 6);
    CHECK(twtest::all_graphs_up_to_iso(5, true).size() == 21);
    CHECK(twtest::all_graphs_up_to_iso(6, true).size() == 112);
    CHECK(twtest::all_graphs_up_to_iso(5, false).size() == 34);
}

}  // TEST_SUITE
