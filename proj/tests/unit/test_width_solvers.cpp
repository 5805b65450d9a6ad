#include "doctest.h"
#include "support/enumerate.hpp"
#include "tww/certificate.hpp"
#include "tww/errors.hpp"
#include "tww/oracle.hpp"
#include "tww/rng.hpp"
#include "tww/solver.hpp"

using namespace tww;

TEST_SUITE("width_solvers") {

TEST_CASE("verifier on the stated instances") {
    SUBCASE("single vertex") {
        CHECK(verify_partition_sequence(Graph::simple(1, {}), {}) == 0);
    }
    SUBCASE("K2 has width 1 from the initial quotient") {
        PartitionSequence s;
        s.merges = {{0, 1}};
        CHECK(verify_partition_sequence(twtest::complete(2), s) == 1);
    }
    SUBCASE("star K_{1,3}: leaves pairwise, then into the center") {
        PartitionSequence s;
        s.merges = {{1, 2}, {1, 3}, {0, 1}};
        CHECK(verify_partition_sequence(twtest::star(3), s) == 3);
    }
    SUBCASE("invalid merges name the step") {
        PartitionSequence s;
        s.merges = {{0, 1}, {1, 2}};  // part 1 is dead after the first merge
        try {
            verify_partition_sequence(twtest::path(3), s);
            FAIL("expected CertificateError");
        } catch (const CertificateError& e) {
            CHECK(e.step == 1);
        }
    }
    SUBCASE("division sequences") {
        DivisionSequence s;
        s.merges = {{DivisionSequence::Axis::row, 1}, {DivisionSequence::Axis::col, 1}};
        CHECK(verify_division_sequence(Matrix::identity(2), s) == 2);
        DivisionSequence bad;
        bad.merges = {{DivisionSequence::Axis::row, 1}, {DivisionSequence::Axis::row, 1}};
        CHECK_THROWS_AS(verify_division_sequence(Matrix::identity(2), bad), CertificateError);
    }
}

TEST_CASE("exact graph solver matches the brute-force oracle, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : twtest::all_graphs_up_to_iso(n, true)) {
            const auto res = stww_graph_exact(g);
            REQUIRE(res.status == SolveStatus::exact);
            CHECK(res.width == oracle_stww_graph(g));
            CHECK(verify_partition_sequence(g, res.certificate) == res.width);
            CHECK(res.width >= g.max_degree());
        }
}

TEST_CASE("known graph values") {
    CHECK(stww_graph_exact(twtest::star(3)).width == 3);
    CHECK(stww_graph_exact(Graph::simple(1, {})).width == 0);
    CHECK(stww_graph_exact(twtest::cycle(5)).width == oracle_stww_graph(twtest::cycle(5)));
    CHECK(oracle_stww_graph(twtest::complete(2)) == 1);
    CHECK(oracle_stww_graph(twtest::path(3)) == 2);
}

TEST_CASE("exact matrix solver matches the oracle on small instances") {
    SplitMix64 rng(31415);
    for (int trial = 0; trial < 120; ++trial) {
        const Matrix m = twtest::random_matrix(4, 4, 24, rng);
        const auto res = stww_matrix_exact(m);
        REQUIRE(res.status == SolveStatus::exact);
        CHECK(res.width == oracle_stww_matrix(m));
        CHECK(verify_division_sequence(m, res.certificate) == res.width);
    }
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m = twtest::random_matrix(5, 6, 16, rng);
        const auto res = stww_matrix_exact(m);
        REQUIRE(res.status == SolveStatus::exact);
        CHECK(res.width == oracle_stww_matrix(m));
    }
}

TEST_CASE("known matrix values") {
    CHECK(oracle_stww_matrix(Matrix::identity(3)) == 2);
    CHECK(stww_matrix_exact(Matrix::zero(4, 4)).width == 0);
    for (int n = 2; n <= 12; ++n) {
        CHECK(stww_matrix_exact(Matrix::identity(n)).width == 2);
        CHECK(stww_matrix_exact(Matrix::reverse(n)).width == 2);
    }
    // Superdiagonal shift: the matrix of a strictly increasing partial map.
    for (int n = 3; n <= 8; ++n) {
        std::vector<std::pair<int, int>> shift;
        for (int i = 0; i + 1 < n; ++i) shift.emplace_back(i, i + 1);
        CHECK(stww_matrix_exact(Matrix(n, n, shift)).width == 2);
    }
}

TEST_CASE("trees have width exactly max degree") {
    SplitMix64 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(11));
        const Graph t = twtest::random_tree(n, rng);
        const auto res = stww_graph_exact(t);
        REQUIRE(res.status == SolveStatus::exact);
        CHECK(res.width == t.max_degree());
    }
}

TEST_CASE("heuristic certificates verify and dominate the exact width") {
    SplitMix64 rng(5);
    CHECK(stww_graph_heuristic(twtest::star(3)).width >= 3);
    CHECK(stww_matrix_heuristic(Matrix::identity(4)).width >= 2);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = twtest::random_graph(7 + static_cast<int>(rng.below(4)), 22, rng);
        const auto h = stww_graph_heuristic(g);
        CHECK(verify_partition_sequence(g, h.certificate) == h.width);
        if (g.vertex_count() <= 8) CHECK(h.width >= oracle_stww_graph(g));
    }
    // A 12-vertex cubic graph: heuristic width dominates the exact width.
    const Graph cubic = Graph::simple(
        12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
             {8, 9}, {9, 10}, {10, 11}, {0, 11}, {0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}});
    REQUIRE(cubic.max_degree() == 3);
    const auto exact = stww_graph_exact(cubic);
    REQUIRE(exact.status == SolveStatus::exact);
    CHECK(stww_graph_heuristic(cubic).width >= exact.width);
}

TEST_CASE("oracle refuses oversized instances") {
    CHECK_THROWS_AS(oracle_stww_graph(twtest::path(9)), ArgumentError);
    CHECK_THROWS_AS(oracle_stww_matrix(Matrix::identity(7)), ArgumentError);
}

TEST_CASE("budget exhaustion returns a certified upper bound") {
    // Petersen forces width 4 > max degree 3; the isolated vertices merge
    // freely, so refuting the bound 3 takes many nodes and the tiny budget
    // runs out mid-search.
    const Graph g = Graph::simple(14, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                       {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
                                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    Budget tiny;
    tiny.max_nodes = 3;
    const auto res = stww_graph_exact(g, tiny);
    CHECK(res.status == SolveStatus::budget_exhausted);
    CHECK(verify_partition_sequence(g, res.certificate) == res.width);
    const auto full = stww_graph_exact(g);
    REQUIRE(full.status == SolveStatus::exact);
    CHECK(res.width >= full.width);
}

TEST_CASE("certificate JSON round-trips with stable key order") {
    PartitionSequence p;
    p.merges = {{1, 2}, {0, 1}};
    p.claimed_width = 2;
    const std::string text = to_json_text(p);
    CHECK(text.find("\"kind\"") < text.find("\"merges\""));
    CHECK(text.find("\"merges\"") < text.find("\"claimed_width\""));
    const ParsedCertificate parsed = parse_certificate(text);
    REQUIRE(parsed.kind == CertificateKind::partition_sequence);
    CHECK(parsed.partition.merges == p.merges);
    CHECK(parsed.partition.claimed_width == 2);

    DivisionSequence d;
    d.merges = {{DivisionSequence::Axis::row, 2}, {DivisionSequence::Axis::col, 1}};
    d.claimed_width = 3;
    const ParsedCertificate pd = parse_certificate(to_json_text(d));
    REQUIRE(pd.kind == CertificateKind::division_sequence);
    CHECK(pd.division.merges == d.merges);
}

}  // TEST_SUITE
