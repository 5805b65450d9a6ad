#include "doctest.h"
#include "support/enumerate.hpp"
#include "tww/calculus.hpp"
#include "tww/errors.hpp"
#include "tww/oracle.hpp"
#include "tww/rng.hpp"
#include "tww/solver.hpp"

using namespace tww;

namespace {

BlockInput solved(const Matrix& m) {
    const auto res = stww_matrix_exact(m);
    REQUIRE(res.status == SolveStatus::exact);
    return {m, res.certificate};
}

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("substitution: width is the max of pattern and blocks") {
    SUBCASE("1x1 blocks keep the pattern width") {
        const BijectionMatrix pat(std::vector<int>{1, 2, 0});
        const auto base = solved(pat.to_matrix());
        std::map<std::pair<int, int>, BlockInput> blocks;
        for (int a = 0; a < 3; ++a)
            blocks.emplace(std::pair(a, pat.image(a)), solved(Matrix::all_ones(1, 1)));
        const auto res = substitute_sequences(pat, base.certificate, blocks);
        CHECK(res.certificate.claimed_width == base.certificate.claimed_width);
    }
    SUBCASE("identity blocks in the identity give width 2") {
        const BijectionMatrix id2 = BijectionMatrix::identity(2);
        const auto base = solved(id2.to_matrix());
        std::map<std::pair<int, int>, BlockInput> blocks;
        for (int a = 0; a < 2; ++a) blocks.emplace(std::pair(a, a), solved(Matrix::identity(2)));
        const auto res = substitute_sequences(id2, base.certificate, blocks);
        CHECK(res.matrix == Matrix::identity(4));
        CHECK(res.certificate.claimed_width == 2);
    }
    SUBCASE("random substitutions realise the exact composite width") {
        SplitMix64 rng(4311);
        for (int trial = 0; trial < 20; ++trial) {
            const BijectionMatrix pat = twtest::random_bijection(3, rng);
            const auto base = solved(pat.to_matrix());
            std::map<std::pair<int, int>, BlockInput> blocks;
            int max_width = base.certificate.claimed_width;
            for (int a = 0; a < 3; ++a) {
                const auto block = solved(twtest::random_bijection(2, rng).to_matrix());
                max_width = std::max(max_width, block.certificate.claimed_width);
                blocks.emplace(std::pair(a, pat.image(a)), block);
            }
            const auto res = substitute_sequences(pat, base.certificate, blocks);
            CHECK(res.certificate.claimed_width <= max_width);
            const auto exact = stww_matrix_exact(res.matrix);
            REQUIRE(exact.status == SolveStatus::exact);
            CHECK(exact.width == max_width);  // the equality law
        }
    }
}

TEST_CASE("tensor products") {
    SUBCASE("single factor passes through") {
        const auto f = solved(Matrix::identity(3));
        const auto res = tensor_width({f});
        CHECK(res.matrix == Matrix::identity(3));
        CHECK(res.certificate.claimed_width == f.certificate.claimed_width);
    }
    SUBCASE("identity cubed is the 8x8 identity of width 2") {
        const auto f = solved(Matrix::identity(2));
        const auto res = tensor_width({f, f, f});
        CHECK(res.matrix == Matrix::identity(8));
        CHECK(res.certificate.claimed_width == 2);
    }
    SUBCASE("reverse_2 x reverse_3 attains the max of the factor widths") {
        const auto a = solved(Matrix::reverse(2));
        const auto b = solved(Matrix::reverse(3));
        const auto res = tensor_width({a, b});
        const auto exact = stww_matrix_exact(res.matrix);
        CHECK(exact.width ==
              std::max(a.certificate.claimed_width, b.certificate.claimed_width));
        CHECK(res.certificate.claimed_width == exact.width);
    }
}

TEST_CASE("superposition grid bound") {
    SplitMix64 rng(60);
    SUBCASE("increasing 4x4 bijections, k = 2") {
        const std::vector<Matrix> ms{Matrix::identity(4), Matrix::identity(4)};
        const auto res = superposition_gn_bound(ms, 2);
        CHECK(res.bound == 16);
        CHECK(res.holds);
    }
    SUBCASE("superposing zero changes nothing") {
        const auto res = superposition_gn_bound({Matrix::identity(4), Matrix::zero(4, 4)}, 2);
        CHECK(res.holds);
        CHECK(res.superposition_gn == 1);
    }
    SUBCASE("violated precondition is an argument error") {
        CHECK_THROWS_AS(superposition_gn_bound({twtest::grid4_example()}, 2), ArgumentError);
    }
}

TEST_CASE("quotient lift") {
    SUBCASE("singleton partition keeps the width") {
        const Graph g = twtest::path(4);
        const auto cert = stww_graph_exact(g).certificate;
        const auto lifted = quotient_lift(g, VertexPartition::singletons(4), cert, 1);
        CHECK(lifted.claimed_width == cert.claimed_width);
    }
    SUBCASE("P4 with end pairs lifts to width 2") {
        const Graph g = twtest::path(4);
        const VertexPartition p(4, {{0, 1}, {2, 3}});
        const auto cert_q = stww_graph_exact(quotient_graph(g, p)).certificate;
        const auto lifted = quotient_lift(g, p, cert_q, 2);
        CHECK(lifted.claimed_width <= 2 * cert_q.claimed_width);
        CHECK(verify_partition_sequence(g, lifted) == lifted.claimed_width);
    }
    SUBCASE("random instances satisfy k*w + k - 1; independent parts satisfy k*w") {
        SplitMix64 rng(1009);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 6 + static_cast<int>(rng.below(3));
            const Graph g = twtest::random_graph(n, 20, rng);
            std::vector<std::vector<int>> parts;
            for (int v = 0; v < n; ++v) {
                if (!parts.empty() && parts.back().size() == 1 && rng.flip())
                    parts.back().push_back(v);
                else
                    parts.push_back({v});
            }
            const VertexPartition p(n, parts);
            const int k = 2;
            const auto cert_q = stww_graph_exact(quotient_graph(g, p)).certificate;
            const auto lifted = quotient_lift(g, p, cert_q, k);
            CHECK(lifted.claimed_width <= k * cert_q.claimed_width + k - 1);
            bool independent = true;
            for (const auto& part : p.parts())
                for (std::size_t i = 0; i < part.size() && independent; ++i)
                    for (std::size_t j = i + 1; j < part.size(); ++j)
                        if (g.adjacent(part[i], part[j])) independent = false;
            if (independent) CHECK(lifted.claimed_width <= k * cert_q.claimed_width);
        }
    }
    SUBCASE("the strict k*w bound fails when parts contain edges (known gap)") {
        // K_{1,3} maps 2-to-1 onto K2 with the center and one leaf in a part:
        // any sequence of the star has width >= 3 > 2 * stww(K2) = 2.
        const Graph star = twtest::star(3);
        const VertexPartition p(4, {{0, 1}, {2, 3}});
        const auto cert_q = stww_graph_exact(quotient_graph(star, p)).certificate;
        const auto lifted = quotient_lift(star, p, cert_q, 2);
        CHECK(lifted.claimed_width == 3);
        CHECK(lifted.claimed_width > 2 * cert_q.claimed_width);
        CHECK(lifted.claimed_width <= 2 * cert_q.claimed_width + 1);
    }
    SUBCASE("oversized part is an argument error") {
        const Graph g = twtest::path(4);
        CHECK_THROWS_AS(quotient_lift(g, VertexPartition(4, {{0, 1, 2}, {3}}),
                                      PartitionSequence{{{0, 1}}, 0}, 2),
                        ArgumentError);
    }
}

TEST_CASE("power lift") {
    const Graph p4 = twtest::path(4);
    const auto cert = stww_graph_exact(p4).certificate;
    SUBCASE("k = 1 keeps the width") {
        CHECK(power_lift(p4, 1, cert).claimed_width == cert.claimed_width);
    }
    SUBCASE("squares stay within w^2") {
        const auto lifted = power_lift(p4, 2, cert);
        CHECK(lifted.claimed_width <= cert.claimed_width * cert.claimed_width);
        CHECK(verify_partition_sequence(graph_power(p4, 2), lifted) == lifted.claimed_width);
    }
    SUBCASE("C6 cubes stay within w^3") {
        const Graph c6 = twtest::cycle(6);
        const auto c = stww_graph_exact(c6).certificate;
        const auto lifted = power_lift(c6, 2, c);
        CHECK(lifted.claimed_width <= c.claimed_width * c.claimed_width);
    }
}

TEST_CASE("composition lift") {
    SplitMix64 rng(41);
    SUBCASE("identity composed with identity") {
        const BijectionMatrix id = BijectionMatrix::identity(4);
        const auto joint = stww_matrix_exact(joint_composition_matrix(id, id));
        REQUIRE(joint.status == SolveStatus::exact);
        const auto out = compose_lift(id, id, joint.certificate);
        CHECK(out.claimed_width <= joint.width * joint.width);
    }
    SUBCASE("reverse o reverse = identity") {
        const BijectionMatrix rev = BijectionMatrix::reverse(4);
        const auto joint = stww_matrix_exact(joint_composition_matrix(rev, rev));
        const auto out = compose_lift(rev, rev, joint.certificate);
        CHECK(verify_division_sequence(Matrix::identity(4), out) == out.claimed_width);
        CHECK(out.claimed_width <= joint.width * joint.width);
    }
    SUBCASE("random 6-point bijections stay within the square") {
        for (int trial = 0; trial < 15; ++trial) {
            const BijectionMatrix sigma = twtest::random_bijection(6, rng);
            const BijectionMatrix tau = twtest::random_bijection(6, rng);
            const auto joint = stww_matrix_exact(joint_composition_matrix(sigma, tau));
            REQUIRE(joint.status == SolveStatus::exact);
            const auto out = compose_lift(sigma, tau, joint.certificate);
            CHECK(out.claimed_width <= joint.width * joint.width);
        }
    }
}

TEST_CASE("regular embedding lift") {
    SUBCASE("identity embedding keeps the width") {
        const Graph g = twtest::cycle(5);
        const auto cert = stww_graph_exact(g).certificate;
        std::vector<int> f{0, 1, 2, 3, 4};
        const auto lifted = regular_embedding_lift(g, g, f, 1, cert);
        CHECK(lifted.claimed_width == cert.claimed_width);
    }
    SUBCASE("P4 mapped 2-to-1 onto P2") {
        const Graph h = twtest::path(4);
        const Graph g = twtest::path(2);
        const auto cert = stww_graph_exact(g).certificate;
        const auto lifted = regular_embedding_lift(h, g, {0, 0, 1, 1}, 2, cert);
        const int w = cert.claimed_width;
        CHECK(lifted.claimed_width <= 2 * w * w + 1);
        CHECK(verify_partition_sequence(h, lifted) == lifted.claimed_width);
    }
    SUBCASE("subgraph inclusion with lambda = 1") {
        const Graph g = twtest::complete(4);
        const Graph h = Graph::simple(4, {{0, 1}, {2, 3}});
        const auto cert = stww_graph_exact(g).certificate;
        const auto lifted = regular_embedding_lift(h, g, {0, 1, 2, 3}, 1, cert);
        CHECK(lifted.claimed_width <= cert.claimed_width);
    }
    SUBCASE("violated regularity names the condition") {
        const Graph h = twtest::path(3);
        const Graph g = Graph::simple(3, {{0, 1}});  // vertex 2 isolated
        const auto cert = stww_graph_exact(g).certificate;
        CHECK_THROWS_WITH_AS(regular_embedding_lift(h, g, {0, 0, 2}, 2, cert),
                             doctest::Contains("Lipschitz"), ArgumentError);
        CHECK_THROWS_WITH_AS(regular_embedding_lift(h, g, {0, 0, 0}, 2, cert),
                             doctest::Contains("fiber"), ArgumentError);
    }
}

}  // TEST_SUITE
