#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "tww/certificate.hpp"
#include "tww/graph.hpp"
#include "tww/matrix.hpp"

namespace tww {

// Node-count plus optional wall-clock limit. Results are deterministic for a
// fixed node budget; the wall-clock limit is exempt from determinism.
struct Budget {
    std::uint64_t max_nodes = 200'000'000;
    std::optional<std::chrono::milliseconds> wall;
};

enum class SolveStatus { exact, heuristic, budget_exhausted };

struct GraphSolveResult {
    int width = 0;
    PartitionSequence certificate;
    SolveStatus status = SolveStatus::exact;
    std::uint64_t nodes = 0;
};

struct MatrixSolveResult {
    int width = 0;
    DivisionSequence certificate;
    SolveStatus status = SolveStatus::exact;
    std::uint64_t nodes = 0;
};

// Exact strict twin-width by iterative-deepening branch and bound, memoized
// on canonical partition states (parts sorted by min element). On budget
// exhaustion returns the best certified upper bound, never a guess.
// Practical up to n ~ 20.
GraphSolveResult stww_graph_exact(const Graph& g, const Budget& budget = {});

// Exact strict twin-width of an ordered matrix over division sequences.
// Practical up to ~16x16 (more when the width is small).
MatrixSolveResult stww_matrix_exact(const Matrix& m, const Budget& budget = {});

// Decision variant: is stww(m) <= t within the budget? nullopt = budget ran
// out before the question was settled.
std::optional<bool> stww_matrix_at_most(const Matrix& m, int t, const Budget& budget = {});

// Greedy certified upper bounds for large instances; the certificate always
// verifies, the width is >= the exact value.
GraphSolveResult stww_graph_heuristic(const Graph& g);
MatrixSolveResult stww_matrix_heuristic(const Matrix& m);

}  // namespace tww
