#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/matrix.hpp"

namespace tww {

// Vertex order plus an edge partition; each class must be nesting-free under
// the order, and a matching as well when strict.
struct QueueLayout {
    std::vector<int> order;  // order[rank] = vertex
    std::vector<std::vector<std::pair<int, int>>> classes;
    bool strict = false;
};

struct LayoutViolation {
    int cls = 0;
    std::pair<int, int> edge_a, edge_b;
    std::string reason;  // "nested" or "shared endpoint"
};

struct LayoutCheck {
    bool ok = false;
    int queues = 0;
    std::optional<LayoutViolation> violation;
};

// Structural errors (edge missing / covered twice / unknown) throw; logical
// violations are returned.
LayoutCheck verify_layout(const Graph& g, const QueueLayout& l);

struct FixedOrderResult {
    int count = 0;
    QueueLayout layout;
    bool exact = false;
};

// Minimum (strict) queue count for a fixed order = chromatic number of the
// conflict graph on edges (nested, plus shared endpoints when strict). Exact
// by branch and bound up to ~40 edges, greedy beyond (flagged).
FixedOrderResult sqn_fixed_order(const Graph& g, const std::vector<int>& order);
FixedOrderResult qn_fixed_order(const Graph& g, const std::vector<int>& order);

struct QueueNumberResult {
    int count = 0;
    QueueLayout layout;
    bool exact = false;
};

// Minimum over all vertex orders; exact enumerates n! orders (n <= 8), with a
// BFS-order greedy fallback beyond.
QueueNumberResult qn_exact(const Graph& g, int threads = 1);
QueueNumberResult sqn_exact(const Graph& g, int threads = 1);

// Split each class of a queue layout into matchings with at most
// max_degree + 1 colors, yielding a strict layout of <= (Delta+1) t classes.
QueueLayout strictify_layout(const Graph& g, const QueueLayout& l);

struct IncreasingDecomposition {
    int count = 0;
    std::vector<Matrix> parts;  // superposition reproduces the input exactly
};

// Minimum number of increasing matrices whose superposition is m: a minimum
// chain cover of the 1-entries under strict dominance, via Dilworth (exact at
// every size, bipartite matching underneath).
IncreasingDecomposition increasing_decomposition(const Matrix& m);
int sqn_matrix(const Matrix& m);

// Layout files: {"kind":"queue_layout", order, strict, classes}.
std::string to_json_text(const QueueLayout& l);
QueueLayout parse_queue_layout(const std::string& json_text);

}  // namespace tww
