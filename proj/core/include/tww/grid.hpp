#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/matrix.hpp"

namespace tww {

// A k x k division with one witnessing 1-entry per zone.
struct GridWitness {
    int k = 0;
    std::vector<int> row_cuts, col_cuts;
    std::vector<std::pair<int, int>> points;  // row-major per zone (i, j)

    // Re-checks the induced division: every witness inside its zone and a 1.
    bool verify(const Matrix& m) const;
};

// Point-based search over the k^2-witness characterisation (layer-separated
// rows/columns); prunes by monotonicity. Exhaustive division enumeration
// lives in oracle.hpp as the independent check.
std::optional<GridWitness> contains_k_grid(const Matrix& m, int k);

// Largest k with a k-grid; 0 for the zero matrix.
int grid_number_matrix(const Matrix& m);

// Adjacency matrix of g under the given vertex order (order[rank] = vertex).
Matrix adjacency_matrix(const Graph& g, const std::vector<int>& order);

enum class GnMode { exact, heuristic };

struct GraphGridResult {
    int gn = 0;
    std::vector<int> order;  // witnessing vertex order
    bool exact = false;
};

// Exact mode enumerates all n! orders (n <= 8); heuristic mode uses a BFS
// order from a max-degree root followed by adjacent-swap hill climbing and
// returns a certified upper bound.
GraphGridResult grid_number_graph(const Graph& g, GnMode mode, int threads = 1);

// Matrix over colors 1..r.
struct ColorMatrix {
    int size = 0;
    std::vector<std::vector<int>> cells;  // size x size
};

struct MonoGrid {
    std::vector<int> rows, cols;  // k selected row/col indices, increasing
    int color = 0;
};

// k x k single-colored submatrix of an l x l r-colored matrix, l >= r^{rk}.
// Iterated pigeonhole first; bounded per-color search as fallback. Refuses
// l below the threshold.
MonoGrid monochromatic_grid(const ColorMatrix& c, int r, int k);

// Serialisation for the CLI: {"kind":"grid_witness", k, row_cuts, col_cuts,
// points}.
std::string to_json_text(const GridWitness& w);

}  // namespace tww
