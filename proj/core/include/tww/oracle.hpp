#pragma once

#include "tww/graph.hpp"
#include "tww/matrix.hpp"

namespace tww {

// Brute-force ground truth, independent of the solvers: enumerate every merge
// sequence and take the minimum width. A running-max cutoff is the only
// pruning; there is no memoization, no canonical states, no bounds reasoning.
// Refuses instances over the cap.
int oracle_stww_graph(const Graph& g, int cap = 8);
int oracle_stww_matrix(const Matrix& m, int cap = 6);

// Grid detection by exhaustive division enumeration (the test oracle for the
// point-based search).
bool oracle_contains_grid(const Matrix& m, int k);
int oracle_grid_number(const Matrix& m);

}  // namespace tww
