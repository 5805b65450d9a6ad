#include "tww/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

#include "json.hpp"
#include "tww/errors.hpp"
#include "tww/parallel.hpp"

namespace tww {

bool GridWitness::verify(const Matrix& m) const {
    if (k < 1) return false;
    if (static_cast<int>(row_cuts.size()) != k - 1 || static_cast<int>(col_cuts.size()) != k - 1)
        return false;
    if (static_cast<int>(points.size()) != k * k) return false;
    for (std::size_t i = 1; i < row_cuts.size(); ++i)
        if (row_cuts[i] <= row_cuts[i - 1]) return false;
    for (std::size_t i = 1; i < col_cuts.size(); ++i)
        if (col_cuts[i] <= col_cuts[i - 1]) return false;
    const auto riv = Division::intervals(row_cuts, m.row_count());
    const auto civ = Division::intervals(col_cuts, m.col_count());
    if (static_cast<int>(riv.size()) != k || static_cast<int>(civ.size()) != k) return false;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const auto [r, c] = points[static_cast<std::size_t>(i * k + j)];
            if (r < riv[static_cast<std::size_t>(i)].first || r >= riv[static_cast<std::size_t>(i)].second) return false;
            if (c < civ[static_cast<std::size_t>(j)].first || c >= civ[static_cast<std::size_t>(j)].second) return false;
            if (!m.at(r, c)) return false;
        }
    return true;
}

namespace {

struct GridSearch {
    int k;
    int rows, cols;
    const std::vector<std::vector<int>>* cols_of_row;  // sorted 1-columns per row

    std::vector<std::pair<int, int>> chosen;  // layer-major points
    std::vector<int> col_min, col_max;        // per col layer; -1 = empty
    std::vector<int> layer_max_row;           // per completed row layer

    bool place(int i, int j, int row_low, int cur_max_row) {
        if (j == k) {
            layer_max_row.push_back(cur_max_row);
            if (i + 1 == k) return true;
            if (place(i + 1, 0, cur_max_row + 1, -1)) return true;
            layer_max_row.pop_back();
            return false;
        }
        // Leave at least one row for each later layer.
        const int row_hi = rows - (k - i - 1);
        const int clow = j == 0 ? 0 : col_max[static_cast<std::size_t>(j) - 1] + 1;
        const int chigh = (j + 1 < k && col_min[static_cast<std::size_t>(j) + 1] >= 0)
                              ? col_min[static_cast<std::size_t>(j) + 1]
                              : cols;
        // Later col layers need room to the right of this layer's minimum.
        for (int r = row_low; r < row_hi; ++r) {
            for (int c : (*cols_of_row)[static_cast<std::size_t>(r)]) {
                if (c < clow) continue;
                if (c >= chigh) break;
                const int old_min = col_min[static_cast<std::size_t>(j)];
                const int old_max = col_max[static_cast<std::size_t>(j)];
                // Later col layers each need a column to the right of this layer.
                if (std::max(old_max, c) + (k - 1 - j) > cols - 1) continue;
                col_min[static_cast<std::size_t>(j)] = old_min < 0 ? c : std::min(old_min, c);
                col_max[static_cast<std::size_t>(j)] = std::max(old_max, c);
                chosen.emplace_back(r, c);
                if (place(i, j + 1, row_low, std::max(cur_max_row, r))) return true;
                chosen.pop_back();
                col_min[static_cast<std::size_t>(j)] = old_min;
                col_max[static_cast<std::size_t>(j)] = old_max;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<GridWitness> contains_k_grid(const Matrix& m, int k) {
    if (k < 1) throw ArgumentError("grid size must be >= 1");
    if (m.row_count() < k || m.col_count() < k) return std::nullopt;
    if (static_cast<int>(m.ones().size()) < k * k) return std::nullopt;
    std::vector<std::vector<int>> cols_of_row(static_cast<std::size_t>(m.row_count()));
    for (const auto& [i, j] : m.ones()) cols_of_row[static_cast<std::size_t>(i)].push_back(j);

    GridSearch s;
    s.k = k;
    s.rows = m.row_count();
    s.cols = m.col_count();
    s.cols_of_row = &cols_of_row;
    s.col_min.assign(static_cast<std::size_t>(k), -1);
    s.col_max.assign(static_cast<std::size_t>(k), -1);
    if (!s.place(0, 0, 0, -1)) return std::nullopt;

    GridWitness w;
    w.k = k;
    w.points = s.chosen;
    for (int i = 0; i + 1 < k; ++i) w.row_cuts.push_back(s.layer_max_row[static_cast<std::size_t>(i)] + 1);
    for (int j = 0; j + 1 < k; ++j) w.col_cuts.push_back(s.col_max[static_cast<std::size_t>(j)] + 1);
    return w;
}

int grid_number_matrix(const Matrix& m) {
    const int cap = std::min({m.row_count(), m.col_count(),
                              static_cast<int>(std::sqrt(static_cast<double>(m.ones().size())) + 1)});
    int gn = 0;
    while (gn < cap && contains_k_grid(m, gn + 1)) ++gn;
    return gn;
}

Matrix adjacency_matrix(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw ArgumentError("order length != n");
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    std::vector<std::pair<int, int>> ones;
    for (const auto& [u, v] : g.edges()) {
        const int a = rank[static_cast<std::size_t>(u)], b = rank[static_cast<std::size_t>(v)];
        ones.emplace_back(a, b);
        ones.emplace_back(b, a);
    }
    return Matrix(n, n, std::move(ones));
}

namespace {

std::vector<int> bfs_order_from_max_degree(const Graph& g) {
    const int n = g.vertex_count();
    int root = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(root)) root = v;
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    // BFS component by component, starting from the chosen root.
    std::vector<int> queue;
    auto run = [&](int s) {
        queue.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const int u = queue[h];
            order.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
        queue.clear();
    };
    if (n > 0) run(root);
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)]) run(v);
    return order;
}

}  // namespace

GraphGridResult grid_number_graph(const Graph& g, GnMode mode, int threads) {
    const int n = g.vertex_count();
    GraphGridResult res;
    if (n == 0) {
        res.exact = true;
        return res;
    }
    if (mode == GnMode::exact) {
        if (n > 8) throw ArgumentError("exact grid number enumerates all orders, n <= 8");
        struct Best {
            int gn = std::numeric_limits<int>::max();
            std::uint64_t rank = 0;
        };
        const std::uint64_t total = factorial(n);
        const Best best = parallel_index_reduce<Best>(
            total, threads, Best{},
            [&](std::uint64_t r) {
                const auto order = unrank_permutation(n, r);
                return Best{grid_number_matrix(adjacency_matrix(g, order)), r};
            },
            [](const Best& a, const Best& b) {
                if (b.gn < a.gn || (b.gn == a.gn && b.rank < a.rank)) return b;
                return a;
            });
        res.gn = best.gn;
        res.order = unrank_permutation(n, best.rank);
        res.exact = true;
        return res;
    }
    // Heuristic: BFS order from a max-degree root, then adjacent-swap descent.
    std::vector<int> order = bfs_order_from_max_degree(g);
    int gn = grid_number_matrix(adjacency_matrix(g, order));
    bool improved = true;
    int passes = 0;
    while (improved && passes < 2 * n) {
        improved = false;
        ++passes;
        for (int p = 0; p + 1 < n; ++p) {
            std::swap(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(p) + 1]);
            const int cand = grid_number_matrix(adjacency_matrix(g, order));
            if (cand < gn) {
                gn = cand;
                improved = true;
            } else {
                std::swap(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(p) + 1]);
            }
        }
    }
    res.gn = gn;
    res.order = order;
    res.exact = false;
    return res;
}

namespace {

// r^(r*k) with overflow saturation.
long long ramsey_threshold(int r, int k) {
    long long t = 1;
    for (int i = 0; i < r * k; ++i) {
        if (t > std::numeric_limits<long long>::max() / r) return std::numeric_limits<long long>::max();
        t *= r;
    }
    return t;
}

bool mono_search_color(const ColorMatrix& c, int color, int k, std::vector<int>& rows_out,
                       std::vector<int>& cols_out) {
    const int l = c.size;
    // DFS over increasing rows, tracking columns matching `color` on all
    // chosen rows so far.
    std::vector<int> chosen;
    std::vector<std::vector<int>> cand_stack;
    std::vector<int> all(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) all[static_cast<std::size_t>(j)] = j;
    std::function<bool(int, const std::vector<int>&)> dfs = [&](int from, const std::vector<int>& cand) {
        if (static_cast<int>(chosen.size()) == k) {
            rows_out = chosen;
            cols_out.assign(cand.begin(), cand.begin() + k);
            return true;
        }
        for (int r = from; r <= l - (k - static_cast<int>(chosen.size())); ++r) {
            std::vector<int> next;
            for (int j : cand)
                if (c.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] == color) next.push_back(j);
            if (static_cast<int>(next.size()) < k) continue;
            chosen.push_back(r);
            if (dfs(r + 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(0, all);
}

}  // namespace

MonoGrid monochromatic_grid(const ColorMatrix& c, int r, int k) {
    if (r < 2) throw ArgumentError("monochromatic_grid requires r >= 2");
    if (k < 1) throw ArgumentError("monochromatic_grid requires k >= 1");
    const int l = c.size;
    if (static_cast<int>(c.cells.size()) != l) throw StructuralError("color matrix size mismatch");
    for (const auto& row : c.cells) {
        if (static_cast<int>(row.size()) != l) throw StructuralError("color matrix row size mismatch");
        for (int v : row)
            if (v < 1 || v > r) throw StructuralError("color out of range 1..r");
    }
    if (static_cast<long long>(l) < ramsey_threshold(r, k))
        throw ArgumentError("matrix side below the r^(rk) threshold; pad or fail");

    // Iterated pigeonhole: scan columns, keep the majority color class of the
    // surviving rows; some color is selected k times within r(k-1)+1 columns.
    std::vector<int> rows(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) rows[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> picked_cols(static_cast<std::size_t>(r) + 1);
    for (int col = 0; col < l; ++col) {
        std::vector<int> count(static_cast<std::size_t>(r) + 1, 0);
        for (int i : rows) ++count[static_cast<std::size_t>(c.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)])];
        int maj = 1;
        for (int col_color = 2; col_color <= r; ++col_color)
            if (count[static_cast<std::size_t>(col_color)] > count[static_cast<std::size_t>(maj)]) maj = col_color;
        std::vector<int> survivors;
        for (int i : rows)
            if (c.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] == maj) survivors.push_back(i);
        rows = std::move(survivors);
        picked_cols[static_cast<std::size_t>(maj)].push_back(col);
        if (static_cast<int>(picked_cols[static_cast<std::size_t>(maj)].size()) == k) {
            if (static_cast<int>(rows.size()) >= k) {
                MonoGrid out;
                out.color = maj;
                out.cols = picked_cols[static_cast<std::size_t>(maj)];
                out.rows.assign(rows.begin(), rows.begin() + k);
                return out;
            }
            break;  // pigeonhole ran out of rows; fall through to direct search
        }
    }
    for (int color = 1; color <= r; ++color) {
        MonoGrid out;
        out.color = color;
        if (mono_search_color(c, color, k, out.rows, out.cols)) return out;
    }
    throw StructuralError("no monochromatic k x k submatrix found above the r^(rk) threshold");
}

std::string to_json_text(const GridWitness& w) {
    nlohmann::ordered_json j;
    j["kind"] = "grid_witness";
    j["k"] = w.k;
    j["row_cuts"] = w.row_cuts;
    j["col_cuts"] = w.col_cuts;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& [r, c] : w.points) j["points"].push_back({r, c});
    return j.dump(2) + "\n";
}

}  // namespace tww
