#include "tww/oracle.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "tww/errors.hpp"

namespace tww {

namespace {

struct OracleGraphState {
    std::vector<std::uint64_t> masks;
    std::vector<std::uint64_t> nbr;
};

int oracle_quotient_degree(const OracleGraphState& st) {
    int width = 0;
    for (std::size_t i = 0; i < st.masks.size(); ++i) {
        int deg = 0;
        for (std::size_t j = 0; j < st.masks.size(); ++j)
            if (i != j && (st.nbr[i] & st.masks[j])) ++deg;
        width = std::max(width, deg);
    }
    return width;
}

void enumerate_graph(OracleGraphState& st, int running, int& best) {
    if (running >= best) return;  // no completion can beat the best
    if (st.masks.size() <= 1) {
        best = running;
        return;
    }
    for (std::size_t i = 0; i < st.masks.size(); ++i) {
        for (std::size_t j = i + 1; j < st.masks.size(); ++j) {
            OracleGraphState child;
            child.masks.reserve(st.masks.size() - 1);
            child.nbr.reserve(st.masks.size() - 1);
            for (std::size_t k = 0; k < st.masks.size(); ++k) {
                if (k == j) continue;
                if (k == i) {
                    child.masks.push_back(st.masks[i] | st.masks[j]);
                    child.nbr.push_back(st.nbr[i] | st.nbr[j]);
                } else {
                    child.masks.push_back(st.masks[k]);
                    child.nbr.push_back(st.nbr[k]);
                }
            }
            enumerate_graph(child, std::max(running, oracle_quotient_degree(child)), best);
        }
    }
}

}  // namespace

int oracle_stww_graph(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap) throw ArgumentError("graph oracle refuses n > " + std::to_string(cap));
    if (n == 0) return 0;
    OracleGraphState st;
    for (int v = 0; v < n; ++v) {
        st.masks.push_back(1ULL << v);
        std::uint64_t nb = 0;
        for (int w : g.neighbors(v)) nb |= 1ULL << w;
        st.nbr.push_back(nb);
    }
    int best = n + 1;
    const int start = oracle_quotient_degree(st);
    // The initial singleton partition counts toward the width.
    if (n == 1) return start;
    enumerate_graph(st, start, best);
    return best;
}

namespace {

struct OracleMatrixState {
    std::vector<int> row_cuts, col_cuts;  // sorted
    int rows, cols;
    const std::vector<std::vector<int>>* prefix;
};

int oracle_cut_degree(const OracleMatrixState& st) {
    const auto riv = Division::intervals(st.row_cuts, st.rows);
    const auto civ = Division::intervals(st.col_cuts, st.cols);
    const auto& p = *st.prefix;
    auto nonzero = [&](int rlo, int rhi, int clo, int chi) {
        return p[static_cast<std::size_t>(rhi)][static_cast<std::size_t>(chi)] -
                   p[static_cast<std::size_t>(rlo)][static_cast<std::size_t>(chi)] -
                   p[static_cast<std::size_t>(rhi)][static_cast<std::size_t>(clo)] +
                   p[static_cast<std::size_t>(rlo)][static_cast<std::size_t>(clo)] >
               0;
    };
    int width = 0;
    std::vector<int> col_deg(civ.size(), 0);
    for (const auto& [rlo, rhi] : riv) {
        int row_deg = 0;
        for (std::size_t j = 0; j < civ.size(); ++j)
            if (nonzero(rlo, rhi, civ[j].first, civ[j].second)) {
                ++row_deg;
                ++col_deg[j];
            }
        width = std::max(width, row_deg);
    }
    for (int d : col_deg) width = std::max(width, d);
    return width;
}

void enumerate_matrix(OracleMatrixState& st, int running, int& best) {
    if (running >= best) return;
    if (st.row_cuts.empty() && st.col_cuts.empty()) {
        best = running;
        return;
    }
    for (int axis = 0; axis < 2; ++axis) {
        auto& cuts = axis == 0 ? st.row_cuts : st.col_cuts;
        for (std::size_t k = 0; k < cuts.size(); ++k) {
            const int removed = cuts[static_cast<std::size_t>(k)];
            cuts.erase(cuts.begin() + static_cast<std::ptrdiff_t>(k));
            enumerate_matrix(st, std::max(running, oracle_cut_degree(st)), best);
            cuts.insert(cuts.begin() + static_cast<std::ptrdiff_t>(k), removed);
        }
    }
}

}  // namespace

int oracle_stww_matrix(const Matrix& m, int cap) {
    if (m.row_count() > cap || m.col_count() > cap)
        throw ArgumentError("matrix oracle refuses dimensions > " + std::to_string(cap));
    if (m.ones().empty()) return 0;
    std::vector<std::vector<int>> prefix(static_cast<std::size_t>(m.row_count()) + 1,
                                         std::vector<int>(static_cast<std::size_t>(m.col_count()) + 1, 0));
    for (const auto& [i, j] : m.ones()) ++prefix[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j) + 1];
    for (std::size_t i = 1; i < prefix.size(); ++i)
        for (std::size_t j = 1; j < prefix[i].size(); ++j)
            prefix[i][j] += prefix[i - 1][j] + prefix[i][j - 1] - prefix[i - 1][j - 1];
    OracleMatrixState st;
    st.rows = m.row_count();
    st.cols = m.col_count();
    st.prefix = &prefix;
    for (int p = 1; p < st.rows; ++p) st.row_cuts.push_back(p);
    for (int p = 1; p < st.cols; ++p) st.col_cuts.push_back(p);
    int best = st.rows + st.cols + 1;
    enumerate_matrix(st, oracle_cut_degree(st), best);
    return best;
}

namespace {

// All ways to choose k-1 cut positions out of 1..size-1.
bool enumerate_cuts(int size, int k, std::vector<int>& cuts,
                    const std::function<bool(const std::vector<int>&)>& found, int from = 1) {
    if (static_cast<int>(cuts.size()) == k - 1) return found(cuts);
    for (int p = from; p <= size - 1; ++p) {
        cuts.push_back(p);
        if (enumerate_cuts(size, k, cuts, found, p + 1)) return true;
        cuts.pop_back();
    }
    return false;
}

}  // namespace

bool oracle_contains_grid(const Matrix& m, int k) {
    if (k < 1) throw ArgumentError("grid size must be >= 1");
    if (m.row_count() < k || m.col_count() < k) return false;
    std::vector<std::vector<int>> prefix(static_cast<std::size_t>(m.row_count()) + 1,
                                         std::vector<int>(static_cast<std::size_t>(m.col_count()) + 1, 0));
    for (const auto& [i, j] : m.ones()) ++prefix[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j) + 1];
    for (std::size_t i = 1; i < prefix.size(); ++i)
        for (std::size_t j = 1; j < prefix[i].size(); ++j)
            prefix[i][j] += prefix[i - 1][j] + prefix[i][j - 1] - prefix[i - 1][j - 1];
    auto nonzero = [&](int rlo, int rhi, int clo, int chi) {
        return prefix[static_cast<std::size_t>(rhi)][static_cast<std::size_t>(chi)] -
                   prefix[static_cast<std::size_t>(rlo)][static_cast<std::size_t>(chi)] -
                   prefix[static_cast<std::size_t>(rhi)][static_cast<std::size_t>(clo)] +
                   prefix[static_cast<std::size_t>(rlo)][static_cast<std::size_t>(clo)] >
               0;
    };
    std::vector<int> rc;
    return enumerate_cuts(m.row_count(), k, rc, [&](const std::vector<int>& row_cuts) {
        std::vector<int> cc;
        return enumerate_cuts(m.col_count(), k, cc, [&](const std::vector<int>& col_cuts) {
            const auto riv = Division::intervals(row_cuts, m.row_count());
            const auto civ = Division::intervals(col_cuts, m.col_count());
            for (const auto& [rlo, rhi] : riv)
                for (const auto& [clo, chi] : civ)
                    if (!nonzero(rlo, rhi, clo, chi)) return false;
            return true;
        });
    });
}

int oracle_grid_number(const Matrix& m) {
    int k = 0;
    while (oracle_contains_grid(m, k + 1)) ++k;
    return k;
}

}  // namespace tww
