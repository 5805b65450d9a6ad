#include "tww/solver.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "tww/errors.hpp"

namespace tww {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    std::optional<Clock::time_point> deadline;

    explicit BudgetState(const Budget& b) : max_nodes(b.max_nodes) {
        if (b.wall) deadline = Clock::now() + *b.wall;
    }
    // True when the budget is gone.
    bool tick() {
        ++nodes;
        if (nodes > max_nodes) return true;
        if (deadline && (nodes & 1023) == 0 && Clock::now() > *deadline) return true;
        return false;
    }
};

enum class Dfs { found, exhausted, aborted };

// ---------------------------------------------------------------- graphs ---

struct PartState {
    // Parallel arrays over live parts, kept sorted by part id (= min vertex).
    std::vector<std::uint64_t> masks;  // vertex sets
    std::vector<std::uint64_t> nbr;    // union of member adjacencies
    std::vector<int> ids;
};

struct VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (std::uint64_t x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

int state_max_degree(const PartState& st) {
    const std::size_t p = st.masks.size();
    int width = 0;
    for (std::size_t i = 0; i < p; ++i) {
        int deg = 0;
        for (std::size_t j = 0; j < p; ++j)
            if (i != j && (st.nbr[i] & st.masks[j])) ++deg;
        width = std::max(width, deg);
    }
    return width;
}

// Degree of the quotient after merging parts at positions i < j; early exit
// once some degree exceeds `cap` (returns cap + 1 then).
int merged_max_degree(const PartState& st, std::size_t i, std::size_t j, int cap) {
    const std::size_t p = st.masks.size();
    const std::uint64_t mmask = st.masks[i] | st.masks[j];
    const std::uint64_t mnbr = st.nbr[i] | st.nbr[j];
    int width = 0;
    int mdeg = 0;
    for (std::size_t k = 0; k < p; ++k) {
        if (k == i || k == j) continue;
        int deg = 0;
        for (std::size_t l = 0; l < p; ++l) {
            if (l == k || l == i || l == j) continue;
            if (st.nbr[k] & st.masks[l]) ++deg;
        }
        if (st.nbr[k] & mmask) ++deg;
        if (mnbr & st.masks[k]) ++mdeg;
        width = std::max(width, deg);
        if (width > cap) return cap + 1;
    }
    width = std::max(width, mdeg);
    return width;
}

PartState merge_parts(const PartState& st, std::size_t i, std::size_t j) {
    PartState out;
    const std::size_t p = st.masks.size();
    out.masks.reserve(p - 1);
    out.nbr.reserve(p - 1);
    out.ids.reserve(p - 1);
    for (std::size_t k = 0; k < p; ++k) {
        if (k == j) continue;
        if (k == i) {
            out.masks.push_back(st.masks[i] | st.masks[j]);
            out.nbr.push_back(st.nbr[i] | st.nbr[j]);
            out.ids.push_back(std::min(st.ids[i], st.ids[j]));
        } else {
            out.masks.push_back(st.masks[k]);
            out.nbr.push_back(st.nbr[k]);
            out.ids.push_back(st.ids[k]);
        }
    }
    return out;
}

struct GraphSearch {
    int bound;
    BudgetState& budget;
    std::unordered_set<std::vector<std::uint64_t>, VecHash> failed;
    std::vector<std::pair<int, int>> path;

    GraphSearch(int t, BudgetState& b) : bound(t), budget(b) {}

    Dfs dfs(const PartState& st) {
        if (st.masks.size() <= 1) return Dfs::found;
        if (budget.tick()) return Dfs::aborted;
        if (failed.contains(st.masks)) return Dfs::exhausted;

        // Children ordered by resulting quotient degree, ties in lexicographic
        // part order; this keeps the search deterministic.
        const std::size_t p = st.masks.size();
        std::vector<std::tuple<int, int, int>> children;  // (degree, i, j)
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i + 1; j < p; ++j) {
                const int d = merged_max_degree(st, i, j, bound);
                if (d <= bound) children.emplace_back(d, static_cast<int>(i), static_cast<int>(j));
            }
        std::sort(children.begin(), children.end());
        bool aborted = false;
        for (const auto& [d, i, j] : children) {
            path.emplace_back(st.ids[static_cast<std::size_t>(i)], st.ids[static_cast<std::size_t>(j)]);
            const Dfs r = dfs(merge_parts(st, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            if (r == Dfs::found) return r;
            path.pop_back();
            if (r == Dfs::aborted) {
                aborted = true;
                break;
            }
        }
        if (aborted) return Dfs::aborted;
        failed.insert(st.masks);
        return Dfs::exhausted;
    }
};

PartState initial_state(const Graph& g) {
    const int n = g.vertex_count();
    PartState st;
    st.masks.resize(static_cast<std::size_t>(n));
    st.nbr.resize(static_cast<std::size_t>(n));
    st.ids.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        st.masks[static_cast<std::size_t>(v)] = 1ULL << v;
        st.ids[static_cast<std::size_t>(v)] = v;
        std::uint64_t nb = 0;
        for (int w : g.neighbors(v)) nb |= 1ULL << w;
        st.nbr[static_cast<std::size_t>(v)] = nb;
    }
    return st;
}

}  // namespace

GraphSolveResult stww_graph_heuristic(const Graph& g) {
    const int n = g.vertex_count();
    GraphSolveResult res;
    res.status = SolveStatus::heuristic;
    if (n == 0) return res;

    // Adjacency between parts as sorted sets keyed by part id (= min vertex).
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    std::vector<char> live(static_cast<std::size_t>(n), 1);
    std::vector<int> order_live;
    for (int v = 0; v < n; ++v) order_live.push_back(v);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    int width = 0;
    for (int v = 0; v < n; ++v) width = std::max(width, static_cast<int>(adj[static_cast<std::size_t>(v)].size()));

    auto merged_degree = [&](int a, int b) {
        std::size_t cnt = 0;
        const auto& sa = adj[static_cast<std::size_t>(a)];
        const auto& sb = adj[static_cast<std::size_t>(b)];
        for (int x : sa)
            if (x != b) ++cnt;
        for (int x : sb)
            if (x != a && !sa.contains(x)) ++cnt;
        return static_cast<int>(cnt);
    };

    while (order_live.size() > 1) {
        // Lowest-degree live part, ties by id.
        int best_p = -1, best_deg = -1;
        for (int p : order_live) {
            const int d = static_cast<int>(adj[static_cast<std::size_t>(p)].size());
            if (best_p < 0 || d < best_deg) {
                best_p = p;
                best_deg = d;
            }
        }
        // Candidates within two hops of best_p, else the next live part.
        std::set<int> cand;
        for (int q : adj[static_cast<std::size_t>(best_p)]) {
            cand.insert(q);
            for (int r : adj[static_cast<std::size_t>(q)])
                if (r != best_p) cand.insert(r);
        }
        if (cand.empty()) {
            for (int p : order_live)
                if (p != best_p) {
                    cand.insert(p);
                    break;
                }
        }
        int pick = -1, pick_score = -1;
        for (int q : cand) {
            const int s = merged_degree(best_p, q);
            if (pick < 0 || s < pick_score || (s == pick_score && q < pick)) {
                pick = q;
                pick_score = s;
            }
        }
        const int target = std::min(best_p, pick);
        const int other = std::max(best_p, pick);
        res.certificate.merges.emplace_back(best_p, pick);
        for (int x : adj[static_cast<std::size_t>(other)]) {
            adj[static_cast<std::size_t>(x)].erase(other);
            if (x != target) {
                adj[static_cast<std::size_t>(x)].insert(target);
                adj[static_cast<std::size_t>(target)].insert(x);
            }
        }
        adj[static_cast<std::size_t>(target)].erase(other);
        adj[static_cast<std::size_t>(other)].clear();
        live[static_cast<std::size_t>(other)] = 0;
        order_live.erase(std::remove(order_live.begin(), order_live.end(), other), order_live.end());
        for (int p : order_live) width = std::max(width, static_cast<int>(adj[static_cast<std::size_t>(p)].size()));
    }
    res.width = width;
    res.certificate.claimed_width = width;
    return res;
}

GraphSolveResult stww_graph_exact(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    if (n > 62) throw ArgumentError("exact solver supports n <= 62");
    GraphSolveResult best = stww_graph_heuristic(g);
    best.status = SolveStatus::exact;
    if (n <= 1) return best;

    BudgetState bs(budget);
    const int lb = g.max_degree();
    const PartState root = initial_state(g);
    for (int t = lb; t < best.width; ++t) {
        GraphSearch search(t, bs);
        const Dfs r = search.dfs(root);
        if (r == Dfs::found) {
            best.width = t;
            best.certificate.merges = search.path;
            best.certificate.claimed_width = t;
            break;
        }
        if (r == Dfs::aborted) {
            best.status = SolveStatus::budget_exhausted;
            break;
        }
    }
    best.nodes = bs.nodes;
    return best;
}

// --------------------------------------------------------------- matrices ---

namespace {

struct MatrixContext {
    int rows, cols;
    std::vector<std::vector<int>> prefix;  // 2D prefix sums of 1-entries
};

MatrixContext make_context(const Matrix& m) {
    MatrixContext ctx;
    ctx.rows = m.row_count();
    ctx.cols = m.col_count();
    ctx.prefix.assign(static_cast<std::size_t>(ctx.rows) + 1,
                      std::vector<int>(static_cast<std::size_t>(ctx.cols) + 1, 0));
    for (const auto& [i, j] : m.ones()) ++ctx.prefix[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j) + 1];
    for (std::size_t i = 1; i < ctx.prefix.size(); ++i)
        for (std::size_t j = 1; j < ctx.prefix[i].size(); ++j)
            ctx.prefix[i][j] += ctx.prefix[i - 1][j] + ctx.prefix[i][j - 1] - ctx.prefix[i - 1][j - 1];
    return ctx;
}

// Cut sets as bitmasks: bit p-1 set = cut at position p present.
struct CutState {
    std::uint64_t row_cuts, col_cuts;
    bool operator==(const CutState&) const = default;
};

struct CutHash {
    std::size_t operator()(const CutState& s) const {
        return std::hash<std::uint64_t>()(s.row_cuts * 0x9e3779b97f4a7c15ULL) ^
               std::hash<std::uint64_t>()(s.col_cuts);
    }
};

std::vector<int> cuts_from_mask(std::uint64_t mask) {
    std::vector<int> cuts;
    for (int p = 1; mask; ++p, mask >>= 1)
        if (mask & 1) cuts.push_back(p);
    return cuts;
}

int cut_max_degree(const MatrixContext& ctx, std::uint64_t rmask, std::uint64_t cmask, int cap) {
    const auto riv = Division::intervals(cuts_from_mask(rmask), ctx.rows);
    const auto civ = Division::intervals(cuts_from_mask(cmask), ctx.cols);
    auto nonzero = [&](int rlo, int rhi, int clo, int chi) {
        return ctx.prefix[static_cast<std::size_t>(rhi)][static_cast<std::size_t>(chi)] -
                   ctx.prefix[static_cast<std::size_t>(rlo)][static_cast<std::size_t>(chi)] -
                   ctx.prefix[static_cast<std::size_t>(rhi)][static_cast<std::size_t>(clo)] +
                   ctx.prefix[static_cast<std::size_t>(rlo)][static_cast<std::size_t>(clo)] >
               0;
    };
    int width = 0;
    std::vector<int> col_deg(civ.size(), 0);
    for (const auto& [rlo, rhi] : riv) {
        int row_deg = 0;
        for (std::size_t j = 0; j < civ.size(); ++j)
            if (nonzero(rlo, rhi, civ[j].first, civ[j].second)) {
                ++row_deg;
                if (++col_deg[j] > cap) return cap + 1;
            }
        if (row_deg > cap) return cap + 1;
        width = std::max(width, row_deg);
    }
    for (int d : col_deg) width = std::max(width, d);
    return width;
}

struct MatrixSearch {
    const MatrixContext& ctx;
    int bound;
    BudgetState& budget;
    std::unordered_set<CutState, CutHash> failed;
    std::vector<DivisionSequence::Step> path;

    MatrixSearch(const MatrixContext& c, int t, BudgetState& b) : ctx(c), bound(t), budget(b) {}

    Dfs dfs(CutState st) {
        if (st.row_cuts == 0 && st.col_cuts == 0) return Dfs::found;
        if (budget.tick()) return Dfs::aborted;
        if (failed.contains(st)) return Dfs::exhausted;

        std::vector<std::tuple<int, int, int>> children;  // (degree, axis, position)
        for (int axis = 0; axis < 2; ++axis) {
            const std::uint64_t mask = axis == 0 ? st.row_cuts : st.col_cuts;
            for (std::uint64_t m = mask; m; m &= m - 1) {
                const int bit = std::countr_zero(m);
                const std::uint64_t nr = axis == 0 ? (st.row_cuts & ~(1ULL << bit)) : st.row_cuts;
                const std::uint64_t nc = axis == 1 ? (st.col_cuts & ~(1ULL << bit)) : st.col_cuts;
                const int d = cut_max_degree(ctx, nr, nc, bound);
                if (d <= bound) children.emplace_back(d, axis, bit + 1);
            }
        }
        std::sort(children.begin(), children.end());
        bool aborted = false;
        for (const auto& [d, axis, pos] : children) {
            path.push_back({axis == 0 ? DivisionSequence::Axis::row : DivisionSequence::Axis::col, pos});
            CutState child = st;
            if (axis == 0)
                child.row_cuts &= ~(1ULL << (pos - 1));
            else
                child.col_cuts &= ~(1ULL << (pos - 1));
            const Dfs r = dfs(child);
            if (r == Dfs::found) return r;
            path.pop_back();
            if (r == Dfs::aborted) {
                aborted = true;
                break;
            }
        }
        if (aborted) return Dfs::aborted;
        failed.insert(st);
        return Dfs::exhausted;
    }
};

}  // namespace

MatrixSolveResult stww_matrix_heuristic(const Matrix& m) {
    MatrixSolveResult res;
    res.status = SolveStatus::heuristic;
    const MatrixContext ctx = make_context(m);
    std::uint64_t rmask = m.row_count() >= 2 ? (1ULL << (m.row_count() - 1)) - 1 : 0;
    std::uint64_t cmask = m.col_count() >= 2 ? (1ULL << (m.col_count() - 1)) - 1 : 0;
    if (m.row_count() > 63 || m.col_count() > 63)
        throw ArgumentError("matrix heuristic supports dimensions <= 63");
    const int inf_cap = m.row_count() + m.col_count() + 1;
    int width = cut_max_degree(ctx, rmask, cmask, inf_cap);
    while (rmask || cmask) {
        int best_deg = -1, best_axis = -1, best_pos = -1;
        for (int axis = 0; axis < 2; ++axis) {
            const std::uint64_t mask = axis == 0 ? rmask : cmask;
            for (std::uint64_t mm = mask; mm; mm &= mm - 1) {
                const int bit = std::countr_zero(mm);
                const std::uint64_t nr = axis == 0 ? (rmask & ~(1ULL << bit)) : rmask;
                const std::uint64_t nc = axis == 1 ? (cmask & ~(1ULL << bit)) : cmask;
                const int d = cut_max_degree(ctx, nr, nc, inf_cap);
                if (best_deg < 0 || d < best_deg) {
                    best_deg = d;
                    best_axis = axis;
                    best_pos = bit + 1;
                }
            }
        }
        if (best_axis == 0)
            rmask &= ~(1ULL << (best_pos - 1));
        else
            cmask &= ~(1ULL << (best_pos - 1));
        width = std::max(width, best_deg);
        res.certificate.merges.push_back(
            {best_axis == 0 ? DivisionSequence::Axis::row : DivisionSequence::Axis::col, best_pos});
    }
    res.width = width;
    res.certificate.claimed_width = width;
    return res;
}

MatrixSolveResult stww_matrix_exact(const Matrix& m, const Budget& budget) {
    if (m.row_count() > 63 || m.col_count() > 63)
        throw ArgumentError("exact matrix solver supports dimensions <= 63");
    MatrixSolveResult best = stww_matrix_heuristic(m);
    best.status = SolveStatus::exact;
    if (m.ones().empty()) {
        // Any removal order works and the width is 0.
        best.width = 0;
        best.certificate.claimed_width = 0;
        return best;
    }
    BudgetState bs(budget);
    const MatrixContext ctx = make_context(m);
    CutState root{m.row_count() >= 2 ? (1ULL << (m.row_count() - 1)) - 1 : 0,
                  m.col_count() >= 2 ? (1ULL << (m.col_count() - 1)) - 1 : 0};
    const int lb = m.max_degree();
    for (int t = lb; t < best.width; ++t) {
        MatrixSearch search(ctx, t, bs);
        const Dfs r = search.dfs(root);
        if (r == Dfs::found) {
            best.width = t;
            best.certificate.merges = search.path;
            best.certificate.claimed_width = t;
            break;
        }
        if (r == Dfs::aborted) {
            best.status = SolveStatus::budget_exhausted;
            break;
        }
    }
    best.nodes = bs.nodes;
    return best;
}

std::optional<bool> stww_matrix_at_most(const Matrix& m, int t, const Budget& budget) {
    if (m.row_count() > 63 || m.col_count() > 63)
        throw ArgumentError("exact matrix solver supports dimensions <= 63");
    BudgetState bs(budget);
    const MatrixContext ctx = make_context(m);
    CutState root{m.row_count() >= 2 ? (1ULL << (m.row_count() - 1)) - 1 : 0,
                  m.col_count() >= 2 ? (1ULL << (m.col_count() - 1)) - 1 : 0};
    if (cut_max_degree(ctx, root.row_cuts, root.col_cuts, t) > t) return false;
    MatrixSearch search(ctx, t, bs);
    const Dfs r = search.dfs(root);
    if (r == Dfs::aborted) return std::nullopt;
    return r == Dfs::found;
}

}  // namespace tww
