#include "tww/queue.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "tww/errors.hpp"
#include "tww/parallel.hpp"

namespace tww {

namespace {

std::vector<int> ranks_of(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n) throw StructuralError("order length != n");
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        const int v = order[static_cast<std::size_t>(r)];
        if (v < 0 || v >= n || rank[static_cast<std::size_t>(v)] != -1)
            throw StructuralError("order is not a permutation");
        rank[static_cast<std::size_t>(v)] = r;
    }
    return rank;
}

// Strictly nested under the order: one interval strictly inside the other.
bool nested(std::pair<int, int> a, std::pair<int, int> b, const std::vector<int>& rank) {
    int a1 = rank[static_cast<std::size_t>(a.first)], a2 = rank[static_cast<std::size_t>(a.second)];
    int b1 = rank[static_cast<std::size_t>(b.first)], b2 = rank[static_cast<std::size_t>(b.second)];
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b2 < a2) || (b1 < a1 && a2 < b2);
}

bool share_endpoint(std::pair<int, int> a, std::pair<int, int> b) {
    return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

}  // namespace

LayoutCheck verify_layout(const Graph& g, const QueueLayout& l) {
    const auto rank = ranks_of(l.order, g.vertex_count());
    std::map<std::pair<int, int>, int> cover;
    for (const auto& cls : l.classes)
        for (auto [u, v] : cls) {
            if (u > v) std::swap(u, v);
            if (!g.adjacent(u, v)) throw StructuralError("layout contains a non-edge");
            if (++cover[{u, v}] > 1) throw StructuralError("edge covered twice");
        }
    if (static_cast<int>(cover.size()) != g.edge_count())
        throw StructuralError("layout does not cover every edge");

    LayoutCheck res;
    res.queues = static_cast<int>(l.classes.size());
    for (std::size_t c = 0; c < l.classes.size(); ++c) {
        const auto& cls = l.classes[c];
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                if (nested(cls[i], cls[j], rank)) {
                    res.violation = {static_cast<int>(c), cls[i], cls[j], "nested"};
                    return res;
                }
                if (l.strict && share_endpoint(cls[i], cls[j])) {
                    res.violation = {static_cast<int>(c), cls[i], cls[j], "shared endpoint"};
                    return res;
                }
            }
    }
    res.ok = true;
    return res;
}

namespace {

// Exact graph coloring by iterative deepening over the color count, with a
// greedy clique lower bound. Vertices are conflict-graph nodes (= edges of
// the original graph).
struct Coloring {
    int count = 0;
    std::vector<int> color;
    bool exact = false;
};

Coloring color_conflicts(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    Coloring res;
    res.color.assign(static_cast<std::size_t>(n), -1);
    if (n == 0) {
        res.exact = true;
        return res;
    }
    // Static order: degree descending, ties by index.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto da = adj[static_cast<std::size_t>(a)].size(), db = adj[static_cast<std::size_t>(b)].size();
        return da != db ? da > db : a < b;
    });
    // Greedy upper bound.
    std::vector<int> greedy(static_cast<std::size_t>(n), -1);
    int ub = 0;
    for (int v : order) {
        std::set<int> used;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (greedy[static_cast<std::size_t>(w)] >= 0) used.insert(greedy[static_cast<std::size_t>(w)]);
        int c = 0;
        while (used.contains(c)) ++c;
        greedy[static_cast<std::size_t>(v)] = c;
        ub = std::max(ub, c + 1);
    }
    // Greedy clique lower bound along the same order.
    int lb = 0;
    {
        std::vector<int> clique;
        for (int v : order) {
            bool all = true;
            for (int w : clique)
                if (std::find(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end(), w) ==
                    adj[static_cast<std::size_t>(v)].end()) {
                    all = false;
                    break;
                }
            if (all) clique.push_back(v);
        }
        lb = static_cast<int>(clique.size());
    }
    if (n > 40) {  // greedy only
        res.count = ub;
        res.color = greedy;
        res.exact = (ub == lb);
        return res;
    }
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    std::function<bool(int, int, int)> dfs = [&](int idx, int k, int used) {
        if (idx == n) return true;
        const int v = order[static_cast<std::size_t>(idx)];
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            bool fits = true;
            for (int w : adj[static_cast<std::size_t>(v)])
                if (assign[static_cast<std::size_t>(w)] == c) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            assign[static_cast<std::size_t>(v)] = c;
            if (dfs(idx + 1, k, std::max(used, c + 1))) return true;
            assign[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    for (int k = lb; k <= ub; ++k) {
        std::fill(assign.begin(), assign.end(), -1);
        if (dfs(0, k, 0)) {
            res.count = k;
            res.color = assign;
            res.exact = true;
            return res;
        }
    }
    res.count = ub;
    res.color = greedy;
    res.exact = true;
    return res;
}

FixedOrderResult fixed_order_impl(const Graph& g, const std::vector<int>& order, bool strict) {
    const auto rank = ranks_of(order, g.vertex_count());
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const bool conflict = nested(edges[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(j)], rank) ||
                                  (strict && share_endpoint(edges[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(j)]));
            if (conflict) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    const Coloring col = color_conflicts(adj);
    FixedOrderResult res;
    res.count = m == 0 ? 0 : col.count;
    res.exact = col.exact;
    res.layout.order = order;
    res.layout.strict = strict;
    res.layout.classes.assign(static_cast<std::size_t>(res.count), {});
    for (int i = 0; i < m; ++i)
        res.layout.classes[static_cast<std::size_t>(col.color[static_cast<std::size_t>(i)])].push_back(
            edges[static_cast<std::size_t>(i)]);
    return res;
}

std::vector<int> default_order(const Graph& g) {
    std::vector<int> order;
    for (int v = 0; v < g.vertex_count(); ++v) order.push_back(v);
    return order;
}

QueueNumberResult best_order_impl(const Graph& g, bool strict, int threads) {
    const int n = g.vertex_count();
    QueueNumberResult res;
    if (n == 0) {
        res.exact = true;
        return res;
    }
    if (n <= 8) {
        struct Best {
            int count = std::numeric_limits<int>::max();
            std::uint64_t rank = 0;
        };
        const std::uint64_t total = factorial(n);
        const Best best = parallel_index_reduce<Best>(
            total, threads, Best{},
            [&](std::uint64_t r) {
                return Best{fixed_order_impl(g, unrank_permutation(n, r), strict).count, r};
            },
            [](const Best& a, const Best& b) {
                if (b.count < a.count || (b.count == a.count && b.rank < a.rank)) return b;
                return a;
            });
        FixedOrderResult fixed = fixed_order_impl(g, unrank_permutation(n, best.rank), strict);
        res.count = fixed.count;
        res.layout = fixed.layout;
        res.exact = fixed.exact;
        return res;
    }
    FixedOrderResult fixed = fixed_order_impl(g, default_order(g), strict);
    res.count = fixed.count;
    res.layout = fixed.layout;
    res.exact = false;
    return res;
}

}  // namespace

FixedOrderResult sqn_fixed_order(const Graph& g, const std::vector<int>& order) {
    return fixed_order_impl(g, order, true);
}

FixedOrderResult qn_fixed_order(const Graph& g, const std::vector<int>& order) {
    return fixed_order_impl(g, order, false);
}

QueueNumberResult qn_exact(const Graph& g, int threads) { return best_order_impl(g, false, threads); }
QueueNumberResult sqn_exact(const Graph& g, int threads) { return best_order_impl(g, true, threads); }

QueueLayout strictify_layout(const Graph& g, const QueueLayout& l) {
    const int cap = g.max_degree() + 1;
    QueueLayout out;
    out.order = l.order;
    out.strict = true;
    for (const auto& cls : l.classes) {
        // Proper edge coloring of the class with at most Delta(G)+1 colors;
        // one exists by Vizing since the class is a subgraph of G.
        const int m = static_cast<int>(cls.size());
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (share_endpoint(cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(j)])) {
                    adj[static_cast<std::size_t>(i)].push_back(j);
                    adj[static_cast<std::size_t>(j)].push_back(i);
                }
        const Coloring col = color_conflicts(adj);
        if (col.count > cap)
            throw StructuralError("edge coloring exceeded max_degree + 1 colors");
        std::vector<std::vector<std::pair<int, int>>> split(static_cast<std::size_t>(col.count));
        for (int i = 0; i < m; ++i)
            split[static_cast<std::size_t>(col.color[static_cast<std::size_t>(i)])].push_back(cls[static_cast<std::size_t>(i)]);
        for (auto& part : split)
            if (!part.empty()) out.classes.push_back(std::move(part));
    }
    return out;
}

namespace {

// Kuhn's augmenting-path matching on the strict-dominance DAG.
struct ChainCover {
    std::vector<int> next;  // successor in chain, -1 at chain end
    std::vector<int> prev;
};

ChainCover min_chain_cover(const std::vector<std::pair<int, int>>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (points[static_cast<std::size_t>(i)].first < points[static_cast<std::size_t>(j)].first &&
                points[static_cast<std::size_t>(i)].second < points[static_cast<std::size_t>(j)].second)
                succ[static_cast<std::size_t>(i)].push_back(j);
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);  // j -> i
    std::vector<int> match_left(static_cast<std::size_t>(n), -1);   // i -> j
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int i) {
        for (int j : succ[static_cast<std::size_t>(i)]) {
            if (seen[static_cast<std::size_t>(j)]) continue;
            seen[static_cast<std::size_t>(j)] = 1;
            if (match_right[static_cast<std::size_t>(j)] < 0 || augment(match_right[static_cast<std::size_t>(j)])) {
                match_right[static_cast<std::size_t>(j)] = i;
                match_left[static_cast<std::size_t>(i)] = j;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < n; ++i) {
        seen.assign(static_cast<std::size_t>(n), 0);
        augment(i);
    }
    ChainCover cover;
    cover.next = match_left;
    cover.prev = match_right;
    return cover;
}

}  // namespace

IncreasingDecomposition increasing_decomposition(const Matrix& m) {
    IncreasingDecomposition res;
    const auto& points = m.ones();
    if (points.empty()) return res;
    const ChainCover cover = min_chain_cover(points);
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        if (cover.prev[static_cast<std::size_t>(i)] >= 0) continue;  // not a chain head
        std::vector<std::pair<int, int>> chain;
        for (int cur = i; cur >= 0; cur = cover.next[static_cast<std::size_t>(cur)])
            chain.push_back(points[static_cast<std::size_t>(cur)]);
        res.parts.emplace_back(m.row_count(), m.col_count(), std::move(chain));
    }
    res.count = static_cast<int>(res.parts.size());
    return res;
}

int sqn_matrix(const Matrix& m) { return increasing_decomposition(m).count; }

std::string to_json_text(const QueueLayout& l) {
    nlohmann::ordered_json j;
    j["kind"] = "queue_layout";
    j["order"] = l.order;
    j["strict"] = l.strict;
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& cls : l.classes) {
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (const auto& [u, v] : cls) c.push_back({u, v});
        j["classes"].push_back(c);
    }
    return j.dump(2) + "\n";
}

QueueLayout parse_queue_layout(const std::string& json_text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw IoError(std::string("layout is not valid JSON: ") + e.what());
    }
    if (j.value("kind", "") != "queue_layout") throw IoError("not a queue_layout file");
    QueueLayout l;
    l.order = j.at("order").get<std::vector<int>>();
    l.strict = j.at("strict").get<bool>();
    for (const auto& cls : j.at("classes")) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : cls) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        l.classes.push_back(std::move(edges));
    }
    return l;
}

}  // namespace tww
