#include "tww/construction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>

#include "tww/errors.hpp"
#include "tww/rng.hpp"

namespace tww {

Graph C1Graph::to_multigraph() const {
    std::vector<std::pair<int, int>> edges;
    for (const auto& matching : matchings)
        edges.insert(edges.end(), matching.begin(), matching.end());
    return Graph::multigraph(n, std::move(edges));
}

C1Graph sample_c1(int n, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) throw ArgumentError("C1 sampling needs even n >= 2");
    C1Graph g;
    g.n = n;
    for (int t = 0; t < 3; ++t) {
        SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(t)));
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
        rng.shuffle(verts);
        auto& matching = g.matchings[static_cast<std::size_t>(t)];
        for (int i = 0; i < n; i += 2) {
            const int a = verts[static_cast<std::size_t>(i)], b = verts[static_cast<std::size_t>(i) + 1];
            matching.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(matching.begin(), matching.end());
    }
    return g;
}

std::vector<Cycle> short_cycles(const Graph& g, int max_len) {
    std::vector<Cycle> out;
    if (max_len < 2) return out;
    const auto& edges = g.edges();
    // 2-cycles: pairs of parallel edge instances.
    for (std::size_t e = 0; e + 1 < edges.size(); ++e)
        for (std::size_t f = e + 1; f < edges.size() && edges[f] == edges[e]; ++f)
            out.push_back({{edges[e].first, edges[e].second},
                           {static_cast<int>(e), static_cast<int>(f)}});
    if (max_len < 3) return out;
    // Longer cycles: DFS from each root v over vertices > v, closing back to
    // v; directions deduplicated by requiring second vertex < last vertex.
    const int n = g.vertex_count();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path_v, path_e;
    std::function<void(int, int)> dfs = [&](int root, int u) {
        for (int ei : g.incident_edges(u)) {
            const auto [a, b] = edges[static_cast<std::size_t>(ei)];
            const int w = a == u ? b : a;
            if (w == root) {
                if (path_v.size() >= 3 && path_v[1] < path_v.back() && ei != path_e.front()) {
                    Cycle c;
                    c.vertices = path_v;
                    c.edge_ids = path_e;
                    c.edge_ids.push_back(ei);
                    out.push_back(std::move(c));
                }
                continue;
            }
            if (w < root || on_path[static_cast<std::size_t>(w)]) continue;
            if (static_cast<int>(path_v.size()) >= max_len) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path_v.push_back(w);
            path_e.push_back(ei);
            dfs(root, w);
            path_v.pop_back();
            path_e.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int v = 0; v < n; ++v) {
        on_path[static_cast<std::size_t>(v)] = 1;
        path_v = {v};
        path_e = {};
        dfs(v, v);
        on_path[static_cast<std::size_t>(v)] = 0;
    }
    return out;
}

int floor_quarter_log2(int n) {
    int l = 0;
    while (l < 15 && (1LL << (4 * (l + 1))) <= n) ++l;
    return l;
}

int ceil_log2(int n) {
    int m = 0;
    while ((1LL << m) < n) ++m;
    return m;
}

bool girth_exceeds_quarter_log2(std::optional<int> girth, int n) {
    if (!girth) return true;  // acyclic: infinite girth
    if (*girth >= 16) return true;
    return (static_cast<unsigned long long>(1) << (4 * *girth)) > static_cast<unsigned long long>(n);
}

bool diameter_within_3log2(std::optional<int> diameter, int n) {
    if (!diameter) return false;  // disconnected
    if (*diameter >= 63) return false;
    const unsigned long long n3 =
        static_cast<unsigned long long>(n) * static_cast<unsigned long long>(n) * static_cast<unsigned long long>(n);
    return (static_cast<unsigned long long>(1) << *diameter) <= n3;
}

C2Certificate certify_c2(const Graph& g, long long edit_count) {
    C2Certificate cert;
    cert.n = g.vertex_count();
    cert.edit_count = edit_count;
    const GraphStats stats = graph_stats(g);
    cert.max_degree = stats.max_degree;
    cert.diameter = stats.diameter;
    cert.girth = stats.girth;
    cert.simple = !g.is_multigraph();
    cert.connected = g.connected();
    cert.degree_ok = stats.max_degree <= 6;
    cert.diameter_ok = diameter_within_3log2(stats.diameter, cert.n);
    cert.girth_ok = girth_exceeds_quarter_log2(stats.girth, cert.n);
    cert.pass = cert.simple && cert.connected && cert.degree_ok && cert.diameter_ok && cert.girth_ok;
    return cert;
}

namespace {

// |F| > 4 * 6^g with g = log2(n)/4. Exact via |F|^4 > 256 * 6^m for n = 2^m;
// long double for other even n (certificates stay exact either way).
bool too_many_deletions(long long f, int n) {
    if ((n & (n - 1)) == 0) {
        const int m = ceil_log2(n);
        unsigned __int128 rhs = 256;
        for (int i = 0; i < m; ++i) rhs *= 6;
        unsigned __int128 lhs = 1;
        for (int i = 0; i < 4; ++i) lhs *= static_cast<unsigned __int128>(f);
        return lhs > rhs;
    }
    const long double bound = 4.0L * std::pow(6.0L, std::log2(static_cast<long double>(n)) / 4.0L);
    return static_cast<long double>(f) > bound;
}

}  // namespace

EditResult edit_to_c2(const C1Graph& g1, std::uint64_t) {
    EditResult res;
    const int n = g1.n;
    const Graph multi = g1.to_multigraph();
    // Parallel pairs count as 2-cycles and are always broken, so the repaired
    // graph is simple even when floor(g) < 2.
    const int cycle_cap = std::max(2, floor_quarter_log2(n));
    const auto cycles = short_cycles(multi, cycle_cap);
    res.short_cycle_count = static_cast<long long>(cycles.size());

    std::vector<char> deleted(multi.edges().size(), 0);
    long long f_count = 0;
    for (const Cycle& c : cycles) {
        bool hit = false;
        for (int e : c.edge_ids)
            if (deleted[static_cast<std::size_t>(e)]) {
                hit = true;
                break;
            }
        if (hit) continue;
        const int pick = *std::min_element(c.edge_ids.begin(), c.edge_ids.end());
        deleted[static_cast<std::size_t>(pick)] = 1;
        ++f_count;
    }
    res.deleted_edges = f_count;
    if (too_many_deletions(f_count, n)) {
        res.outcome = EditResult::Outcome::abort_too_many_cycles;
        return res;
    }

    std::vector<std::pair<int, int>> g2_edges;
    for (std::size_t e = 0; e < multi.edges().size(); ++e)
        if (!deleted[e]) g2_edges.push_back(multi.edges()[e]);
    const Graph g2 = Graph::simple(n, g2_edges);

    // Greedy X: scan in index order, keep vertices at distance >= ceil(log2 n)
    // from everything kept so far.
    const int min_dist = ceil_log2(n);
    std::vector<int> nearest(static_cast<std::size_t>(n), std::numeric_limits<int>::max());
    std::vector<int> x;
    for (int v = 0; v < n; ++v) {
        if (nearest[static_cast<std::size_t>(v)] < min_dist) continue;
        x.push_back(v);
        // Bounded BFS from v updating distance-to-nearest-kept.
        std::deque<int> queue{v};
        nearest[static_cast<std::size_t>(v)] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            const int du = nearest[static_cast<std::size_t>(u)];
            if (du + 1 >= min_dist) continue;
            for (int w : g2.neighbors(u))
                if (du + 1 < nearest[static_cast<std::size_t>(w)]) {
                    nearest[static_cast<std::size_t>(w)] = du + 1;
                    queue.push_back(w);
                }
        }
    }
    res.x_size = static_cast<long long>(x.size());

    // Balanced tree on X with maximum degree 3: the root takes three
    // children, every other node two, keeping total degree <= 3 + 3 = 6.
    std::vector<std::pair<int, int>> g3_edges = g2_edges;
    auto add_tree_edge = [&](std::size_t i, std::size_t j) {
        if (j >= x.size()) return;
        const int a = std::min(x[i], x[j]), b = std::max(x[i], x[j]);
        if (!std::binary_search(g2.neighbors(a).begin(), g2.neighbors(a).end(), b))
            g3_edges.emplace_back(a, b);
        ++res.tree_edges;
    };
    if (!x.empty()) {
        for (std::size_t c = 1; c <= 3; ++c) add_tree_edge(0, c);
        for (std::size_t i = 1; i < x.size(); ++i) {
            add_tree_edge(i, 2 * i + 2);
            add_tree_edge(i, 2 * i + 3);
        }
    }
    res.graph = Graph::simple(n, std::move(g3_edges));
    res.cert = certify_c2(res.graph, res.deleted_edges + res.tree_edges);
    res.outcome = res.cert.pass ? EditResult::Outcome::success : EditResult::Outcome::abort_certificate;
    return res;
}

SequenceResult generate_sequence(const std::vector<int>& n_schedule, std::uint64_t seed,
                                 int girth_increment, int max_retries) {
    for (std::size_t k = 1; k < n_schedule.size(); ++k)
        if (n_schedule[k] <= n_schedule[k - 1])
            throw ArgumentError("schedule must be strictly increasing");
    SequenceResult res;
    std::optional<int> prev_girth;
    bool prev_girth_infinite = false;
    for (std::size_t k = 0; k < n_schedule.size(); ++k) {
        bool done = false;
        for (int attempt = 0; attempt < max_retries && !done; ++attempt) {
            const std::uint64_t sk = SplitMix64::derive(seed, k * 4096 + static_cast<std::uint64_t>(attempt));
            EditResult edit = edit_to_c2(sample_c1(n_schedule[k], sk), sk);
            if (edit.outcome != EditResult::Outcome::success) {
                ++res.resamples;
                if (edit.outcome == EditResult::Outcome::abort_too_many_cycles) ++res.aborts;
                continue;
            }
            const auto girth = edit.cert.girth;
            bool girth_ok;
            if (k == 0)
                girth_ok = true;
            else if (prev_girth_infinite)
                girth_ok = !girth.has_value();
            else
                girth_ok = !girth.has_value() || *girth >= *prev_girth + girth_increment;
            if (!girth_ok) {
                ++res.resamples;
                continue;
            }
            prev_girth_infinite = !girth.has_value();
            prev_girth = girth;
            if (girth && edit.cert.diameter) {
                const double a = static_cast<double>(*edit.cert.diameter) / static_cast<double>(*girth);
                res.realized_a = std::max(res.realized_a, a);
            }
            SequenceEntry entry;
            entry.graph = std::move(edit.graph);
            entry.cert = edit.cert;
            entry.seed_used = sk;
            entry.short_cycles = edit.short_cycle_count;
            entry.deleted_edges = edit.deleted_edges;
            entry.x_size = edit.x_size;
            entry.tree_edges = edit.tree_edges;
            res.entries.push_back(std::move(entry));
            done = true;
        }
        if (!done)
            throw ArgumentError("schedule too dense to satisfy the girth increment at index " +
                                std::to_string(k) + "; use larger gaps between sizes");
    }
    return res;
}

}  // namespace tww
