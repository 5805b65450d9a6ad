#include "tww/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "tww/errors.hpp"

namespace tww {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, bool multi,
             std::vector<EdgeLabel> labels, std::vector<std::string> alphabet)
    : n_(n), multigraph_(multi), edges_(std::move(edges)), labels_(std::move(labels)),
      alphabet_(std::move(alphabet)) {
    if (n_ < 0) throw StructuralError("negative vertex count");
    const bool with_labels = !labels_.empty() || !alphabet_.empty();
    if (with_labels && labels_.size() != edges_.size())
        throw StructuralError("label count does not match edge count");
    // Normalize u < v, flipping label orientation with the endpoints.
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& [u, v] = edges_[i];
        if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw StructuralError("edge endpoint out of range");
        if (u > v) {
            std::swap(u, v);
            if (with_labels) labels_[i].reversed = !labels_[i].reversed;
        }
    }
    if (with_labels) {
        for (const EdgeLabel& l : labels_)
            if (l.letter < 0 || l.letter >= static_cast<int>(alphabet_.size()))
                throw StructuralError("edge label outside alphabet");
        // Sort edges and labels together.
        std::vector<std::size_t> idx(edges_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return edges_[a] < edges_[b] ||
                   (edges_[a] == edges_[b] &&
                    std::pair(labels_[a].letter, labels_[a].reversed) <
                        std::pair(labels_[b].letter, labels_[b].reversed));
        });
        std::vector<std::pair<int, int>> se(edges_.size());
        std::vector<EdgeLabel> sl(labels_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            se[i] = edges_[idx[i]];
            sl[i] = labels_[idx[i]];
        }
        edges_ = std::move(se);
        labels_ = std::move(sl);
    } else {
        std::sort(edges_.begin(), edges_.end());
    }
    if (!multigraph_) {
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw StructuralError("duplicate edge in simple graph");
    }
    build_adjacency();
}

void Graph::build_adjacency() {
    adj_.assign(static_cast<std::size_t>(n_), {});
    inc_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = edges_[e];
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        inc_[static_cast<std::size_t>(u)].push_back(static_cast<int>(e));
        inc_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::simple(int n, std::vector<std::pair<int, int>> edges) {
    return Graph(n, std::move(edges), false, {}, {});
}

Graph Graph::multigraph(int n, std::vector<std::pair<int, int>> edges) {
    return Graph(n, std::move(edges), true, {}, {});
}

Graph Graph::labelled(int n, std::vector<std::pair<int, int>> edges,
                      std::vector<EdgeLabel> labels, std::vector<std::string> alphabet) {
    if (alphabet.empty()) throw StructuralError("labelled graph needs a non-empty alphabet");
    return Graph(n, std::move(edges), false, std::move(labels), std::move(alphabet));
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(src)] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    const auto dist = bfs_distances(*this, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

Graph Graph::with_order(std::vector<int> order) const {
    if (static_cast<int>(order.size()) != n_) throw StructuralError("order length != n");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int v : order) {
        if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)])
            throw StructuralError("order is not a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    Graph g = *this;
    g.order_ = std::move(order);
    return g;
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.max_degree = g.max_degree();
    const int n = g.vertex_count();
    if (n == 0) {
        s.diameter = 0;
        return s;  // empty graph: (0, 0, infinite)
    }
    // Diameter by BFS from every vertex; infinite when disconnected.
    int diam = 0;
    bool conn = true;
    for (int v = 0; v < n && conn; ++v) {
        const auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) {
                conn = false;
                break;
            }
            diam = std::max(diam, d);
        }
    }
    if (conn) s.diameter = diam;

    // Girth: for each edge instance, shortest alternative u-v path with that
    // instance removed; parallel instances give 2-cycles automatically.
    int girth = std::numeric_limits<int>::max();
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::deque<int> queue;
        dist[static_cast<std::size_t>(u)] = 0;
        queue.push_back(u);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            if (x == v) break;
            for (int ei : g.incident_edges(x)) {
                if (ei == static_cast<int>(e)) continue;
                const auto [a, b] = edges[static_cast<std::size_t>(ei)];
                const int y = (a == x) ? b : a;
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[static_cast<std::size_t>(v)] >= 0)
            girth = std::min(girth, dist[static_cast<std::size_t>(v)] + 1);
    }
    if (girth != std::numeric_limits<int>::max()) s.girth = girth;
    return s;
}

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> parts)
    : n_(n), parts_(std::move(parts)), part_of_(static_cast<std::size_t>(n), -1) {
    for (auto& part : parts_) {
        if (part.empty()) throw StructuralError("empty part in partition");
        std::sort(part.begin(), part.end());
    }
    std::sort(parts_.begin(), parts_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        for (int v : parts_[p]) {
            if (v < 0 || v >= n_) throw StructuralError("partition element out of range");
            if (part_of_[static_cast<std::size_t>(v)] != -1)
                throw StructuralError("overlapping parts at vertex " + std::to_string(v));
            part_of_[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < n_; ++v)
        if (part_of_[static_cast<std::size_t>(v)] == -1)
            throw StructuralError("vertex " + std::to_string(v) + " missing from partition");
}

VertexPartition VertexPartition::singletons(int n) {
    std::vector<std::vector<int>> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parts.push_back({v});
    return VertexPartition(n, std::move(parts));
}

VertexPartition VertexPartition::trivial(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return VertexPartition(n, {all});
}

int VertexPartition::max_part_size() const {
    std::size_t m = 0;
    for (const auto& p : parts_) m = std::max(m, p.size());
    return static_cast<int>(m);
}

Graph quotient_graph(const Graph& g, const VertexPartition& p) {
    if (p.ground_size() != g.vertex_count())
        throw StructuralError("partition ground set does not match graph");
    std::vector<std::pair<int, int>> qedges;
    for (const auto& [u, v] : g.edges()) {
        const int a = p.part_of(u);
        const int b = p.part_of(v);
        if (a != b) qedges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(qedges.begin(), qedges.end());
    qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
    return Graph::simple(static_cast<int>(p.parts().size()), std::move(qedges));
}

Graph graph_power(const Graph& g, int k) {
    if (k < 1) throw ArgumentError("graph_power requires k >= 1");
    if (g.is_multigraph()) throw ArgumentError("graph_power is defined on simple graphs");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        // Bounded BFS to depth k.
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::deque<int> queue;
        dist[static_cast<std::size_t>(v)] = 0;
        queue.push_back(v);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            if (dist[static_cast<std::size_t>(x)] == k) continue;
            for (int y : g.neighbors(x)) {
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(y);
                }
            }
        }
        for (int u = v + 1; u < n; ++u)
            if (dist[static_cast<std::size_t>(u)] > 0) edges.emplace_back(v, u);
    }
    return Graph::simple(n, std::move(edges));
}

Graph read_graph(std::istream& in) {
    std::string line;
    std::vector<std::string> alphabet;
    std::streampos start = in.tellg();
    if (!std::getline(in, line)) throw IoError("empty graph input");
    std::istringstream head(line);
    std::string first;
    head >> first;
    if (first == "alphabet") {
        std::string sym;
        while (head >> sym) alphabet.push_back(sym);
        if (alphabet.empty()) throw IoError("alphabet line with no symbols");
        if (!std::getline(in, line)) throw IoError("missing 'n m' line");
    } else {
        (void)start;
    }
    std::istringstream dims(line);
    int n = 0, m = 0;
    if (!(dims >> n >> m)) throw IoError("malformed 'n m' line: " + line);
    std::vector<std::pair<int, int>> edges;
    std::vector<EdgeLabel> labels;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw IoError("unexpected end of edge list");
        std::istringstream es(line);
        int u = 0, v = 0;
        std::string tok;
        if (!(es >> u >> v)) throw IoError("malformed edge line: " + line);
        edges.emplace_back(u, v);
        if (es >> tok) {
            bool rev = false;
            if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
                rev = true;
                tok = tok.substr(0, tok.size() - 3);
            }
            const auto it = std::find(alphabet.begin(), alphabet.end(), tok);
            if (it == alphabet.end()) throw IoError("edge label '" + tok + "' not in alphabet");
            labels.push_back({static_cast<int>(it - alphabet.begin()), rev});
        }
    }
    if (!labels.empty() && labels.size() != edges.size())
        throw IoError("some edges labelled, some not");
    if (!alphabet.empty())
        return Graph::labelled(n, std::move(edges), std::move(labels), std::move(alphabet));
    // Duplicate edges mean the file encodes a multigraph.
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (auto& [u, v] : sorted)
        if (u > v) std::swap(u, v);
    const bool multi = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    return multi ? Graph::multigraph(n, std::move(edges)) : Graph::simple(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
    if (g.has_labels()) {
        out << "alphabet";
        for (const auto& s : g.alphabet()) out << ' ' << s;
        out << '\n';
    }
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto [u, v] = g.edges()[e];
        out << u << ' ' << v;
        if (g.has_labels()) {
            const EdgeLabel& l = g.labels()[e];
            out << ' ' << g.alphabet()[static_cast<std::size_t>(l.letter)];
            if (l.reversed) out << "^-1";
        }
        out << '\n';
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_graph(out, g);
}

std::string to_text(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace tww
