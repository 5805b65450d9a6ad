#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tww {

// Oriented edge label over an alphabet of formal letters: traversing the edge
// from its stored `u` endpoint to its `v` endpoint reads letter `letter`
// (0-based alphabet index) if !reversed, and its formal inverse otherwise.
struct EdgeLabel {
    int letter = 0;
    bool reversed = false;
    bool operator==(const EdgeLabel&) const = default;
};

// Finite simple graph on dense 0-based vertices, immutable after construction.
// Multigraphs (parallel edges, never loops) exist only behind the multigraph
// factory; the simple factories reject duplicate edges.
class Graph {
public:
    Graph() = default;

    static Graph simple(int n, std::vector<std::pair<int, int>> edges);
    static Graph multigraph(int n, std::vector<std::pair<int, int>> edges);
    static Graph labelled(int n, std::vector<std::pair<int, int>> edges,
                          std::vector<EdgeLabel> labels,
                          std::vector<std::string> alphabet);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool is_multigraph() const { return multigraph_; }
    bool has_labels() const { return !labels_.empty(); }

    // Edges are normalized u < v and sorted; parallel copies are adjacent.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<EdgeLabel>& labels() const { return labels_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }

    // Sorted neighbor list; repeats parallel neighbors in multigraphs.
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    // Incident edge indices into edges(), sorted.
    const std::vector<int>& incident_edges(int v) const { return inc_[static_cast<std::size_t>(v)]; }

    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;
    bool connected() const;

    // Optional total vertex order: order()[rank] = vertex.
    const std::optional<std::vector<int>>& order() const { return order_; }
    Graph with_order(std::vector<int> order) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && multigraph_ == other.multigraph_ && edges_ == other.edges_ &&
               labels_ == other.labels_ && alphabet_ == other.alphabet_ && order_ == other.order_;
    }

private:
    Graph(int n, std::vector<std::pair<int, int>> edges, bool multi,
          std::vector<EdgeLabel> labels, std::vector<std::string> alphabet);
    void build_adjacency();

    int n_ = 0;
    bool multigraph_ = false;
    std::vector<std::pair<int, int>> edges_;
    std::vector<EdgeLabel> labels_;
    std::vector<std::string> alphabet_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
    std::optional<std::vector<int>> order_;
};

// max degree, diameter, girth; nullopt encodes "infinite".
struct GraphStats {
    int max_degree = 0;
    std::optional<int> diameter;
    std::optional<int> girth;
};

GraphStats graph_stats(const Graph& g);

// Distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

class VertexPartition {
public:
    // Parts must be disjoint, non-empty, and cover {0..n-1}.
    VertexPartition(int n, std::vector<std::vector<int>> parts);
    static VertexPartition singletons(int n);
    static VertexPartition trivial(int n);

    int ground_size() const { return n_; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    int part_of(int v) const { return part_of_[static_cast<std::size_t>(v)]; }
    int max_part_size() const;

private:
    int n_;
    std::vector<std::vector<int>> parts_;  // each part sorted, parts sorted by min element
    std::vector<int> part_of_;
};

// Loopless quotient: parts X != Y adjacent iff some G-edge crosses them.
Graph quotient_graph(const Graph& g, const VertexPartition& p);

// k-th power: x != y adjacent iff d_G(x, y) <= k. Rejects k = 0.
Graph graph_power(const Graph& g, int k);

// Text format:
//   [alphabet a b c]          (only for labelled graphs, first line)
//   n m
//   u v [s | s^-1]            (m lines, 0-based, u < v)
// Writing is canonical (sorted edges), so write(read(write(g))) == write(g).
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);
std::string to_text(const Graph& g);

}  // namespace tww
