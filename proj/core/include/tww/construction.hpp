#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tww/graph.hpp"

namespace tww {

// Union of three perfect matchings on [n], labels 1..3; may have parallel
// edges but never loops.
struct C1Graph {
    int n = 0;
    std::array<std::vector<std::pair<int, int>>, 3> matchings;

    Graph to_multigraph() const;
};

// Three independent uniform perfect matchings, Fisher-Yates pairing;
// bit-identical per seed.
C1Graph sample_c1(int n, std::uint64_t seed);

struct Cycle {
    std::vector<int> vertices;  // v0, v1, ..., v_{l-1}
    std::vector<int> edge_ids;  // instance ids into Graph::edges()
};

// All simple cycles of length <= max_len; parallel edge pairs are the
// 2-cycles. Deterministic order (by smallest vertex, then lexicographic).
std::vector<Cycle> short_cycles(const Graph& g, int max_len);

// Exact integer comparisons against the logarithmic thresholds:
//   girth > log2(n)/4      <=>  2^(4*girth) > n
//   diam  <= 3*log2(n)     <=>  2^diam <= n^3
struct C2Certificate {
    int n = 0;
    int max_degree = 0;
    std::optional<int> diameter, girth;  // nullopt = infinite
    bool simple = false, connected = false;
    bool degree_ok = false, diameter_ok = false, girth_ok = false;
    bool pass = false;
    long long edit_count = 0;  // |E delta E'|
};

C2Certificate certify_c2(const Graph& g, long long edit_count = 0);

struct EditResult {
    enum class Outcome { success, abort_too_many_cycles, abort_certificate };
    Outcome outcome = Outcome::abort_certificate;
    Graph graph;  // G3 on success
    C2Certificate cert;
    // Run statistics.
    long long short_cycle_count = 0;
    long long deleted_edges = 0;  // |F|
    long long x_size = 0;
    long long tree_edges = 0;
};

// The constructive repair: break all cycles of length <= floor(g) (one edge
// each, parallel pairs always included so the result is simple), then overlay
// a max-degree-3 balanced tree on a greedy log-spaced vertex set X. Aborts
// when |F| exceeds 4*6^g. Deterministic given G1; the seed is carried for
// interface symmetry with the sampler.
EditResult edit_to_c2(const C1Graph& g1, std::uint64_t seed = 0);

struct SequenceEntry {
    Graph graph;
    C2Certificate cert;
    std::uint64_t seed_used = 0;
    long long short_cycles = 0, deleted_edges = 0, x_size = 0, tree_edges = 0;
};

struct SequenceResult {
    std::vector<SequenceEntry> entries;
    double realized_a = 0.0;  // max diam/girth over the sequence
    int resamples = 0;
    int aborts = 0;  // |F|-threshold aborts among the resamples
};

// Per-index pipeline with retries; rejects any G_k whose girth is below
// girth(G_{k-1}) + girth_increment. Throws ArgumentError ("schedule too
// dense") when the retry budget runs out.
SequenceResult generate_sequence(const std::vector<int>& n_schedule, std::uint64_t seed,
                                 int girth_increment = 6, int max_retries = 64);

// Threshold helpers (exact integer arithmetic).
int floor_quarter_log2(int n);      // largest l with 2^(4l) <= n
int ceil_log2(int n);               // smallest m with 2^m >= n
bool girth_exceeds_quarter_log2(std::optional<int> girth, int n);
bool diameter_within_3log2(std::optional<int> diameter, int n);

}  // namespace tww
