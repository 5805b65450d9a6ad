#include "tww/calculus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "tww/errors.hpp"
#include "tww/grid.hpp"

namespace tww {

SubstitutionResult substitute_sequences(const BijectionMatrix& pattern,
                                        const DivisionSequence& cert_pattern,
                                        const std::map<std::pair<int, int>, BlockInput>& blocks) {
    const int b = pattern.size();
    verify_division_sequence(pattern.to_matrix(), cert_pattern);  // propagate invalid input

    std::map<std::pair<int, int>, Matrix> block_matrices;
    std::vector<int> height(static_cast<std::size_t>(b)), width(static_cast<std::size_t>(b));
    for (int a = 0; a < b; ++a) {
        const auto it = blocks.find({a, pattern.image(a)});
        if (it == blocks.end())
            throw StructuralError("missing block for 1-position (" + std::to_string(a) + ", " +
                                  std::to_string(pattern.image(a)) + ")");
        verify_division_sequence(it->second.matrix, it->second.certificate);
        block_matrices.emplace(it->first, it->second.matrix);
        height[static_cast<std::size_t>(a)] = it->second.matrix.row_count();
        width[static_cast<std::size_t>(pattern.image(a))] = it->second.matrix.col_count();
    }
    SubstitutionResult out;
    out.matrix = substitute(pattern, block_matrices);

    std::vector<int> row_off(static_cast<std::size_t>(b) + 1, 0), col_off(static_cast<std::size_t>(b) + 1, 0);
    for (int a = 0; a < b; ++a) {
        row_off[static_cast<std::size_t>(a) + 1] = row_off[static_cast<std::size_t>(a)] + height[static_cast<std::size_t>(a)];
        col_off[static_cast<std::size_t>(a) + 1] = col_off[static_cast<std::size_t>(a)] + width[static_cast<std::size_t>(a)];
    }
    // Regroup each block with its own sequence, offset into the composite.
    for (int a = 0; a < b; ++a) {
        const int fa = pattern.image(a);
        for (const auto& step : blocks.at({a, fa}).certificate.merges) {
            const int off = step.axis == DivisionSequence::Axis::row
                                ? row_off[static_cast<std::size_t>(a)]
                                : col_off[static_cast<std::size_t>(fa)];
            out.certificate.merges.push_back({step.axis, step.position + off});
        }
    }
    // The remaining quotient is exactly the pattern; replay its sequence on
    // the group boundaries.
    for (const auto& step : cert_pattern.merges) {
        const int pos = step.axis == DivisionSequence::Axis::row
                            ? row_off[static_cast<std::size_t>(step.position)]
                            : col_off[static_cast<std::size_t>(step.position)];
        out.certificate.merges.push_back({step.axis, pos});
    }
    out.certificate.claimed_width = verify_division_sequence(out.matrix, out.certificate);
    return out;
}

SubstitutionResult tensor_width(const std::vector<BlockInput>& factors) {
    if (factors.empty()) throw ArgumentError("tensor_width needs at least one factor");
    SubstitutionResult acc{factors.front().matrix, factors.front().certificate};
    acc.certificate.claimed_width = verify_division_sequence(acc.matrix, acc.certificate);
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const BijectionMatrix pattern = BijectionMatrix::from_matrix(acc.matrix);
        std::map<std::pair<int, int>, BlockInput> blocks;
        for (int a = 0; a < pattern.size(); ++a)
            blocks.emplace(std::pair(a, pattern.image(a)), factors[i]);
        acc = substitute_sequences(pattern, acc.certificate, blocks);
    }
    return acc;
}

GnBoundResult superposition_gn_bound(const std::vector<Matrix>& ms, int k) {
    if (ms.empty()) throw ArgumentError("superposition_gn_bound needs matrices");
    if (k < 1) throw ArgumentError("superposition_gn_bound needs k >= 1");
    const int r = static_cast<int>(ms.size());
    for (int i = 0; i < r; ++i) {
        const int gi = grid_number_matrix(ms[static_cast<std::size_t>(i)]);
        if (gi >= k)
            throw ArgumentError("matrix " + std::to_string(i) + " has grid number " +
                                std::to_string(gi) + " >= k");
    }
    GnBoundResult res;
    long long bound = 1;
    for (int i = 0; i < r * k; ++i) {
        if (bound > std::numeric_limits<long long>::max() / r) {
            bound = std::numeric_limits<long long>::max();
            break;
        }
        bound *= r;
    }
    res.bound = std::max<long long>(k, bound);
    res.superposition_gn = grid_number_matrix(superpose(ms));
    res.holds = res.superposition_gn < res.bound;
    return res;
}

PartitionSequence quotient_lift(const Graph& g, const VertexPartition& p,
                                const PartitionSequence& cert_q, int k) {
    if (p.ground_size() != g.vertex_count())
        throw ArgumentError("partition does not match the graph");
    if (p.max_part_size() > k)
        throw ArgumentError("partition has a part of size " + std::to_string(p.max_part_size()) +
                            " > k = " + std::to_string(k));
    const Graph quotient = quotient_graph(g, p);
    verify_partition_sequence(quotient, cert_q);  // propagate invalid input

    PartitionSequence out;
    // Collapse inside parts in index order.
    for (const auto& part : p.parts())
        for (std::size_t i = 1; i < part.size(); ++i) out.merges.emplace_back(part.front(), part[i]);
    // Replay; quotient vertex j corresponds to the part with the j-th
    // smallest minimum, whose lifted id is that minimum.
    for (const auto& [a, b] : cert_q.merges)
        out.merges.emplace_back(p.parts()[static_cast<std::size_t>(a)].front(),
                                p.parts()[static_cast<std::size_t>(b)].front());
    out.claimed_width = verify_partition_sequence(g, out);
    return out;
}

PartitionSequence power_lift(const Graph& g, int k, const PartitionSequence& cert) {
    verify_partition_sequence(g, cert);
    const Graph gk = graph_power(g, k);
    PartitionSequence out;
    out.merges = cert.merges;
    out.claimed_width = verify_partition_sequence(gk, out);
    return out;
}

Matrix joint_composition_matrix(const BijectionMatrix& sigma, const BijectionMatrix& tau) {
    if (sigma.size() != tau.size())
        throw ArgumentError("sigma's codomain must be tau's domain");
    const int n = sigma.size();
    std::vector<std::pair<int, int>> ones;
    ones.reserve(2 * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) ones.emplace_back(x, sigma.image(x));
    for (int y = 0; y < n; ++y) ones.emplace_back(n + tau.image(y), y);
    return Matrix(2 * n, n, std::move(ones));
}

DivisionSequence compose_lift(const BijectionMatrix& sigma, const BijectionMatrix& tau,
                              const DivisionSequence& joint_cert) {
    const Matrix joint = joint_composition_matrix(sigma, tau);
    verify_division_sequence(joint, joint_cert);  // propagate invalid input
    const int n = sigma.size();
    DivisionSequence out;
    for (const auto& step : joint_cert.merges) {
        if (step.axis == DivisionSequence::Axis::col) continue;  // Y cuts vanish
        if (step.position == n) continue;                        // the X/Z boundary stays conceptual
        if (step.position < n)
            out.merges.push_back({DivisionSequence::Axis::row, step.position});
        else
            out.merges.push_back({DivisionSequence::Axis::col, step.position - n});
    }
    const Matrix composition = compose(sigma, tau).to_matrix();
    out.claimed_width = verify_division_sequence(composition, out);
    return out;
}

namespace {

// Relabel a partition sequence under a vertex bijection by replaying it and
// re-deriving min-element part ids on the relabeled side.
PartitionSequence relabel_partition_sequence(const PartitionSequence& cert, int n,
                                             const std::vector<int>& perm) {
    std::vector<int> relabeled_id(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) relabeled_id[static_cast<std::size_t>(v)] = perm[static_cast<std::size_t>(v)];
    PartitionSequence out;
    for (const auto& [a, b] : cert.merges) {
        const int target = std::min(a, b), other = std::max(a, b);
        const int ra = relabeled_id[static_cast<std::size_t>(target)];
        const int rb = relabeled_id[static_cast<std::size_t>(other)];
        out.merges.emplace_back(std::min(ra, rb), std::max(ra, rb));
        relabeled_id[static_cast<std::size_t>(target)] = std::min(ra, rb);
    }
    return out;
}

}  // namespace

PartitionSequence regular_embedding_lift(const Graph& h, const Graph& g,
                                         const std::vector<int>& f, int lambda,
                                         const PartitionSequence& cert_g) {
    if (lambda < 1) throw ArgumentError("lambda must be >= 1");
    if (static_cast<int>(f.size()) != h.vertex_count())
        throw ArgumentError("f must map every vertex of H");
    for (int img : f)
        if (img < 0 || img >= g.vertex_count()) throw ArgumentError("f image out of range");
    // Fibers bounded by lambda.
    std::vector<int> fiber_size(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int img : f)
        if (++fiber_size[static_cast<std::size_t>(img)] > lambda)
            throw ArgumentError("fiber of vertex " + std::to_string(img) + " exceeds lambda");
    // lambda-Lipschitz on edges.
    for (const auto& [u, v] : h.edges()) {
        if (f[static_cast<std::size_t>(u)] == f[static_cast<std::size_t>(v)]) continue;
        const auto dist = bfs_distances(g, f[static_cast<std::size_t>(u)]);
        const int d = dist[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])];
        if (d < 0 || d > lambda)
            throw ArgumentError("f is not " + std::to_string(lambda) + "-Lipschitz on edge (" +
                                std::to_string(u) + "," + std::to_string(v) + ")");
    }
    verify_partition_sequence(g, cert_g);

    // Fiber partition of V(H), parts keyed by image vertex.
    std::vector<std::vector<int>> parts_by_image(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v)
        parts_by_image[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<std::vector<int>> parts;
    std::vector<int> kept;  // image vertices, ascending
    for (int w = 0; w < g.vertex_count(); ++w)
        if (!parts_by_image[static_cast<std::size_t>(w)].empty()) {
            parts.push_back(parts_by_image[static_cast<std::size_t>(w)]);
            kept.push_back(w);
        }
    const VertexPartition fibers(h.vertex_count(), parts);

    // Certificate for G^(lambda), restricted to the image, relabeled onto the
    // quotient's part numbering (parts sorted by min H-vertex).
    PartitionSequence power_cert;
    power_cert.merges = cert_g.merges;
    const PartitionSequence restricted =
        restrict_partition_sequence(power_cert, g.vertex_count(), kept);
    // kept-rank r corresponds to image vertex kept[r]; find the fiber part
    // position carrying that image.
    std::vector<int> rank_to_part(kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        const auto& members = parts_by_image[static_cast<std::size_t>(kept[r])];
        for (std::size_t pos = 0; pos < fibers.parts().size(); ++pos)
            if (fibers.parts()[pos] == members) {
                rank_to_part[r] = static_cast<int>(pos);
                break;
            }
    }
    const PartitionSequence on_quotient = relabel_partition_sequence(
        restricted, static_cast<int>(kept.size()),
        std::vector<int>(rank_to_part.begin(), rank_to_part.end()));

    return quotient_lift(h, fibers, on_quotient, lambda);
}

}  // namespace tww
