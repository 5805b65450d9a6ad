#pragma once

#include <map>
#include <vector>

#include "tww/certificate.hpp"
#include "tww/graph.hpp"
#include "tww/matrix.hpp"

namespace tww {

// Certificate transformers: each takes verified certificates in and emits a
// certificate that is re-verified from scratch before being returned, so the
// claimed widths below are always true widths.

struct BlockInput {
    Matrix matrix;
    DivisionSequence certificate;
};

struct SubstitutionResult {
    Matrix matrix;
    DivisionSequence certificate;  // verified width <= max(pattern, blocks)
};

// Substitution along a bijection pattern: first regroup each block with its
// own sequence (blocks in row-group order), then replay the pattern sequence
// on the group quotient.
SubstitutionResult substitute_sequences(const BijectionMatrix& pattern,
                                        const DivisionSequence& cert_pattern,
                                        const std::map<std::pair<int, int>, BlockInput>& blocks);

// Lexicographically ordered tensor product of bijection matrices, realized as
// an iterated substitution; verified width = max over the factors.
SubstitutionResult tensor_width(const std::vector<BlockInput>& factors);

struct GnBoundResult {
    long long bound = 0;  // max(k, r^(rk)); r^(rk) degenerates at r = 1
    bool holds = false;   // gn(superposition) < bound; false is a soundness failure
    int superposition_gn = 0;
};

// Requires gn(M_i) < k for every input (checked; argument error otherwise).
GnBoundResult superposition_gn_bound(const std::vector<Matrix>& ms, int k);

// Lift a certificate of G/P to G, parts of size <= k: collapse inside parts
// in index order, then replay. Verified width <= k*w + k - 1, and <= k*w when
// parts are independent sets (within-part adjacencies add the k - 1 term).
PartitionSequence quotient_lift(const Graph& g, const VertexPartition& p,
                                const PartitionSequence& cert_q, int k);

// The same merge list re-verified against G^(k); verified width <= w^k.
PartitionSequence power_lift(const Graph& g, int k, const PartitionSequence& cert);

// Rows 0..n-1 are X (with sigma applied), rows n..2n-1 are Z (the transpose
// of tau); columns are Y.
Matrix joint_composition_matrix(const BijectionMatrix& sigma, const BijectionMatrix& tau);

// Restrict a division sequence of the joint matrix to a sequence for the
// matrix of tau o sigma, dropping no-op steps; verified width <= (joint width)^2.
DivisionSequence compose_lift(const BijectionMatrix& sigma, const BijectionMatrix& tau,
                              const DivisionSequence& joint_cert);

// f : V(H) -> V(G) must be lambda-Lipschitz with fibers of size <= lambda
// (both checked). Chains fiber quotient, subgraph-of-power transport, and the
// power lift; verified width <= lambda*w^lambda + lambda - 1 (<= lambda*w^lambda
// for fibers that are independent sets).
PartitionSequence regular_embedding_lift(const Graph& h, const Graph& g,
                                         const std::vector<int>& f, int lambda,
                                         const PartitionSequence& cert_g);

}  // namespace tww
