#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/matrix.hpp"

namespace tww {

// Contraction certificate for a graph: n-1 merges applied to the singleton
// partition. Parts are identified by their minimum vertex; merging (a, b)
// yields a part with id min(a, b).
struct PartitionSequence {
    std::vector<std::pair<int, int>> merges;
    int claimed_width = 0;
};

// Contraction certificate for a matrix: cut removals applied to the
// all-singletons division, one per step; (r-1)+(c-1) steps reach the
// trivial division.
struct DivisionSequence {
    enum class Axis { row, col };
    struct Step {
        Axis axis;
        int position;  // the cut being removed
        bool operator==(const Step&) const = default;
    };
    std::vector<Step> merges;
    int claimed_width = 0;
};

// Replays the sequence and returns the true width: the max quotient degree
// over all n partitions, the initial singleton one (i.e. the graph itself)
// included. Ignores claimed_width. Throws CertificateError on an invalid step.
int verify_partition_sequence(const Graph& g, const PartitionSequence& s);

// Same for matrices; the all-singletons division contributes the matrix's own
// max row/column degree.
int verify_division_sequence(const Matrix& m, const DivisionSequence& s);

// Restriction of a partition sequence on {0..n-1} to a sorted vertex subset
// (vertices renumbered by rank in `kept`); merges whose parts miss the subset
// become no-ops and are dropped. Width never increases on subgraphs.
PartitionSequence restrict_partition_sequence(const PartitionSequence& s, int n,
                                              const std::vector<int>& kept);

// Certificate files are JSON with stable key order:
//   {"kind": "partition_sequence", "merges": [[a,b],...], "claimed_width": w}
//   {"kind": "division_sequence", "merges": [["row",p],...], "claimed_width": w}
std::string to_json_text(const PartitionSequence& s);
std::string to_json_text(const DivisionSequence& s);

enum class CertificateKind { partition_sequence, division_sequence };
struct ParsedCertificate {
    CertificateKind kind;
    PartitionSequence partition;
    DivisionSequence division;
};
ParsedCertificate parse_certificate(const std::string& json_text);
ParsedCertificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const PartitionSequence& s);
void write_certificate_file(const std::string& path, const DivisionSequence& s);

}  // namespace tww
