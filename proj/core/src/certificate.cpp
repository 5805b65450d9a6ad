#include "tww/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "json.hpp"
#include "tww/errors.hpp"

namespace tww {

int verify_partition_sequence(const Graph& g, const PartitionSequence& s) {
    const int n = g.vertex_count();
    if (static_cast<int>(s.merges.size()) != std::max(0, n - 1))
        throw CertificateError("partition sequence must have n-1 merges, got " +
                                   std::to_string(s.merges.size()),
                               static_cast<int>(s.merges.size()));
    if (n == 0) return 0;

    // Part id = min vertex of the part. adj[p] holds the ids adjacent to p.
    std::vector<std::unordered_set<int>> adj(static_cast<std::size_t>(n));
    std::vector<char> live(static_cast<std::size_t>(n), 1);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    auto current_max_degree = [&] {
        int m = 0;
        for (int p = 0; p < n; ++p)
            if (live[static_cast<std::size_t>(p)])
                m = std::max(m, static_cast<int>(adj[static_cast<std::size_t>(p)].size()));
        return m;
    };
    int width = current_max_degree();  // singleton partition: the graph itself
    for (std::size_t step = 0; step < s.merges.size(); ++step) {
        auto [a, b] = s.merges[step];
        if (a == b || a < 0 || b < 0 || a >= n || b >= n ||
            !live[static_cast<std::size_t>(a)] || !live[static_cast<std::size_t>(b)])
            throw CertificateError("merge does not reference two live parts", static_cast<int>(step));
        const int target = std::min(a, b);
        const int other = std::max(a, b);
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
        width = std::max(width, current_max_degree());
    }
    return width;
}

namespace {

// Max row/column degree of the quotient induced by the given cut sets,
// using a 2D prefix-sum of the 1-entries.
int quotient_max_degree(const std::vector<std::vector<int>>& prefix,
                        const std::vector<int>& row_cuts, const std::vector<int>& col_cuts,
                        int rows, int cols) {
    const auto riv = Division::intervals(row_cuts, rows);
    const auto civ = Division::intervals(col_cuts, cols);
    auto zone_nonzero = [&](int rlo, int rhi, int clo, int chi) {
        const auto& p = prefix;
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
        for (std::size_t j = 0; j < civ.size(); ++j) {
            if (zone_nonzero(rlo, rhi, civ[j].first, civ[j].second)) {
                ++row_deg;
                ++col_deg[j];
            }
        }
        width = std::max(width, row_deg);
    }
    for (int d : col_deg) width = std::max(width, d);
    return width;
}

std::vector<std::vector<int>> ones_prefix(const Matrix& m) {
    std::vector<std::vector<int>> p(static_cast<std::size_t>(m.row_count()) + 1,
                                    std::vector<int>(static_cast<std::size_t>(m.col_count()) + 1, 0));
    for (const auto& [i, j] : m.ones()) ++p[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j) + 1];
    for (std::size_t i = 1; i < p.size(); ++i)
        for (std::size_t j = 1; j < p[i].size(); ++j)
            p[i][j] += p[i - 1][j] + p[i][j - 1] - p[i - 1][j - 1];
    return p;
}

}  // namespace

int verify_division_sequence(const Matrix& m, const DivisionSequence& s) {
    const int r = m.row_count(), c = m.col_count();
    const int expected = std::max(0, r - 1) + std::max(0, c - 1);
    if (static_cast<int>(s.merges.size()) != expected)
        throw CertificateError("division sequence must have (r-1)+(c-1) steps, got " +
                                   std::to_string(s.merges.size()),
                               static_cast<int>(s.merges.size()));
    const auto prefix = ones_prefix(m);
    std::vector<int> row_cuts, col_cuts;
    for (int p = 1; p < r; ++p) row_cuts.push_back(p);
    for (int p = 1; p < c; ++p) col_cuts.push_back(p);
    int width = quotient_max_degree(prefix, row_cuts, col_cuts, r, c);
    for (std::size_t step = 0; step < s.merges.size(); ++step) {
        auto& cuts = s.merges[step].axis == DivisionSequence::Axis::row ? row_cuts : col_cuts;
        const auto it = std::find(cuts.begin(), cuts.end(), s.merges[step].position);
        if (it == cuts.end())
            throw CertificateError("step removes a cut that is not present", static_cast<int>(step));
        cuts.erase(it);
        width = std::max(width, quotient_max_degree(prefix, row_cuts, col_cuts, r, c));
    }
    return width;
}

PartitionSequence restrict_partition_sequence(const PartitionSequence& s, int n,
                                              const std::vector<int>& kept) {
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        if (kept[k] < 0 || kept[k] >= n || (k > 0 && kept[k] <= kept[k - 1]))
            throw ArgumentError("kept vertices must be a sorted subset of 0..n-1");
        rank[static_cast<std::size_t>(kept[k])] = static_cast<int>(k);
    }
    // min_rank[p]: smallest kept-rank in the part with id p, or -1.
    std::vector<int> min_rank(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) min_rank[static_cast<std::size_t>(v)] = rank[static_cast<std::size_t>(v)];
    PartitionSequence out;
    for (const auto& [a, b] : s.merges) {
        const int target = std::min(a, b);
        const int other = std::max(a, b);
        const int ra = min_rank[static_cast<std::size_t>(target)];
        const int rb = min_rank[static_cast<std::size_t>(other)];
        if (ra >= 0 && rb >= 0) out.merges.emplace_back(std::min(ra, rb), std::max(ra, rb));
        min_rank[static_cast<std::size_t>(target)] = (ra < 0) ? rb : (rb < 0 ? ra : std::min(ra, rb));
        min_rank[static_cast<std::size_t>(other)] = -1;
    }
    return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const PartitionSequence& s) {
    ordered_json j;
    j["kind"] = "partition_sequence";
    j["merges"] = ordered_json::array();
    for (const auto& [a, b] : s.merges) j["merges"].push_back({a, b});
    j["claimed_width"] = s.claimed_width;
    return j;
}

ordered_json to_json(const DivisionSequence& s) {
    ordered_json j;
    j["kind"] = "division_sequence";
    j["merges"] = ordered_json::array();
    for (const auto& step : s.merges)
        j["merges"].push_back(
            {step.axis == DivisionSequence::Axis::row ? "row" : "col", step.position});
    j["claimed_width"] = s.claimed_width;
    return j;
}

}  // namespace

std::string to_json_text(const PartitionSequence& s) { return to_json(s).dump(2) + "\n"; }
std::string to_json_text(const DivisionSequence& s) { return to_json(s).dump(2) + "\n"; }

ParsedCertificate parse_certificate(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw IoError(std::string("certificate is not valid JSON: ") + e.what());
    }
    ParsedCertificate out{};
    const std::string kind = j.value("kind", "");
    if (kind == "partition_sequence") {
        out.kind = CertificateKind::partition_sequence;
        for (const auto& m : j.at("merges"))
            out.partition.merges.emplace_back(m.at(0).get<int>(), m.at(1).get<int>());
        out.partition.claimed_width = j.at("claimed_width").get<int>();
    } else if (kind == "division_sequence") {
        out.kind = CertificateKind::division_sequence;
        for (const auto& m : j.at("merges")) {
            const std::string axis = m.at(0).get<std::string>();
            if (axis != "row" && axis != "col") throw IoError("bad axis in certificate: " + axis);
            out.division.merges.push_back({axis == "row" ? DivisionSequence::Axis::row
                                                         : DivisionSequence::Axis::col,
                                           m.at(1).get<int>()});
        }
        out.division.claimed_width = j.at("claimed_width").get<int>();
    } else {
        throw IoError("unknown certificate kind: '" + kind + "'");
    }
    return out;
}

ParsedCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_certificate(text);
}

void write_certificate_file(const std::string& path, const PartitionSequence& s) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << to_json_text(s);
}

void write_certificate_file(const std::string& path, const DivisionSequence& s) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << to_json_text(s);
}

}  // namespace tww
