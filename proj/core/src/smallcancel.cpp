#include "tww/smallcancel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tww/construction.hpp"
#include "tww/errors.hpp"
#include "tww/rng.hpp"

namespace tww {

Letter inverse_letter(Letter l) { return {l.id, !l.inverse}; }

Word inverse_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inverse_letter(*it));
    return r;
}

Word free_reduce(Word w) {
    Word r;
    for (const Letter& l : w) {
        if (!r.empty() && r.back() == inverse_letter(l))
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

Word parse_word(const std::string& text, const std::vector<std::string>& alphabet) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inv = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        const auto it = std::find(alphabet.begin(), alphabet.end(), tok);
        if (it == alphabet.end()) throw ArgumentError("letter '" + tok + "' not in alphabet");
        w.push_back({static_cast<int>(it - alphabet.begin()), inv});
    }
    return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += alphabet.at(static_cast<std::size_t>(w[i].id));
        if (w[i].inverse) out += "^-1";
    }
    return out;
}

LabelledFamily::LabelledFamily(std::vector<Graph> graphs, std::vector<std::string> alphabet)
    : graphs_(std::move(graphs)), alphabet_(std::move(alphabet)) {
    for (const Graph& g : graphs_) {
        if (!g.has_labels()) throw StructuralError("family graphs must be edge-labelled");
        if (g.alphabet() != alphabet_) throw StructuralError("family graphs must share the alphabet");
        girths_.push_back(graph_stats(g).girth);
    }
}

namespace {

// Letter read when traversing edge instance e from vertex `from`.
Letter letter_along(const Graph& g, int edge_id, int from) {
    const auto [u, v] = g.edges()[static_cast<std::size_t>(edge_id)];
    const EdgeLabel l = g.labels()[static_cast<std::size_t>(edge_id)];
    const bool forward = (from == u);
    return {l.letter, forward ? l.reversed : !l.reversed};
}

}  // namespace

std::set<Word> extract_relators(const LabelledFamily& f, int max_len) {
    if (max_len < 1) throw ArgumentError("max_len must be >= 1");
    std::set<Word> relators;
    for (std::size_t k = 0; k < f.graphs().size(); ++k) {
        const auto girth = f.girths()[k];
        if (girth && *girth > max_len) continue;  // no cycle can be short enough
        if (!girth) continue;                     // forest
        const Graph& g = f.graphs()[k];
        for (const Cycle& c : short_cycles(g, max_len)) {
            const std::size_t len = c.vertices.size();
            Word base;
            for (std::size_t i = 0; i < len; ++i)
                base.push_back(letter_along(g, c.edge_ids[i], c.vertices[i]));
            for (std::size_t rot = 0; rot < len; ++rot) {
                Word w;
                for (std::size_t i = 0; i < len; ++i) w.push_back(base[(rot + i) % len]);
                relators.insert(w);
                relators.insert(inverse_word(w));
            }
        }
    }
    return relators;
}

const std::set<Word>& RelatorOracle::relators_up_to(int len) {
    if (len > cached_len_) {
        cached_ = extract_relators(*family_, len);
        cached_len_ = len;
    }
    return cached_;
}

bool RelatorOracle::is_relator(const Word& w) {
    if (w.empty()) return false;
    int min_girth = -1;
    for (const auto& g : family_->girths())
        if (g) min_girth = min_girth < 0 ? *g : std::min(min_girth, *g);
    if (min_girth < 0 || static_cast<int>(w.size()) < min_girth) return false;
    return relators_up_to(static_cast<int>(w.size())).contains(w);
}

namespace {

// Smallest l with l >= lambda * girth, or nullopt for infinite girth.
std::optional<int> violation_threshold(Rational lambda, std::optional<int> girth) {
    if (!girth) return std::nullopt;
    const long long num = lambda.num * *girth;
    return static_cast<int>((num + lambda.den - 1) / lambda.den);
}

struct DirectedPath {
    std::vector<int> vertices;
    Word word;
};

void enumerate_paths(const Graph& g, int len, std::vector<DirectedPath>& out) {
    const int n = g.vertex_count();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    DirectedPath cur;
    std::function<void(int)> dfs = [&](int u) {
        if (static_cast<int>(cur.word.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int ei : g.incident_edges(u)) {
            const auto [a, b] = g.edges()[static_cast<std::size_t>(ei)];
            const int w = a == u ? b : a;
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            cur.vertices.push_back(w);
            cur.word.push_back(letter_along(g, ei, u));
            dfs(w);
            cur.word.pop_back();
            cur.vertices.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int v = 0; v < n; ++v) {
        used[static_cast<std::size_t>(v)] = 1;
        cur.vertices = {v};
        cur.word.clear();
        dfs(v);
        used[static_cast<std::size_t>(v)] = 0;
    }
}

double path_count_estimate(const Graph& g, int len) {
    const double d = std::max(1, g.max_degree());
    double est = g.vertex_count() * d;
    for (int i = 1; i < len; ++i) est *= std::max(1.0, d - 1);
    return est;
}

}  // namespace

CancellationCheck check_small_cancellation(const LabelledFamily& f, Rational lambda,
                                           std::uint64_t path_budget) {
    if (lambda.den <= 0 || lambda.num <= 0 || lambda.num >= lambda.den)
        throw ArgumentError("lambda must satisfy 0 < lambda < 1");
    const std::size_t count = f.graphs().size();
    std::vector<std::optional<int>> threshold(count);
    for (std::size_t k = 0; k < count; ++k)
        threshold[k] = violation_threshold(lambda, f.girths()[k]);

    // Pairs grouped by the critical length min(T_k, T_k'); a longer shared
    // word always contains a distinct shared window of exactly that length.
    std::map<int, std::vector<std::pair<int, int>>> pairs_by_len;
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t k2 = k; k2 < count; ++k2) {
            std::optional<int> len;
            if (threshold[k] && threshold[k2])
                len = std::min(*threshold[k], *threshold[k2]);
            else if (threshold[k])
                len = *threshold[k];
            else if (threshold[k2])
                len = *threshold[k2];
            if (len && *len >= 1)
                pairs_by_len[*len].emplace_back(static_cast<int>(k), static_cast<int>(k2));
        }

    double estimate = 0;
    for (const auto& [len, pairs] : pairs_by_len) {
        std::set<int> graphs;
        for (const auto& [a, b] : pairs) {
            graphs.insert(a);
            graphs.insert(b);
        }
        for (int k : graphs) estimate += path_count_estimate(f.graphs()[static_cast<std::size_t>(k)], len);
    }
    if (estimate > static_cast<double>(path_budget))
        throw BudgetError("path enumeration estimate exceeds the configured budget");

    CancellationCheck res;
    for (const auto& [len, pairs] : pairs_by_len) {
        std::set<int> graphs;
        for (const auto& [a, b] : pairs) {
            graphs.insert(a);
            graphs.insert(b);
        }
        // word -> (graph, path) entries, in deterministic order.
        std::map<Word, std::vector<std::pair<int, int>>> by_word;  // value: (graph, path index)
        std::map<int, std::vector<DirectedPath>> paths;
        for (int k : graphs) {
            auto& list = paths[k];
            enumerate_paths(f.graphs()[static_cast<std::size_t>(k)], len, list);
            for (std::size_t i = 0; i < list.size(); ++i)
                by_word[list[i].word].emplace_back(k, static_cast<int>(i));
        }
        for (const auto& [word, entries] : by_word) {
            if (entries.size() < 2) continue;
            for (std::size_t a = 0; a < entries.size(); ++a)
                for (std::size_t b = a + 1; b < entries.size(); ++b) {
                    const auto [ga, pa] = entries[a];
                    const auto [gb, pb] = entries[b];
                    // The pair violates when the shared length reaches the
                    // smaller of the two per-graph thresholds.
                    int pair_threshold;
                    if (threshold[static_cast<std::size_t>(ga)] && threshold[static_cast<std::size_t>(gb)])
                        pair_threshold = std::min(*threshold[static_cast<std::size_t>(ga)],
                                                  *threshold[static_cast<std::size_t>(gb)]);
                    else if (threshold[static_cast<std::size_t>(ga)])
                        pair_threshold = *threshold[static_cast<std::size_t>(ga)];
                    else if (threshold[static_cast<std::size_t>(gb)])
                        pair_threshold = *threshold[static_cast<std::size_t>(gb)];
                    else
                        continue;
                    if (len < pair_threshold) continue;
                    PathViolation v;
                    v.graph_a = ga;
                    v.graph_b = gb;
                    v.path_a = paths[ga][static_cast<std::size_t>(pa)].vertices;
                    v.path_b = paths[gb][static_cast<std::size_t>(pb)].vertices;
                    v.word = word;
                    res.violation = v;
                    res.ok = false;
                    return res;
                }
        }
    }
    res.ok = true;
    return res;
}

namespace {

// Mutable labelling state for one graph.
struct PendingLabels {
    std::vector<std::pair<int, int>> edges;
    std::vector<EdgeLabel> labels;
};

Graph realize(const PendingLabels& p, int n, const std::vector<std::string>& alphabet) {
    return Graph::labelled(n, p.edges, p.labels, alphabet);
}

int find_edge(const Graph& g, int u, int v) {
    const int a = std::min(u, v), b = std::max(u, v);
    for (std::size_t e = 0; e < g.edges().size(); ++e)
        if (g.edges()[e] == std::pair(a, b)) return static_cast<int>(e);
    return -1;
}

}  // namespace

LabelSearchResult label_search(const std::vector<Graph>& unlabelled, int alphabet_size,
                               Rational lambda, std::uint64_t seed, int retries) {
    if (alphabet_size < 1) throw ArgumentError("alphabet must be non-empty");
    LabelSearchResult res;
    for (int i = 0; i < alphabet_size; ++i) res.alphabet.push_back(std::string(1, static_cast<char>('a' + i % 26)) + (i >= 26 ? std::to_string(i / 26) : ""));

    SplitMix64 rng(seed);
    std::vector<PendingLabels> pending;
    std::vector<Graph> done;
    for (std::size_t k = 0; k < unlabelled.size(); ++k) {
        const Graph& base = unlabelled[k];
        if (base.is_multigraph()) throw ArgumentError("label search expects simple graphs");
        PendingLabels p;
        p.edges = base.edges();
        p.labels.resize(p.edges.size());
        auto randomize_all = [&] {
            for (auto& l : p.labels)
                l = {static_cast<int>(rng.below(static_cast<std::uint64_t>(alphabet_size))), rng.flip()};
        };
        randomize_all();
        bool ok = false;
        for (int attempt = 0; attempt < retries; ++attempt) {
            std::vector<Graph> prefix = done;
            prefix.push_back(realize(p, base.vertex_count(), res.alphabet));
            const LabelledFamily fam(prefix, res.alphabet);
            const CancellationCheck check = check_small_cancellation(fam, lambda);
            if (check.ok) {
                done = std::move(prefix);
                ok = true;
                break;
            }
            ++res.resamples;
            // Moser-Tardos style: resample only the labels on the violating
            // path pair (the edges of the current graph among them).
            const PathViolation& v = *check.violation;
            const Graph& cur = prefix.back();
            auto resample_path = [&](int graph_idx, const std::vector<int>& path) {
                if (graph_idx != static_cast<int>(k)) return;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    const int e = find_edge(cur, path[i], path[i + 1]);
                    if (e >= 0)
                        p.labels[static_cast<std::size_t>(e)] = {
                            static_cast<int>(rng.below(static_cast<std::uint64_t>(alphabet_size))),
                            rng.flip()};
                }
            };
            resample_path(v.graph_a, v.path_a);
            resample_path(v.graph_b, v.path_b);
            // If the violation is entirely inside already-fixed graphs the
            // incremental invariant is broken; resample everything local.
            if (v.graph_a != static_cast<int>(k) && v.graph_b != static_cast<int>(k)) randomize_all();
        }
        if (!ok) {
            res.success = false;
            res.graphs_labelled = static_cast<int>(done.size());
            res.labelled = std::move(done);
            return res;
        }
    }
    res.success = true;
    res.graphs_labelled = static_cast<int>(done.size());
    res.labelled = std::move(done);
    return res;
}

DehnResult dehn_decide(const Word& w, RelatorOracle& relators) {
    DehnResult res;
    Word cur = free_reduce(w);
    bool progressed = true;
    while (progressed && !cur.empty()) {
        progressed = false;
        const int len = static_cast<int>(cur.size());
        const auto& all = relators.relators_up_to(2 * len - 1);
        std::vector<const Word*> usable;
        for (const Word& r : all)
            if (static_cast<int>(r.size()) < 2 * len) usable.push_back(&r);
        std::sort(usable.begin(), usable.end(), [](const Word* a, const Word* b) {
            if (a->size() != b->size()) return a->size() < b->size();
            return *a < *b;
        });
        for (const Word* rp : usable) {
            const Word& r = *rp;
            // Find a factor of cur matching more than half of r (the relator
            // set is closed under rotation and inversion, so prefixes of r
            // itself cover all cases).
            for (int i = 0; i < len && !progressed; ++i) {
                std::size_t match = 0;
                while (match < r.size() && i + static_cast<int>(match) < len &&
                       cur[static_cast<std::size_t>(i) + match] == r[match])
                    ++match;
                if (2 * match > r.size()) {
                    Word next(cur.begin(), cur.begin() + i);
                    const Word tail(r.begin() + static_cast<std::ptrdiff_t>(match), r.end());
                    const Word replacement = inverse_word(tail);
                    next.insert(next.end(), replacement.begin(), replacement.end());
                    next.insert(next.end(), cur.begin() + i + static_cast<std::ptrdiff_t>(match), cur.end());
                    cur = free_reduce(next);
                    ++res.rewrites;
                    progressed = true;
                }
            }
            if (progressed) break;
        }
    }
    res.reduced = cur;
    res.verdict = cur.empty() ? DehnVerdict::trivial : DehnVerdict::nontrivial;
    return res;
}

}  // namespace tww
