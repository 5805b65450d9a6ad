#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tww/graph.hpp"

namespace tww {

// A letter of S u S^-1: 0-based alphabet index plus inversion flag.
struct Letter {
    int id = 0;
    bool inverse = false;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Letter inverse_letter(Letter l);
Word inverse_word(const Word& w);
Word free_reduce(Word w);
// "a b^-1 c" over the given alphabet names.
Word parse_word(const std::string& text, const std::vector<std::string>& alphabet);
std::string format_word(const Word& w, const std::vector<std::string>& alphabet);

struct Rational {
    long long num = 1, den = 1;
};

// Sequence of edge-labelled graphs over a shared alphabet, girths cached.
class LabelledFamily {
public:
    LabelledFamily(std::vector<Graph> graphs, std::vector<std::string> alphabet);

    const std::vector<Graph>& graphs() const { return graphs_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    // nullopt = acyclic (infinite girth).
    const std::vector<std::optional<int>>& girths() const { return girths_; }

private:
    std::vector<Graph> graphs_;
    std::vector<std::string> alphabet_;
    std::vector<std::optional<int>> girths_;
};

// Words of length <= max_len read along simple cycles (all rotations, both
// directions). Graphs with girth > max_len contribute nothing.
std::set<Word> extract_relators(const LabelledFamily& f, int max_len);

// Lazy relator access bounded by word length.
class RelatorOracle {
public:
    explicit RelatorOracle(const LabelledFamily& f) : family_(&f) {}
    const std::set<Word>& relators_up_to(int len);
    bool is_relator(const Word& w);
    const LabelledFamily& family() const { return *family_; }

private:
    const LabelledFamily* family_;
    int cached_len_ = -1;
    std::set<Word> cached_;
};

// A label-equal pair of distinct non-backtracking paths, as vertex sequences.
struct PathViolation {
    int graph_a = 0, graph_b = 0;
    std::vector<int> path_a, path_b;
    Word word;
};

struct CancellationCheck {
    bool ok = false;
    std::optional<PathViolation> violation;
};

// Exhaustive check of the condition: label-equal distinct paths p, p' (same
// or different graphs) must satisfy |p| < lambda*girth on each side. Refuses
// (BudgetError) when the path-count estimate exceeds path_budget.
CancellationCheck check_small_cancellation(const LabelledFamily& f, Rational lambda,
                                           std::uint64_t path_budget = 50'000'000);

struct LabelSearchResult {
    bool success = false;
    int graphs_labelled = 0;  // longest prefix that passed the checker
    std::vector<Graph> labelled;
    std::vector<std::string> alphabet;
    int resamples = 0;
};

// Incremental randomized labelling with local resampling on the violating
// path pair; every success is certified by check_small_cancellation.
LabelSearchResult label_search(const std::vector<Graph>& unlabelled, int alphabet_size,
                               Rational lambda, std::uint64_t seed, int retries);

enum class DehnVerdict { trivial, nontrivial };

struct DehnResult {
    DehnVerdict verdict = DehnVerdict::nontrivial;
    int rewrites = 0;
    Word reduced;  // final word (empty iff trivial)
};

// Dehn's algorithm: freely reduce, then repeatedly replace a factor matching
// more than half of a cyclic rotation of a relator (or inverse relator) of
// length < 2|w| by the inverse of the complement. Each rewrite strictly
// shortens the word.
DehnResult dehn_decide(const Word& w, RelatorOracle& relators);

}  // namespace tww
