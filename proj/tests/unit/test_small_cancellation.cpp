#include "doctest.h"
#include "support/enumerate.hpp"
#include "tww/errors.hpp"
#include "tww/smallcancel.hpp"

using namespace tww;

namespace {

const std::vector<std::string> kAbc{"a", "b", "c"};

Graph labelled_cycle(int n, const std::vector<int>& letters,
                     const std::vector<std::string>& alphabet) {
    std::vector<std::pair<int, int>> edges;
    std::vector<EdgeLabel> labels;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);  // oriented i -> i+1
        labels.push_back({letters[static_cast<std::size_t>(i)], false});
    }
    return Graph::labelled(n, edges, labels, alphabet);
}

}  // namespace

TEST_SUITE("small_cancellation") {

TEST_CASE("word plumbing") {
    const Word w = parse_word("a b^-1 c", kAbc);
    REQUIRE(w.size() == 3);
    CHECK(w[1].inverse);
    CHECK(format_word(w, kAbc) == "a b^-1 c");
    CHECK(free_reduce(parse_word("a a^-1 b b^-1", kAbc)).empty());
    CHECK(free_reduce(parse_word("a b b^-1 a", kAbc)) == parse_word("a a", kAbc));
    CHECK(inverse_word(parse_word("a b", kAbc)) == parse_word("b^-1 a^-1", kAbc));
}

TEST_CASE("relator extraction") {
    SUBCASE("forests contribute nothing") {
        const Graph tree = Graph::labelled(3, {{0, 1}, {1, 2}}, {{0, false}, {1, false}}, kAbc);
        CHECK(extract_relators(LabelledFamily({tree}, kAbc), 6).empty());
    }
    SUBCASE("a labelled triangle yields all rotations in both directions") {
        const LabelledFamily fam({labelled_cycle(3, {0, 1, 2}, kAbc)}, kAbc);
        const auto relators = extract_relators(fam, 3);
        CHECK(relators.size() == 6);
        CHECK(relators.contains(parse_word("a b c", kAbc)));
        CHECK(relators.contains(parse_word("b c a", kAbc)));
        CHECK(relators.contains(parse_word("c^-1 b^-1 a^-1", kAbc)));
    }
    SUBCASE("the girth filter answers without inspecting graphs") {
        const LabelledFamily fam({labelled_cycle(5, {0, 1, 2, 0, 1}, kAbc)}, kAbc);
        RelatorOracle oracle(fam);
        CHECK_FALSE(oracle.is_relator(parse_word("a b", kAbc)));
        CHECK(oracle.is_relator(parse_word("a b c a b", kAbc)));
    }
}

TEST_CASE("small cancellation checking") {
    SUBCASE("one all-distinct cycle passes") {
        const LabelledFamily fam({labelled_cycle(6, {0, 1, 2, 0, 1, 2}, kAbc)}, kAbc);
        // lambda * girth = 6 * 5/6 = 5: paths of length up to 4 must be unique.
        const auto res = check_small_cancellation(fam, {1, 2});
        CHECK_FALSE(res.ok);  // abcabc repeats the length-3 word "a b c"
        const auto strict = check_small_cancellation(
            LabelledFamily({labelled_cycle(3, {0, 1, 2}, kAbc)}, kAbc), {1, 2});
        CHECK(strict.ok);
    }
    SUBCASE("two cycles carrying the same long word violate") {
        const Graph c1 = labelled_cycle(5, {0, 1, 2, 0, 1}, kAbc);
        const Graph c2 = labelled_cycle(5, {0, 1, 2, 1, 0}, kAbc);
        const auto res = check_small_cancellation(LabelledFamily({c1, c2}, kAbc), {1, 2});
        REQUIRE_FALSE(res.ok);
        REQUIRE(res.violation.has_value());
        CHECK(res.violation->word.size() >= 3);
    }
    SUBCASE("lambda outside (0,1) is rejected") {
        const LabelledFamily fam({labelled_cycle(3, {0, 1, 2}, kAbc)}, kAbc);
        CHECK_THROWS_AS(check_small_cancellation(fam, {1, 1}), ArgumentError);
        CHECK_THROWS_AS(check_small_cancellation(fam, {0, 2}), ArgumentError);
    }
    SUBCASE("the cost guard refuses over budget") {
        const LabelledFamily fam({labelled_cycle(12, {0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2}, kAbc)},
                                 kAbc);
        CHECK_THROWS_AS(check_small_cancellation(fam, {1, 2}, 1), BudgetError);
    }
}

TEST_CASE("label search") {
    SUBCASE("a triangle with three letters succeeds") {
        const auto res = label_search({twtest::cycle(3)}, 3, {1, 2}, 17, 64);
        REQUIRE(res.success);
        const LabelledFamily fam(res.labelled, res.alphabet);
        CHECK(check_small_cancellation(fam, {1, 2}).ok);
    }
    SUBCASE("the empty family is trivially labelled") {
        const auto res = label_search({}, 2, {1, 6}, 3, 4);
        CHECK(res.success);
        CHECK(res.labelled.empty());
    }
    SUBCASE("two high-girth graphs from seeded search pass the checker") {
        const auto res = label_search({twtest::cycle(7), twtest::cycle(9)}, 4, {1, 2}, 23, 400);
        REQUIRE(res.success);
        CHECK(check_small_cancellation(LabelledFamily(res.labelled, res.alphabet), {1, 2}).ok);
    }
}

TEST_CASE("Dehn decisions") {
    const LabelledFamily fam({labelled_cycle(3, {0, 1, 2}, kAbc)}, kAbc);
    RelatorOracle oracle(fam);
    SUBCASE("the empty word is trivial") {
        CHECK(dehn_decide({}, oracle).verdict == DehnVerdict::trivial);
    }
    SUBCASE("free reduction alone suffices with no relators") {
        const Graph tree = Graph::labelled(2, {{0, 1}}, {{0, false}}, kAbc);
        const LabelledFamily forest({tree}, kAbc);
        RelatorOracle empty(forest);
        const auto res = dehn_decide(parse_word("a a^-1 b b^-1", kAbc), empty);
        CHECK(res.verdict == DehnVerdict::trivial);
    }
    SUBCASE("relators and their cyclic conjugates are trivial") {
        const std::set<Word> relators = oracle.relators_up_to(3);  // copy: dehn regrows the cache
        for (const Word& r : relators) {
            CHECK(dehn_decide(r, oracle).verdict == DehnVerdict::trivial);
        }
    }
    SUBCASE("single letters are nontrivial when relators are long") {
        CHECK(dehn_decide(parse_word("a", kAbc), oracle).verdict == DehnVerdict::nontrivial);
        CHECK(dehn_decide(parse_word("b^-1", kAbc), oracle).verdict == DehnVerdict::nontrivial);
    }
    SUBCASE("rewrites strictly shrink: products of relators decide trivial") {
        // (abc) conjugated: c^-1 (abc) c = c^-1 a b c c -> reduces via the relator set.
        const Word w = free_reduce(parse_word("c^-1 a b c c c^-1 c", kAbc));
        const auto res = dehn_decide(w, oracle);
        CHECK(res.verdict == DehnVerdict::trivial);
    }
}

TEST_CASE("free-group consistency, exhaustive over short words") {
    // R = empty via a forest family: decisions must match free reduction.
    const Graph tree = Graph::labelled(4, {{0, 1}, {1, 2}, {2, 3}},
                                       {{0, false}, {1, false}, {0, true}},
                                       {"a", "b"});
    const LabelledFamily fam({tree}, {"a", "b"});
    RelatorOracle oracle(fam);
    std::vector<Word> words{{}};
    for (int len = 1; len <= 5; ++len) {
        std::vector<Word> next;
        for (const Word& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (int id = 0; id < 2; ++id)
                    for (bool inv : {false, true}) {
                        Word e = w;
                        e.push_back({id, inv});
                        next.push_back(e);
                    }
        for (const Word& w : next) {
            const auto res = dehn_decide(w, oracle);
            CHECK((res.verdict == DehnVerdict::trivial) == free_reduce(w).empty());
        }
        words.insert(words.end(), next.begin(), next.end());
    }
}

}  // TEST_SUITE
