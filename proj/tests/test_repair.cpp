#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "naive.hpp"
#include "slp/errors.hpp"
#include "slp/fibonacci.hpp"
#include "slp/grammar.hpp"
#include "slp/repair.hpp"

using namespace slp;

namespace {

Symbol t(char c) { return Symbol::terminal(static_cast<unsigned char>(c)); }
Bigram bg(const char* s) { return {t(s[0]), t(s[1])}; }

// Same rendering as naive::repair_grammars: start tree, then every binary rule's tree sorted.
std::vector<std::string> render(const Grammar& g) {
    std::function<std::string(NonterminalId)> tree = [&](NonterminalId id) -> std::string {
        const auto* p = g.definition(id);
        if (p->is_unary()) return p->terminal().name();
        return "(" + tree(p->pair().left) + tree(p->pair().right) + ")";
    };
    std::vector<std::string> rest;
    for (const auto& p : g.productions()) {
        if (!p.is_unary()) rest.push_back(tree(p.lhs));
    }
    std::sort(rest.begin(), rest.end());
    std::vector<std::string> out{tree(g.start())};
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

} // namespace

TEST(BigramCount, Examples) {
    EXPECT_EQ(count_nonoverlapping("abaababa"_w, bg("ab")), 3u);
    EXPECT_EQ(count_nonoverlapping("aaa"_w, bg("aa")), 1u);
    EXPECT_EQ(count_nonoverlapping(fib_word(7), bg("ab")), 5u);
    EXPECT_THROW(count_nonoverlapping("a"_w, bg("aa")), DomainError);
}

TEST(BigramCount, AgreesWithNaive) {
    std::mt19937_64 rng(5);
    const char* pairs[] = {"aa", "ab", "ba", "bb"};
    for (int trial = 0; trial < 2000; ++trial) {
        std::string w;
        auto n = 2 + rng() % 30;
        for (std::size_t i = 0; i < n; ++i) w += (rng() % 3 == 0) ? 'b' : 'a';
        for (auto p : pairs) {
            EXPECT_EQ(count_nonoverlapping(Word::from_string(w), bg(p)), naive::bigram_count(w, p)) << w << " " << p;
        }
    }
}

TEST(MostFrequent, Examples) {
    EXPECT_EQ(most_frequent_bigrams(fib_word(8)), (std::vector<Bigram>{bg("ab"), bg("ba")}));
    EXPECT_EQ(most_frequent_bigrams(fib_word(7)), (std::vector<Bigram>{bg("ab")}));
    EXPECT_EQ(most_frequent_bigrams(p_word(4)), (std::vector<Bigram>{bg("ab")}));
    EXPECT_THROW(most_frequent_bigrams("a"_w), DomainError);
}

TEST(ReplaceAll, Examples) {
    auto x = Symbol::nonterminal(1);
    EXPECT_EQ(replace_all(fib_word(8), bg("ba"), x), p_word(4, {t('a'), x}));
    EXPECT_EQ(replace_all(fib_word(7), bg("ab"), x), fib_word(6, {x, t('a')}));
    EXPECT_EQ(replace_all("aaa"_w, bg("aa"), x), (Word{x, t('a')}));
    EXPECT_THROW(replace_all(Word{x, t('a')}, bg("ab"), x), DomainError);
}

TEST(Repair, Sizes) {
    EXPECT_EQ(size(repair(fib_word(7)).grammar), 7u);
    EXPECT_EQ(size(repair(fib_word(7), TieBreak::lexicographic).grammar), 7u);
    auto single = repair("a"_w);
    EXPECT_EQ(to_text(single.grammar), "{A->a} start A");
    auto fig = repair("ababaabaaba"_w);
    EXPECT_EQ(size(fig.grammar), 7u);
    EXPECT_EQ(expand(fig.grammar).str(), "ababaabaaba");
}

TEST(Repair, ExpandsBackOnRandomWords) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        std::string w;
        auto n = 1 + rng() % 60;
        for (std::size_t i = 0; i < n; ++i) w += static_cast<char>('a' + rng() % 3);
        auto word = Word::from_string(w);
        for (auto policy : {TieBreak::first_occurrence, TieBreak::lexicographic}) {
            auto r = repair(word, policy);
            ASSERT_TRUE(validate(r.grammar)) << w;
            EXPECT_EQ(expand(r.grammar), word) << w;
            EXPECT_EQ(grammar_from_trace(r.trace, word), r.grammar) << w;
        }
    }
}

TEST(Repair, TraceText) {
    auto r = repair(fib_word(6));
    EXPECT_FALSE(r.trace.steps.empty());
    auto text = r.trace.to_text();
    EXPECT_NE(text.find("--["), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(r.trace.steps.size()));
}

TEST(EnumerateRepair, Census) {
    EXPECT_EQ(enumerate_repair("abaababa"_w).grammars.size(), 4u);
    EXPECT_EQ(enumerate_repair(fib_word(11)).grammars.size(), 8u);
    auto ab = enumerate_repair("ab"_w);
    ASSERT_EQ(ab.grammars.size(), 1u);
    EXPECT_EQ(to_text(ab.grammars[0]), "{N1->a, N2->b, N3->N1 N2} start N3");
}

TEST(EnumerateRepair, AgreesWithNaive) {
    std::vector<std::string> words{"abaababa", "aaaa", "abcabc", "aabbaabb", "abababab", "abcdabcd", "aaaaaaa"};
    for (int n = 3; n <= 12; ++n) words.push_back(naive::fib(n));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        std::string w;
        auto n = 1 + rng() % 14;
        for (std::size_t i = 0; i < n; ++i) w += static_cast<char>('a' + rng() % 2);
        words.push_back(w);
    }
    for (const auto& w : words) {
        auto expected = naive::repair_grammars(w);
        std::set<std::vector<std::string>> got;
        for (const auto& g : enumerate_repair(Word::from_string(w)).grammars) got.insert(render(g));
        EXPECT_EQ(got, expected) << w;
    }
}

TEST(EnumerateRepair, EveryGrammarIsRepairShaped) {
    for (int n = 6; n <= 14; ++n) {
        auto w = fib_word(n);
        for (const auto& g : enumerate_repair(w).grammars) {
            ASSERT_TRUE(validate(g));
            EXPECT_EQ(expand(g), w);
            EXPECT_EQ(size(g), static_cast<std::size_t>(n));
        }
    }
}

TEST(EnumerateRepair, Transitions) {
    RepairEnumerationOptions opts;
    opts.record_transitions = true;
    auto e = enumerate_repair(fib_word(8), opts);
    EXPECT_FALSE(e.transitions.empty());
    EXPECT_TRUE(std::is_sorted(e.transitions.begin(), e.transitions.end()));
}

TEST(EnumerateRepair, Budget) {
    RepairEnumerationOptions opts;
    opts.max_input_length = 10;
    EXPECT_THROW(enumerate_repair(fib_word(8), opts), ResourceError);
    opts = {};
    opts.max_final_length = 3;
    EXPECT_THROW(enumerate_repair("abcde"_w, opts), ResourceError);
}
