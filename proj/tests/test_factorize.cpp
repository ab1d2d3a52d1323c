#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "slp/errors.hpp"
#include "slp/factorize.hpp"
#include "slp/fibonacci.hpp"

using namespace slp;

namespace {

std::vector<std::string> texts(const Factorization& f) {
    std::vector<std::string> out;
    for (const auto& p : f.phrases()) out.push_back(p.str());
    return out;
}

std::string random_word(std::mt19937_64& rng, std::size_t sigma, std::size_t max_length) {
    auto n = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
    std::string w;
    for (std::size_t i = 0; i < n; ++i) w += static_cast<char>('a' + rng() % sigma);
    return w;
}

} // namespace

TEST(Lz, Examples) {
    EXPECT_EQ(lz_factorize("ababaabaaba"_w).to_text(), "a|b|ab|a|aba|aba");
    EXPECT_EQ(lz_factorize(fib_word(7)).to_text(), "a|b|a|aba|baaba|ab");
    EXPECT_EQ(lz_factorize("aaaa"_w).to_text(), "a|a|aa");
    EXPECT_THROW(lz_factorize(Word{}), DomainError);
}

TEST(Lz, AgreesWithNaive) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
        auto w = random_word(rng, 1 + trial % 4, 40);
        EXPECT_EQ(texts(lz_factorize(Word::from_string(w))), naive::lz(w)) << w;
    }
}

TEST(Lz, LargeAlphabetUsesHashedLookup) {
    std::string w;
    for (int r = 0; r < 3; ++r)
        for (char c = 'a'; c <= 'p'; ++c) w += c;
    EXPECT_EQ(texts(lz_factorize(Word::from_string(w))), naive::lz(w));
}

TEST(Lz, EngineReuse) {
    LzFactorizer engine;
    EXPECT_EQ(engine.phrase_count("ababaabaaba"_w.symbols()), 6u);
    EXPECT_EQ(engine.phrase_count("a"_w.symbols()), 1u);
    EXPECT_EQ(engine.phrase_lengths(fib_word(7).symbols()), (std::vector<std::size_t>{1, 1, 1, 3, 5, 2}));
}

TEST(CFactorization, Examples) {
    auto f = c_factorize(fib_word(9));
    std::vector<std::string> expected{"a", "b", "a"};
    for (int i = 4; i <= 7; ++i) expected.push_back(reverse(fib_word(i)).str());
    expected.push_back("ab");
    EXPECT_EQ(texts(f), expected);
    EXPECT_EQ(c_factorize("aaaa"_w).to_text(), "a|aaa");
    EXPECT_EQ(c_factorize("ab"_w).to_text(), "a|b");
}

TEST(CFactorization, AgreesWithNaive) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        auto w = random_word(rng, 1 + trial % 3, 40);
        EXPECT_EQ(texts(c_factorize(Word::from_string(w))), naive::cfact(w)) << w;
    }
}

TEST(SuffixArray, SortedAndLcpCorrect) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        auto s = random_word(rng, 1 + trial % 3, 30);
        auto w = Word::from_string(s);
        auto sa = suffix_array(w.symbols());
        auto lcp = lcp_array(w.symbols(), sa);
        for (std::size_t i = 1; i < sa.size(); ++i) {
            auto prev = s.substr(sa[i - 1]), cur = s.substr(sa[i]);
            ASSERT_LT(prev, cur) << s;
            std::size_t h = 0;
            while (h < prev.size() && h < cur.size() && prev[h] == cur[h]) ++h;
            ASSERT_EQ(lcp[i], h) << s;
        }
    }
}

TEST(SemiGreedy, Examples) {
    EXPECT_EQ(semi_greedy(fib_word(7)).to_text(), "a|b|a|ab|abaab|aab");
    EXPECT_EQ(semi_greedy("ab"_w).to_text(), "a|b");
    auto sg = semi_greedy(fib_word(9));
    EXPECT_EQ(sg.phrase(3).str(), "ab");
    for (std::size_t k = 4; k + 1 < sg.size(); ++k) {
        EXPECT_EQ(sg.phrase(k), right_rotation(reverse(fib_word(static_cast<int>(k) + 1))));
    }
    EXPECT_EQ(sg.phrase(sg.size() - 1).str(), "aab");
}

TEST(PhraseCount, Examples) {
    EXPECT_EQ(z(fib_word(9)), 8u);
    EXPECT_EQ(z("a"_w), 1u);
    EXPECT_EQ(z(p_word(4)), 6u);
}

TEST(LowerBound, Examples) {
    EXPECT_EQ(grammar_lower_bound(fib_word(9)), 9u);
    EXPECT_EQ(grammar_lower_bound("a"_w), 1u);
    EXPECT_EQ(grammar_lower_bound("ababaabaaba"_w), 7u);
}
