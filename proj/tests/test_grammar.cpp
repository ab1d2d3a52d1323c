#include <gtest/gtest.h>

#include "slp/derivation.hpp"
#include "slp/errors.hpp"
#include "slp/fibonacci.hpp"
#include "slp/grammar.hpp"
#include "slp/repair.hpp"
#include "slp/serialize.hpp"

using namespace slp;

namespace {

Symbol t(char c) { return Symbol::terminal(static_cast<unsigned char>(c)); }

Grammar aba_grammar(const char* a, const char* b, const char* c, const char* d) {
    GrammarBuilder gb;
    gb.unary(a, t('a')).unary(b, t('b')).binary(c, a, b).binary(d, c, a);
    return gb.build(d);
}

// A size-9 grammar of ababaabaaba whose partial derivation tree has the
// leaves a|b|ab|a|a|b|aab|a.
Grammar leaves_grammar() {
    GrammarBuilder gb;
    gb.unary("A", t('a')).unary("B", t('b'));
    gb.binary("C", "A", "B").binary("F", "A", "A").binary("E", "F", "B");
    gb.binary("G1", "C", "C").binary("G2", "E", "E").binary("G3", "G2", "A").binary("S", "G1", "G3");
    return gb.build("S");
}

} // namespace

TEST(Validate, Examples) {
    EXPECT_TRUE(validate(aba_grammar("A", "B", "C", "D")));
    {
        GrammarBuilder gb;
        gb.binary("X", "X", "X");
        EXPECT_EQ(validate(gb.build("X")).violation, Violation::cycle);
    }
    {
        GrammarBuilder gb;
        gb.unary("A", t('a')).unary("B", t('b')).binary("C", "A", "B");
        EXPECT_EQ(validate(gb.build("A")).violation, Violation::unreachable);
    }
    {
        GrammarBuilder gb;
        gb.unary("A", t('a')).unary("A", t('b'));
        EXPECT_EQ(validate(gb.build("A")).violation, Violation::duplicate_definition);
    }
    {
        GrammarBuilder gb;
        gb.binary("S", "A", "A");
        EXPECT_EQ(validate(gb.build("S")).violation, Violation::undefined_nonterminal);
    }
    {
        GrammarBuilder gb;
        gb.unary("A", Symbol::nonterminal(3));
        EXPECT_EQ(validate(gb.build("A")).violation, Violation::non_cnf);
    }
}

TEST(Expand, Examples) {
    EXPECT_EQ(expand(aba_grammar("A", "B", "C", "D")).str(), "aba");
    GrammarBuilder gb;
    gb.unary("A", t('a'));
    EXPECT_EQ(expand(gb.build("A")).str(), "a");
    EXPECT_EQ(expand(leaves_grammar()).str(), "ababaabaaba");
    GrammarBuilder bad;
    bad.binary("X", "X", "X");
    EXPECT_THROW(expand(bad.build("X")), PreconditionError);
}

TEST(Size, CountsProductions) {
    EXPECT_EQ(size(leaves_grammar()), 9u);
    EXPECT_EQ(size(repair("ababaabaaba"_w).grammar), 7u);
    GrammarBuilder gb;
    gb.unary("A", t('a'));
    EXPECT_EQ(size(gb.build("A")), 1u);
    EXPECT_EQ(leaves_grammar().rhs_length_sum(), 16u);
}

TEST(DerivationTree, Shapes) {
    auto tree = derivation_tree(aba_grammar("A", "B", "C", "D"));
    auto g = tree.grammar();
    auto labels = tree.leaf_labels();
    ASSERT_EQ(labels.size(), 3u);
    EXPECT_EQ(g.name(labels[0]), "A");
    EXPECT_EQ(g.name(labels[1]), "B");
    EXPECT_EQ(g.name(labels[2]), "A");
    EXPECT_EQ(g.name(tree.root().label), "D");
    EXPECT_EQ(g.name(tree.children(tree.root()).first.label), "C");
    EXPECT_EQ(tree.internal_count(), 2u);

    GrammarBuilder gb;
    gb.unary("A", t('a'));
    auto single = derivation_tree(gb.build("A"));
    EXPECT_TRUE(single.is_leaf(single.root()));
    EXPECT_EQ(derivation_tree(leaves_grammar()).leaf_count(), 11u);
}

TEST(PartialDerivationTree, Leaves) {
    auto pdt = partial_derivation_tree(leaves_grammar());
    EXPECT_EQ(pdt.leaves.size(), 8u);
    std::uint64_t pos = 0;
    for (const auto& leaf : pdt.leaves) {
        EXPECT_EQ(leaf.start, pos);
        pos += leaf.length;
    }
    EXPECT_EQ(pos, 11u);

    GrammarBuilder gb;
    gb.unary("A", t('a')).unary("B", t('b')).binary("C", "A", "B");
    EXPECT_EQ(partial_derivation_tree(gb.build("C")).leaves.size(), 2u);
}

TEST(GFactorization, Examples) {
    EXPECT_EQ(g_factorization(leaves_grammar()).to_text(), "a|b|ab|a|a|b|aab|a");
    {
        GrammarBuilder gb;
        gb.unary("A", t('a')).unary("B", t('b')).binary("C", "A", "B");
        EXPECT_EQ(g_factorization(gb.build("C")).to_text(), "a|b");
    }
    {
        GrammarBuilder gb;
        gb.unary("A", t('a')).binary("X", "A", "A").binary("Y", "X", "X");
        EXPECT_EQ(g_factorization(gb.build("Y")).to_text(), "a|a|aa");
    }
}

TEST(Equivalence, Examples) {
    auto g1 = aba_grammar("A", "B", "C", "D");
    auto g2 = aba_grammar("X", "Y", "Z", "W");
    EXPECT_TRUE(equivalent(g1, g2));
    EXPECT_TRUE(equivalent(g1, g1));
    EXPECT_FALSE(equivalent(leaves_grammar(), repair("ababaabaaba"_w).grammar));

    GrammarBuilder gb;
    gb.unary("A", t('a')).unary("B", t('b')).binary("C", "B", "A").binary("D", "A", "C");
    EXPECT_FALSE(equivalent(g1, gb.build("D"))); // same word, other bracketing
}

TEST(Canonicalize, RenamesOnly) {
    auto c = canonicalize(aba_grammar("X", "Y", "Z", "W"));
    EXPECT_EQ(to_text(c), "{N1->a, N2->b, N3->N1 N2, N4->N3 N1} start N4");
    EXPECT_EQ(canonicalize(aba_grammar("A", "B", "C", "D")), c);
    EXPECT_EQ(canonical_key(aba_grammar("A", "B", "C", "D")), canonical_key(aba_grammar("P", "Q", "R", "S")));
}

TEST(Canonicalize, Idempotent) {
    auto g = leaves_grammar();
    EXPECT_EQ(canonicalize(canonicalize(g)), canonicalize(g));
    EXPECT_EQ(expand(canonicalize(g)), expand(g));
}

TEST(RecursiveFib, Grammar) {
    auto g7 = from_recursive_fib(7);
    EXPECT_EQ(size(g7), 7u);
    EXPECT_EQ(expand(g7).str(), "abaababaabaab");
    EXPECT_EQ(to_text(from_recursive_fib(3)), "{A->a, B->b, X3->A B} start X3");
    EXPECT_EQ(expand(from_recursive_fib(10)).size(), 55u);
    EXPECT_THROW(from_recursive_fib(2), DomainError);
}

TEST(Json, RoundTrip) {
    auto g = leaves_grammar();
    auto doc = grammar_to_json(g);
    EXPECT_EQ(doc["start"], "S");
    EXPECT_EQ(grammar_from_json(doc), g);
    EXPECT_THROW(grammar_from_json(nlohmann::json::parse(R"({"start":1})")), DomainError);
    EXPECT_EQ(factorization_to_json(g_factorization(g))["phrases"].size(), 8u);
}

TEST(Dot, Emits) {
    auto dot = derivation_tree(leaves_grammar()).to_dot();
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(partial_derivation_tree(leaves_grammar()).to_dot().find("circle"), std::string::npos);
}
