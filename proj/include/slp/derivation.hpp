#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slp/factorization.hpp"
#include "slp/grammar.hpp"

namespace slp {

/// A node of a derivation tree: its label and the 0-based interval of the
/// expansion it spans. Terminals are identified with their parents, so a
/// node is a leaf exactly when its label has a unary production.
struct TreeNode {
    NonterminalId label;
    std::uint64_t start;
    std::uint64_t length;

    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Derivation tree of a grammar, represented by the grammar DAG plus
/// memoized expansion lengths. Nodes are produced on demand.
class DerivationTree {
public:
    explicit DerivationTree(Grammar g);

    const Grammar& grammar() const noexcept { return grammar_; }
    TreeNode root() const;
    bool is_leaf(const TreeNode& node) const;
    std::pair<TreeNode, TreeNode> children(const TreeNode& node) const;
    std::uint64_t expansion_length(NonterminalId id) const { return lengths_.at(id); }

    std::uint64_t leaf_count() const { return lengths_[grammar_.start()]; }
    std::uint64_t internal_count() const { return leaf_count() - 1; }

    /// Leaf labels left to right; ResourceError when there are more than `cap`.
    std::vector<NonterminalId> leaf_labels(std::size_t cap = 1u << 20) const;

    /// Graphviz digraph; terminal leaves are boxed.
    std::string to_dot(std::size_t max_nodes = 4096) const;

private:
    Grammar grammar_;
    std::vector<std::uint64_t> lengths_;
};

DerivationTree derivation_tree(const Grammar& g);

/// Maximal top part of the derivation tree in which no expanded node has a
/// same-labelled node to its left. Leaves tile [0, |w|).
struct PartialDerivationTree {
    Grammar grammar;
    std::vector<TreeNode> internal; ///< pre-order
    std::vector<TreeNode> leaves;   ///< left to right

    /// Graphviz digraph with the leaves of this tree circled.
    std::string to_dot() const;
};

PartialDerivationTree partial_derivation_tree(const Grammar& g);

/// Factorization of expand(g) whose phrases are the leaves of the partial derivation tree.
Factorization g_factorization(const Grammar& g);

} // namespace slp
