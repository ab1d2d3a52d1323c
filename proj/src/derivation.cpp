#include "slp/derivation.hpp"

#include <sstream>
#include <unordered_set>

#include "slp/errors.hpp"
#include "slp/fibonacci.hpp"

namespace slp {

DerivationTree::DerivationTree(Grammar g) : grammar_(std::move(g)), lengths_(expansion_lengths(grammar_)) {}

TreeNode DerivationTree::root() const { return {grammar_.start(), 0, leaf_count()}; }

bool DerivationTree::is_leaf(const TreeNode& node) const { return grammar_.definition(node.label)->is_unary(); }

std::pair<TreeNode, TreeNode> DerivationTree::children(const TreeNode& node) const {
    const auto* p = grammar_.definition(node.label);
    if (p->is_unary()) throw DomainError("leaf node has no children");
    auto left = p->pair().left, right = p->pair().right;
    auto left_len = lengths_[left];
    return {TreeNode{left, node.start, left_len}, TreeNode{right, node.start + left_len, lengths_[right]}};
}

std::vector<NonterminalId> DerivationTree::leaf_labels(std::size_t cap) const {
    if (leaf_count() > cap) throw ResourceError("derivation tree has more than " + std::to_string(cap) + " leaves");
    std::vector<NonterminalId> out;
    out.reserve(leaf_count());
    std::vector<TreeNode> stack{root()};
    while (!stack.empty()) {
        auto node = stack.back();
        stack.pop_back();
        if (is_leaf(node)) {
            out.push_back(node.label);
        } else {
            auto [l, r] = children(node);
            stack.push_back(r);
            stack.push_back(l);
        }
    }
    return out;
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string terminal_label(const Grammar& g, NonterminalId id) {
    return escape(g.definition(id)->terminal().name());
}

} // namespace

std::string DerivationTree::to_dot(std::size_t max_nodes) const {
    if (2 * leaf_count() - 1 > max_nodes) {
        throw ResourceError("derivation tree has more than " + std::to_string(max_nodes) + " nodes");
    }
    std::ostringstream dot;
    dot << "digraph derivation {\n  node [fontname=\"Helvetica\"];\n";
    std::size_t next_id = 0;
    std::vector<std::pair<TreeNode, std::size_t>> stack{{root(), next_id++}};
    while (!stack.empty()) {
        auto [node, id] = stack.back();
        stack.pop_back();
        if (is_leaf(node)) {
            dot << "  n" << id << " [label=\"" << escape(grammar_.name(node.label)) << "\\n"
                << terminal_label(grammar_, node.label) << "\", shape=box];\n";
            continue;
        }
        dot << "  n" << id << " [label=\"" << escape(grammar_.name(node.label)) << "\"];\n";
        auto [l, r] = children(node);
        auto lid = next_id++, rid = next_id++;
        dot << "  n" << id << " -> n" << lid << ";\n  n" << id << " -> n" << rid << ";\n";
        stack.emplace_back(r, rid);
        stack.emplace_back(l, lid);
    }
    dot << "}\n";
    return dot.str();
}

DerivationTree derivation_tree(const Grammar& g) { return DerivationTree(g); }

PartialDerivationTree partial_derivation_tree(const Grammar& g) {
    DerivationTree tree(g);
    PartialDerivationTree pt{g, {}, {}};
    std::vector<bool> seen(g.names().size(), false);
    std::vector<TreeNode> stack{tree.root()};
    while (!stack.empty()) {
        auto node = stack.back();
        stack.pop_back();
        if (tree.is_leaf(node) || seen[node.label]) {
            pt.leaves.push_back(node);
            continue;
        }
        seen[node.label] = true;
        pt.internal.push_back(node);
        auto [l, r] = tree.children(node);
        stack.push_back(r);
        stack.push_back(l);
    }
    return pt;
}

std::string PartialDerivationTree::to_dot() const {
    std::ostringstream dot;
    dot << "digraph partial_derivation {\n  node [fontname=\"Helvetica\"];\n";
    // Nodes are numbered by pre-order position; internal and leaf lists are
    // both in left-to-right order, so a merged walk recovers pre-order.
    std::size_t next_id = 0;
    std::size_t next_internal = 0, next_leaf = 0;
    std::vector<std::pair<std::size_t, int>> open; // (id, children emitted)
    auto emit_edge = [&](std::size_t child) {
        if (open.empty()) return;
        dot << "  n" << open.back().first << " -> n" << child << ";\n";
        if (++open.back().second == 2) open.pop_back();
        while (!open.empty() && open.back().second == 2) open.pop_back();
    };
    while (next_internal < internal.size() || next_leaf < leaves.size()) {
        bool take_internal = next_internal < internal.size() &&
                             (next_leaf >= leaves.size() || internal[next_internal].start < leaves[next_leaf].start ||
                              (internal[next_internal].start == leaves[next_leaf].start &&
                               internal[next_internal].length > leaves[next_leaf].length));
        auto id = next_id++;
        if (take_internal) {
            const auto& node = internal[next_internal++];
            dot << "  n" << id << " [label=\"" << escape(grammar.name(node.label)) << "\"];\n";
            emit_edge(id);
            open.emplace_back(id, 0);
        } else {
            const auto& node = leaves[next_leaf++];
            const auto* p = grammar.definition(node.label);
            dot << "  n" << id << " [label=\"" << escape(grammar.name(node.label));
            if (p->is_unary()) dot << "\\n" << terminal_label(grammar, node.label);
            dot << "\", shape=circle];\n";
            emit_edge(id);
        }
    }
    dot << "}\n";
    return dot.str();
}

Factorization g_factorization(const Grammar& g) {
    auto pt = partial_derivation_tree(g);
    std::vector<std::size_t> ends;
    ends.reserve(pt.leaves.size());
    for (const auto& leaf : pt.leaves) ends.push_back(static_cast<std::size_t>(leaf.start + leaf.length));
    return Factorization(expand(g), std::move(ends), FactorizationKind::g);
}

} // namespace slp
