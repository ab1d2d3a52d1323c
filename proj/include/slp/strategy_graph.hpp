#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slp/word.hpp"

namespace slp {

enum class WordFamily { fib, p, q };

/// A member F_i, P_i or Q_i of the families visited by RePair on F_n.
struct FamilyMember {
    WordFamily family;
    int order;

    std::string label() const; // "F11", "P5", "Q2"
    friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
    friend auto operator<=>(const FamilyMember&, const FamilyMember&) = default;
};

struct StrategyEdge {
    FamilyMember from;
    FamilyMember to;
    friend bool operator==(const StrategyEdge&, const StrategyEdge&) = default;
    friend auto operator<=>(const StrategyEdge&, const StrategyEdge&) = default;
};

/// Graph of the words reachable by replace-all steps of RePair on F_n:
/// F_i (4 <= i <= n), P_i (3 <= i <= n/2), Q_i (2 <= i <= n/2 - 1), with
/// edges F_i -> F_{i-1}, F_{2k} -> P_k, P_i -> Q_{i-1} and Q_i -> P_i.
/// Sinks are F_4 and Q_2.
class StrategyGraph {
public:
    explicit StrategyGraph(int n);

    int order() const noexcept { return n_; }
    const std::vector<FamilyMember>& vertices() const noexcept { return vertices_; }
    const std::vector<StrategyEdge>& edges() const noexcept { return edges_; }

    FamilyMember source() const;
    std::vector<FamilyMember> sinks() const;
    bool has_edge(const FamilyMember& from, const FamilyMember& to) const;

    /// Number of distinct source-to-sink paths.
    std::size_t path_count() const;
    /// Every path's edge count.
    std::vector<std::size_t> path_lengths() const;

    /// Graphviz with the F row on top and the P/Q row below.
    std::string to_dot() const;

private:
    int n_;
    std::vector<FamilyMember> vertices_;
    std::vector<StrategyEdge> edges_;
};

/// Requires n >= 6.
StrategyGraph strategy_graph(int n);

/// Identifies a binary word as F_i, P_i or Q_i over some ordered pair of its
/// two symbols (orders F >= 3, P >= 2, Q >= 2), or nullopt.
std::optional<FamilyMember> classify_family_word(const Word& w);

} // namespace slp
