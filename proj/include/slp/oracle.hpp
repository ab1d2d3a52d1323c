#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "slp/grammar.hpp"
#include "slp/word.hpp"

namespace slp {

struct OracleOptions {
    /// Longest input the search accepts.
    std::size_t max_length = 60;
    /// Search nodes allowed before giving up with a ResourceError; unlimited if empty.
    std::optional<std::size_t> max_nodes;
};

struct OracleResult {
    std::size_t g_star = 0;
    std::size_t lower_bound = 0; ///< z(w) - 1 + sigma_w
    std::size_t upper_bound = 0; ///< best RePair size over the built-in policies
    std::size_t nodes = 0;       ///< search nodes visited
};

struct SmallestEnumeration {
    OracleResult summary;
    std::vector<Grammar> grammars; ///< canonical forms, sorted by canonical key
};

/// Exact g*(w) by search over derivation-closed substring sets.
///
/// A smallest SLP has one nonterminal per distinct derived substring, so it
/// corresponds to a set S of substrings of w containing w and its symbols in
/// which every member of length >= 2 splits into two members. Iterative
/// deepening on |S| starts from sigma_w + ceil(log2 |w|), a bound independent
/// of the LZ argument, and stops at the RePair size.
OracleResult solve_smallest(const Word& w, const OracleOptions& options = {});

std::size_t smallest_size(const Word& w, const OracleOptions& options = {});

/// Default budget for enumerate_smallest.
inline constexpr std::size_t kEnumerateMaxLength = 40;

/// Opt(w): every smallest grammar up to equivalence.
SmallestEnumeration enumerate_smallest(const Word& w, const OracleOptions& options = {kEnumerateMaxLength, {}});

/// grammar_lower_bound(w) <= smallest_size(w).
bool verify_lower_bound(const Word& w, const OracleOptions& options = {});

} // namespace slp
