#pragma once

// Slow, direct implementations used as independent oracles by the tests.
// They work on std::string and share no code with the library.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace naive {

/// LZ phrases: longest prefix of the rest occurring wholly inside the text before it.
std::vector<std::string> lz(const std::string& w);

/// C-factorization phrases: longest prefix occurring earlier, overlap allowed.
std::vector<std::string> cfact(const std::string& w);

/// Maximum number of pairwise disjoint occurrences of xy, by dynamic programming.
std::size_t bigram_count(const std::string& w, const std::string& xy);

/// Smallest SLP size by iterative deepening over rule sequences, no pruning
/// beyond "every rule derives a substring of w".
std::size_t smallest_grammar(const std::string& w);

/// Every RePair grammar of w up to equivalence, each rendered as the sorted
/// list of the derivation trees of its nonterminals (start tree first).
std::set<std::vector<std::string>> repair_grammars(const std::string& w);

/// Fibonacci words by string concatenation: F_1 = y, F_2 = x.
std::string fib(int n, char x = 'a', char y = 'b');

} // namespace naive
