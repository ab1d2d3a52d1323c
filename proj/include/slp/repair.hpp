#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slp/grammar.hpp"
#include "slp/word.hpp"

namespace slp {

struct Bigram {
    Symbol first;
    Symbol second;
    friend bool operator==(const Bigram&, const Bigram&) = default;
    friend auto operator<=>(const Bigram&, const Bigram&) = default;
};

/// Maximum number of pairwise non-overlapping occurrences of `bigram` in w.
/// Requires |w| >= 2.
std::size_t count_nonoverlapping(const Word& w, Bigram bigram);

/// Start offsets of the occurrences picked by a left-to-right greedy scan;
/// these are the occurrences replace_all rewrites.
std::vector<std::size_t> greedy_occurrences(const Word& w, Bigram bigram);

/// All bigrams attaining the maximum non-overlapping count, in order of first occurrence.
std::vector<Bigram> most_frequent_bigrams(const Word& w);

/// Replaces the greedy left-to-right occurrences of `bigram` with `fresh`,
/// which must not occur in w.
Word replace_all(const Word& w, Bigram bigram, Symbol fresh);

/// Deterministic choice among equally most frequent bigrams.
enum class TieBreak {
    first_occurrence, ///< the one occurring first in the current sequence
    lexicographic,    ///< smallest (first, second) by symbol id
};

struct ReplacementStep {
    Bigram bigram;
    Symbol fresh;
    Word before;
    Word after;
};

/// Record of one RePair run. Sequence symbols are nonterminals whose
/// index k names grammar nonterminal k-1.
struct ReplacementTrace {
    std::vector<ReplacementStep> steps;
    Word final_sequence;
    std::vector<std::string> names;

    /// "<before> --[XY->Z]--> <after>", one line per step.
    std::string to_text() const;
};

struct RepairResult {
    Grammar grammar;
    ReplacementTrace trace;
};

/// RePair: unary rules for each terminal, then repeated replacement of a most
/// frequent bigram while some bigram has two non-overlapping occurrences,
/// then a left fold of the remaining sequence.
RepairResult repair(const Word& w, TieBreak policy = TieBreak::first_occurrence);

/// Rebuilds the grammar described by a trace (final stage as a left fold).
Grammar grammar_from_trace(const ReplacementTrace& trace, const Word& input);

struct RepairEnumerationOptions {
    std::size_t max_input_length = 100'000;
    /// Longest final sequence whose bracketings are enumerated; Catalan growth makes this the real cost cap.
    std::size_t max_final_length = 12;
    bool record_transitions = false;
};

/// One replacement observed during enumeration: words before and after, with names rendered.
struct RepairTransition {
    Word before;
    Word after;
    friend bool operator==(const RepairTransition&, const RepairTransition&) = default;
    friend auto operator<=>(const RepairTransition&, const RepairTransition&) = default;
};

struct RepairEnumeration {
    std::vector<Grammar> grammars; ///< canonical forms, sorted by canonical key
    std::vector<RepairTransition> transitions; ///< distinct, sorted; filled on request
    std::size_t states_explored = 0;
};

/// Every RePair grammar of w up to equivalence: branches on each most
/// frequent bigram at every step and on every bracketing of the final sequence.
RepairEnumeration enumerate_repair(const Word& w, const RepairEnumerationOptions& options = {});

} // namespace slp
