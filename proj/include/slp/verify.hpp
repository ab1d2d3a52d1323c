#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "slp/grammar.hpp"
#include "slp/repair.hpp"
#include "slp/word.hpp"

namespace slp {

/// Replaces exactly the occurrences of `bigram` starting at the given
/// 0-based positions. Positions must be actual, pairwise non-overlapping
/// occurrences and `fresh` must not occur in w.
Word replace_subset(const Word& w, Bigram bigram, std::span<const std::size_t> positions, Symbol fresh);

enum class CaseFamily { fib, fib_even, fib_odd, p, q };
enum class ReplaceMode { all, not_all };

/// One non-RePair replacement strategy: a cell of the table indexed by word
/// family, bigram and whether all or only some occurrences are replaced.
struct StrategyCase {
    int id = 0;
    CaseFamily family = CaseFamily::fib;
    char first = 'a';
    char second = 'b';
    ReplaceMode mode = ReplaceMode::all;

    std::string label() const; ///< "case01" .. "case16"
    std::string bigram() const;
};

/// The sixteen cases, by id.
const std::vector<StrategyCase>& strategy_cases();
const StrategyCase& strategy_case(int id);

/// Smallest order n at which a case applies.
int case_min_order(const StrategyCase& c);

/// The word a case acts on at order n, and the phrase count its results must reach.
///
/// F-family cases act on F_n and need z(R) >= n - 1. P cases act on P_k,
/// k = floor(n/2), reached after n - 2k + 1 replacements, so they need
/// z(R) >= 2k - 2; Q cases act on Q_j, j = floor(n/2) - 1, reached after
/// n - 2j replacements, so they need z(R) >= 2j - 1. In each case the
/// threshold equals z of the target word.
struct CaseTarget {
    Word word;
    std::string label; ///< "F9", "P4", "Q3"
    std::size_t threshold = 0;
};
CaseTarget case_target(const StrategyCase& c, int n);

struct CheckReport {
    std::string claim;
    std::string range;
    bool passed = true;
    std::optional<std::string> counterexample;
    std::string rng;
    std::uint64_t seed = 0;
    std::string details;
};

nlohmann::json report_to_json(const CheckReport& r);

struct CaseCheckOptions {
    /// Occurrence counts up to this are swept exhaustively.
    std::size_t exhaustive_limit = 20;
    std::size_t samples = 100'000;
    std::uint64_t seed = 0;
    bool parallel = true;
};

/// Checks one case at one order. A bigram absent from the target, or a
/// replace-all of a most frequent bigram (RePair's own move), is a DomainError.
CheckReport check_strategy_case(const StrategyCase& c, int n, const CaseCheckOptions& options = {});

/// Claim ids in report order.
const std::vector<std::string>& claim_ids();

/// Runs the selected claims (all when empty; "cases" selects the sixteen
/// strategy cases). Each claim sweeps up to min(n_max, its own cap).
/// Unknown ids are a DomainError.
std::vector<CheckReport> run_suite(const std::vector<std::string>& claims, int n_max, std::uint64_t seed);

/// Grammars gathered from RePair runs and enumerations, the recursive
/// Fibonacci grammars and oracle enumerations, for population-wide checks.
std::vector<Grammar> grammar_population(int n_max, std::uint64_t seed);

} // namespace slp
