#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "slp/repair.hpp"
#include "slp/word.hpp"

namespace slp {

/// splitmix64 finalizer, used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

/// Name of the engine behind every sampled sweep.
inline constexpr const char* kSweepRng = "mt19937_64 (splitmix64-derived chunk seeds)";

/// Which occurrence subsets a sweep visits. Exhaustive plans visit the
/// 2^m - 2 proper non-empty subsets of m occurrences in mask order; sampled
/// plans draw `samples` subsets uniformly from the proper non-empty ones,
/// in chunks with independently seeded engines so any thread count gives
/// the same sequence.
struct SubsetPlan {
    std::size_t occurrences = 0;
    bool exhaustive = true;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    std::size_t size() const;
};

struct SubsetSweepOutcome {
    std::size_t tested = 0;
    std::size_t min_z = SIZE_MAX;
    std::size_t max_z = 0;
    /// Lowest-index subset with z < threshold.
    std::optional<std::size_t> failure_index;
    std::vector<std::size_t> failure_subset; ///< chosen occurrence indices
    std::size_t failure_z = 0;
};

/// Replaces the occurrences selected by `mask` (bit j = occurrence j) and returns z of the result.
std::size_t subset_z(std::span<const Symbol> w, std::span<const std::size_t> occurrences,
                     std::span<const std::uint64_t> mask, Symbol fresh);

/// The subset visited at position `index` of a plan.
std::vector<std::uint64_t> plan_subset(const SubsetPlan& plan, std::size_t index);

SubsetSweepOutcome subset_sweep_serial(const Word& w, std::span<const std::size_t> occurrences, Symbol fresh,
                                       std::size_t threshold, const SubsetPlan& plan);
SubsetSweepOutcome subset_sweep_parallel(const Word& w, std::span<const std::size_t> occurrences, Symbol fresh,
                                         std::size_t threshold, const SubsetPlan& plan);

/// Random word for sweep position `index`: alphabet {a,b} or {a,b,c}, length 1..max_length.
Word sweep_word(std::uint64_t seed, std::size_t index, std::size_t max_length);

struct LowerBoundSweepOutcome {
    std::size_t tested = 0;
    std::size_t tight = 0; ///< words with z(w) - 1 + sigma_w = g*(w)
    std::optional<std::size_t> failure_index;
    std::optional<Word> failure_word;
};

/// Checks grammar_lower_bound(w) <= smallest_size(w) on `count` sweep words.
LowerBoundSweepOutcome lower_bound_sweep_serial(std::size_t count, std::size_t max_length, std::uint64_t seed);
LowerBoundSweepOutcome lower_bound_sweep_parallel(std::size_t count, std::size_t max_length, std::uint64_t seed);

} // namespace slp
