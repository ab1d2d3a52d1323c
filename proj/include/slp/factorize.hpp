#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slp/factorization.hpp"
#include "slp/word.hpp"

namespace slp {

/// Reusable LZ-factorization engine.
///
/// Each phrase is the longest prefix of the remaining suffix that occurs
/// entirely inside the text before it (no self-overlap); a symbol seen for
/// the first time forms a phrase of length 1. Runs in linear time with an
/// online suffix automaton of the processed prefix. Buffers are kept between
/// calls, so one instance per thread avoids reallocations in sweeps.
class LzFactorizer {
public:
    std::vector<std::size_t> phrase_lengths(std::span<const Symbol> w);
    std::size_t phrase_count(std::span<const Symbol> w);

private:
    template <typename Sink>
    void run(std::span<const Symbol> w, Sink&& sink);

    std::vector<std::uint32_t> dense_;
    std::vector<std::uint32_t> alphabet_;
    std::vector<std::int32_t> next_;
    std::vector<std::int32_t> link_;
    std::vector<std::int32_t> len_;
};

/// LZ(w). Empty input is a DomainError.
Factorization lz_factorize(const Word& w);

/// C-factorization: each phrase is the longest prefix of the remaining suffix
/// occurring twice in the text up to and including itself (overlap allowed).
Factorization c_factorize(const Word& w);

/// LZ boundaries shifted one position left, except those whose left phrase has length 1.
Factorization semi_greedy(const Word& w);
Factorization semi_greedy(const Factorization& lz);

/// z(w) = |LZ(w)|.
std::size_t z(const Word& w);

/// z(w) - 1 + sigma_w, a lower bound on the size of any grammar of w.
std::size_t grammar_lower_bound(const Word& w);

/// Longest previous factor (overlap allowed) at every position, via suffix array and LCP.
std::vector<std::size_t> longest_previous_factor(std::span<const Symbol> w);

/// Suffix array of w (prefix doubling) and its LCP array (Kasai); lcp[0] = 0.
std::vector<std::size_t> suffix_array(std::span<const Symbol> w);
std::vector<std::size_t> lcp_array(std::span<const Symbol> w, std::span<const std::size_t> sa);

} // namespace slp
