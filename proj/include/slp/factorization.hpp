#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slp/word.hpp"

namespace slp {

enum class FactorizationKind { lz, c, semi_greedy, g };

std::string_view to_string(FactorizationKind kind);

/// A word cut into non-empty phrases. Stored as exclusive end offsets of
/// each phrase, so the last end always equals the subject length.
class Factorization {
public:
    Factorization(Word subject, std::vector<std::size_t> ends, FactorizationKind kind);

    static Factorization from_lengths(Word subject, std::span<const std::size_t> lengths, FactorizationKind kind);

    const Word& subject() const noexcept { return subject_; }
    FactorizationKind kind() const noexcept { return kind_; }

    /// Number of phrases.
    std::size_t size() const noexcept { return ends_.size(); }
    std::span<const std::size_t> ends() const noexcept { return ends_; }

    std::size_t phrase_start(std::size_t k) const { return k == 0 ? 0 : ends_[k - 1]; }
    std::size_t phrase_length(std::size_t k) const { return ends_[k] - phrase_start(k); }
    Word phrase(std::size_t k) const { return subject_.substr(phrase_start(k), phrase_length(k)); }
    std::vector<Word> phrases() const;
    std::vector<std::size_t> lengths() const;

    /// Phrases joined with '|', e.g. "a|b|ab|a|aba|aba".
    std::string to_text() const;

    /// Same subject and same cut points (the kind is ignored).
    friend bool operator==(const Factorization& lhs, const Factorization& rhs) {
        return lhs.subject_ == rhs.subject_ && lhs.ends_ == rhs.ends_;
    }

private:
    Word subject_;
    std::vector<std::size_t> ends_;
    FactorizationKind kind_;
};

} // namespace slp
