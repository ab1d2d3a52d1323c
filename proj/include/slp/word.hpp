#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slp/symbol.hpp"

namespace slp {

/// Immutable finite sequence of symbols over a mixed terminal/nonterminal alphabet.
///
/// Positions are 0-based in the API; w[i..j] in 1-based notation is
/// `w.substr(i - 1, j - i + 1)`.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

    /// Word of terminals, one per byte of `text`.
    static Word from_string(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    Symbol front() const { return symbols_.front(); }
    Symbol back() const { return symbols_.back(); }

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    Word substr(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return substr(0, len); }
    Word suffix_from(std::size_t pos) const { return substr(pos, size() - pos); }

    /// Number of distinct symbols (sigma_w).
    std::size_t distinct_symbols() const;
    /// Distinct symbols in order of first occurrence.
    std::vector<Symbol> alphabet() const;

    bool contains(Symbol s) const;
    bool has_nonterminals() const;

    /// Names of the symbols, concatenated.
    std::string str() const;

    friend Word operator+(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& lhs, const Word& rhs) { return lhs.symbols_ <=> rhs.symbols_; }

private:
    std::vector<Symbol> symbols_;
};

inline Word operator""_w(const char* text, std::size_t len) { return Word::from_string({text, len}); }

} // namespace slp

template <>
struct std::hash<slp::Word> {
    std::size_t operator()(const slp::Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto s : w) h = (h ^ s.raw()) * 1099511628211ull;
        return h;
    }
};
