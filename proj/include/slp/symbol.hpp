#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "slp/errors.hpp"

namespace slp {

enum class SymbolKind : std::uint8_t { terminal, nonterminal };

/// Interned symbol. Terminals are single bytes; nonterminals are numbered
/// from 1 and render as X1, X2, ... The two id spaces never collide.
class Symbol {
public:
    constexpr Symbol() = default;

    static constexpr Symbol terminal(unsigned char c) { return Symbol(c); }

    static constexpr Symbol nonterminal(std::uint32_t index) {
        if (index == 0 || index >= kNonterminalBit) {
            throw DomainError("nonterminal index out of range");
        }
        return Symbol(kNonterminalBit | index);
    }

    constexpr SymbolKind kind() const {
        return (raw_ & kNonterminalBit) != 0 ? SymbolKind::nonterminal : SymbolKind::terminal;
    }
    constexpr bool is_terminal() const { return kind() == SymbolKind::terminal; }
    constexpr bool is_nonterminal() const { return kind() == SymbolKind::nonterminal; }

    /// Byte value of a terminal.
    constexpr unsigned char code() const { return static_cast<unsigned char>(raw_ & 0xffu); }
    /// Number of a nonterminal (1-based).
    constexpr std::uint32_t index() const { return raw_ & ~kNonterminalBit; }

    constexpr std::uint32_t raw() const { return raw_; }

    std::string name() const {
        if (is_terminal()) return std::string(1, static_cast<char>(code()));
        return "X" + std::to_string(index());
    }

    friend constexpr bool operator==(Symbol, Symbol) = default;
    friend constexpr auto operator<=>(Symbol, Symbol) = default;

private:
    static constexpr std::uint32_t kNonterminalBit = 0x80000000u;
    constexpr explicit Symbol(std::uint32_t raw) : raw_(raw) {}

    std::uint32_t raw_ = 0;
};

/// Ordered pair (a, b) selecting the roles of the two letters in F, P, Q and the morphisms.
class OrderedAlphabet {
public:
    constexpr OrderedAlphabet(Symbol first, Symbol second) : first_(first), second_(second) {
        if (first == second) throw DomainError("ordered alphabet needs two distinct symbols");
    }

    /// The default alphabet (a, b).
    static constexpr OrderedAlphabet ab() { return {Symbol::terminal('a'), Symbol::terminal('b')}; }
    /// The swapped alphabet (b, a).
    static constexpr OrderedAlphabet ba() { return {Symbol::terminal('b'), Symbol::terminal('a')}; }

    constexpr Symbol first() const { return first_; }
    constexpr Symbol second() const { return second_; }
    constexpr OrderedAlphabet swapped() const { return {second_, first_}; }

    friend constexpr bool operator==(const OrderedAlphabet&, const OrderedAlphabet&) = default;

private:
    Symbol first_;
    Symbol second_;
};

} // namespace slp

template <>
struct std::hash<slp::Symbol> {
    std::size_t operator()(slp::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.raw()); }
};
