#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "slp/word.hpp"

namespace slp {

/// Index of a nonterminal in its grammar's name table.
using NonterminalId = std::uint32_t;

struct BinaryRhs {
    NonterminalId left;
    NonterminalId right;
    friend bool operator==(const BinaryRhs&, const BinaryRhs&) = default;
};

/// A -> alpha (unary, terminal) or A -> BC (binary).
struct Production {
    NonterminalId lhs;
    std::variant<Symbol, BinaryRhs> rhs;

    bool is_unary() const { return std::holds_alternative<Symbol>(rhs); }
    Symbol terminal() const { return std::get<Symbol>(rhs); }
    const BinaryRhs& pair() const { return std::get<BinaryRhs>(rhs); }

    friend bool operator==(const Production&, const Production&) = default;
};

/// Straight-line program: productions in Chomsky normal form plus a start symbol.
/// Immutable once built; use GrammarBuilder to construct one.
class Grammar {
public:
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(NonterminalId id) const { return names_.at(id); }
    std::optional<NonterminalId> find(std::string_view name) const;

    std::span<const Production> productions() const noexcept { return productions_; }
    NonterminalId start() const noexcept { return start_; }

    /// The first production whose lhs is `id`, or nullptr.
    const Production* definition(NonterminalId id) const;

    /// Number of productions (unary ones included).
    std::size_t size() const noexcept { return productions_.size(); }
    /// Total length of right-hand sides; a secondary statistic only.
    std::size_t rhs_length_sum() const;

    friend bool operator==(const Grammar& lhs, const Grammar& rhs) {
        return lhs.names_ == rhs.names_ && lhs.productions_ == rhs.productions_ && lhs.start_ == rhs.start_;
    }

private:
    friend class GrammarBuilder;

    std::vector<std::string> names_;
    std::vector<Production> productions_;
    std::vector<std::int32_t> definition_;
    NonterminalId start_ = 0;
};

class GrammarBuilder {
public:
    /// Interns `name`, returning its id.
    NonterminalId nonterminal(std::string_view name);

    GrammarBuilder& unary(NonterminalId lhs, Symbol terminal);
    GrammarBuilder& binary(NonterminalId lhs, NonterminalId left, NonterminalId right);
    GrammarBuilder& unary(std::string_view lhs, Symbol terminal);
    GrammarBuilder& binary(std::string_view lhs, std::string_view left, std::string_view right);

    Grammar build(NonterminalId start) const;
    Grammar build(std::string_view start);

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NonterminalId> ids_;
    std::vector<Production> productions_;
};

enum class Violation { none, missing_start, non_cnf, duplicate_definition, undefined_nonterminal, cycle, unreachable };

struct ValidationReport {
    Violation violation = Violation::none;
    std::string message;

    bool ok() const noexcept { return violation == Violation::none; }
    explicit operator bool() const noexcept { return ok(); }
};

/// Checks CNF shapes, single definitions, acyclicity and reachability, in that order.
ValidationReport validate(const Grammar& g);
/// Throws PreconditionError carrying the validation message.
void require_valid(const Grammar& g);

std::size_t size(const Grammar& g);

/// Expansion length of every nonterminal, indexed by id (0 for ids without a definition).
/// Saturates at UINT64_MAX. Requires a valid grammar.
std::vector<std::uint64_t> expansion_lengths(const Grammar& g);

/// The word derived from the start symbol. Refuses expansions longer than the generator cap.
Word expand(const Grammar& g);

/// Renames nonterminals N1, N2, ... by first occurrence in a post-order
/// traversal of the grammar DAG; productions are listed N1..Nk and Nk is the start.
Grammar canonicalize(const Grammar& g);

/// Compact encoding of canonicalize(g), suitable as a set or map key.
std::vector<std::uint64_t> canonical_key(const Grammar& g);

/// Equal derivation trees up to a renaming bijection of nonterminals.
bool equivalent(const Grammar& lhs, const Grammar& rhs);

/// {A -> a, B -> b, X3 -> AB, X_i -> X_{i-1} X_{i-2}}, the recurrence read as a grammar of size n.
Grammar from_recursive_fib(int n, OrderedAlphabet ab = OrderedAlphabet::ab());

/// One line in production order, e.g. "{A->a, B->b, X3->A B} start X3".
std::string to_text(const Grammar& g);

} // namespace slp
