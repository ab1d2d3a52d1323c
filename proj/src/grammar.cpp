#include "slp/grammar.hpp"

#include <algorithm>
#include <limits>

#include "slp/errors.hpp"
#include "slp/fibonacci.hpp"

namespace slp {

std::optional<NonterminalId> Grammar::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<NonterminalId>(it - names_.begin());
}

const Production* Grammar::definition(NonterminalId id) const {
    if (id >= definition_.size() || definition_[id] < 0) return nullptr;
    return &productions_[static_cast<std::size_t>(definition_[id])];
}

std::size_t Grammar::rhs_length_sum() const {
    std::size_t total = 0;
    for (const auto& p : productions_) total += p.is_unary() ? 1 : 2;
    return total;
}

NonterminalId GrammarBuilder::nonterminal(std::string_view name) {
    if (name.empty()) throw DomainError("nonterminal names must be non-empty");
    auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<NonterminalId>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
}

GrammarBuilder& GrammarBuilder::unary(NonterminalId lhs, Symbol terminal) {
    productions_.push_back({lhs, terminal});
    return *this;
}

GrammarBuilder& GrammarBuilder::binary(NonterminalId lhs, NonterminalId left, NonterminalId right) {
    productions_.push_back({lhs, BinaryRhs{left, right}});
    return *this;
}

GrammarBuilder& GrammarBuilder::unary(std::string_view lhs, Symbol terminal) {
    return unary(nonterminal(lhs), terminal);
}

GrammarBuilder& GrammarBuilder::binary(std::string_view lhs, std::string_view left, std::string_view right) {
    auto l = nonterminal(lhs);
    auto a = nonterminal(left);
    auto b = nonterminal(right);
    return binary(l, a, b);
}

Grammar GrammarBuilder::build(NonterminalId start) const {
    Grammar g;
    g.names_ = names_;
    g.productions_ = productions_;
    g.start_ = start;
    g.definition_.assign(names_.size(), -1);
    for (std::size_t i = 0; i < productions_.size(); ++i) {
        auto lhs = productions_[i].lhs;
        if (lhs >= names_.size()) throw DomainError("production lhs id out of range");
        if (g.definition_[lhs] < 0) g.definition_[lhs] = static_cast<std::int32_t>(i);
        if (!productions_[i].is_unary()) {
            const auto& rhs = productions_[i].pair();
            if (rhs.left >= names_.size() || rhs.right >= names_.size()) {
                throw DomainError("production rhs id out of range");
            }
        }
    }
    if (start >= names_.size()) throw DomainError("start id out of range");
    return g;
}

Grammar GrammarBuilder::build(std::string_view start) { return build(nonterminal(start)); }

ValidationReport validate(const Grammar& g) {
    auto fail = [](Violation v, std::string msg) { return ValidationReport{v, std::move(msg)}; };
    const auto n = g.names().size();
    if (g.definition(g.start()) == nullptr) {
        return fail(Violation::missing_start, "start symbol " + g.name(g.start()) + " has no production");
    }
    for (const auto& p : g.productions()) {
        if (p.is_unary() && !p.terminal().is_terminal()) {
            return fail(Violation::non_cnf, "unary production of " + g.name(p.lhs) + " must derive a terminal");
        }
    }
    std::vector<int> defs(n, 0);
    for (const auto& p : g.productions()) {
        if (++defs[p.lhs] == 2) {
            return fail(Violation::duplicate_definition, g.name(p.lhs) + " is defined more than once");
        }
    }
    for (const auto& p : g.productions()) {
        if (p.is_unary()) continue;
        for (auto child : {p.pair().left, p.pair().right}) {
            if (defs[child] == 0) {
                return fail(Violation::undefined_nonterminal,
                            g.name(p.lhs) + " refers to undefined nonterminal " + g.name(child));
            }
        }
    }

    // Iterative DFS with colors: 0 new, 1 on stack, 2 done.
    std::vector<std::uint8_t> color(n, 0);
    for (NonterminalId root = 0; root < n; ++root) {
        if (defs[root] == 0 || color[root] != 0) continue;
        std::vector<std::pair<NonterminalId, int>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const auto* p = g.definition(node);
            if (p->is_unary() || next == 2) {
                color[node] = 2;
                stack.pop_back();
                continue;
            }
            auto child = next == 0 ? p->pair().left : p->pair().right;
            ++next;
            if (color[child] == 1) {
                return fail(Violation::cycle, "cycle through " + g.name(child));
            }
            if (color[child] == 0) {
                color[child] = 1;
                stack.emplace_back(child, 0);
            }
        }
    }

    std::vector<bool> reached(n, false);
    std::vector<NonterminalId> todo{g.start()};
    reached[g.start()] = true;
    while (!todo.empty()) {
        auto node = todo.back();
        todo.pop_back();
        const auto* p = g.definition(node);
        if (p->is_unary()) continue;
        for (auto child : {p->pair().left, p->pair().right}) {
            if (!reached[child]) {
                reached[child] = true;
                todo.push_back(child);
            }
        }
    }
    std::string unreachable;
    for (const auto& p : g.productions()) {
        if (!reached[p.lhs]) unreachable += (unreachable.empty() ? "" : ", ") + g.name(p.lhs);
    }
    if (!unreachable.empty()) return fail(Violation::unreachable, "unreachable: " + unreachable);
    return {};
}

void require_valid(const Grammar& g) {
    if (auto report = validate(g); !report) throw PreconditionError("invalid grammar: " + report.message);
}

std::size_t size(const Grammar& g) { return g.size(); }

namespace {

// Nonterminals reachable from start in post-order (children before parents).
std::vector<NonterminalId> post_order(const Grammar& g) {
    std::vector<NonterminalId> order;
    std::vector<bool> seen(g.names().size(), false);
    std::vector<std::pair<NonterminalId, int>> stack{{g.start(), 0}};
    seen[g.start()] = true;
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        const auto* p = g.definition(node);
        if (p->is_unary() || next == 2) {
            order.push_back(node);
            stack.pop_back();
            continue;
        }
        auto child = next == 0 ? p->pair().left : p->pair().right;
        ++next;
        if (!seen[child]) {
            seen[child] = true;
            stack.emplace_back(child, 0);
        }
    }
    return order;
}

} // namespace

std::vector<std::uint64_t> expansion_lengths(const Grammar& g) {
    require_valid(g);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> len(g.names().size(), 0);
    for (auto id : post_order(g)) {
        const auto* p = g.definition(id);
        if (p->is_unary()) {
            len[id] = 1;
        } else {
            auto l = len[p->pair().left], r = len[p->pair().right];
            len[id] = l > kMax - r ? kMax : l + r;
        }
    }
    return len;
}

Word expand(const Grammar& g) {
    auto len = expansion_lengths(g);
    if (len[g.start()] > generator_length_cap()) {
        throw ResourceError("grammar expands to more than " + std::to_string(generator_length_cap()) + " symbols");
    }
    std::vector<Symbol> out;
    out.reserve(len[g.start()]);
    std::vector<NonterminalId> stack{g.start()};
    while (!stack.empty()) {
        auto node = stack.back();
        stack.pop_back();
        const auto* p = g.definition(node);
        if (p->is_unary()) {
            out.push_back(p->terminal());
        } else {
            stack.push_back(p->pair().right);
            stack.push_back(p->pair().left);
        }
    }
    return Word(std::move(out));
}

Grammar canonicalize(const Grammar& g) {
    require_valid(g);
    auto order = post_order(g);
    std::vector<NonterminalId> number(g.names().size(), 0);
    GrammarBuilder b;
    for (std::size_t k = 0; k < order.size(); ++k) {
        number[order[k]] = b.nonterminal("N" + std::to_string(k + 1));
    }
    for (auto id : order) {
        const auto* p = g.definition(id);
        if (p->is_unary()) {
            b.unary(number[id], p->terminal());
        } else {
            b.binary(number[id], number[p->pair().left], number[p->pair().right]);
        }
    }
    return b.build(number[g.start()]);
}

std::vector<std::uint64_t> canonical_key(const Grammar& g) {
    require_valid(g);
    auto order = post_order(g);
    std::vector<std::uint64_t> number(g.names().size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) number[order[k]] = k;
    std::vector<std::uint64_t> key;
    key.reserve(order.size());
    for (auto id : order) {
        const auto* p = g.definition(id);
        if (p->is_unary()) {
            key.push_back((std::uint64_t{1} << 63) | p->terminal().raw());
        } else {
            key.push_back((number[p->pair().left] << 32) | number[p->pair().right]);
        }
    }
    return key;
}

bool equivalent(const Grammar& lhs, const Grammar& rhs) { return canonical_key(lhs) == canonical_key(rhs); }

Grammar from_recursive_fib(int n, OrderedAlphabet ab) {
    if (n < 3) throw DomainError("from_recursive_fib needs n >= 3");
    GrammarBuilder b;
    auto a_id = b.nonterminal("A");
    auto b_id = b.nonterminal("B");
    b.unary(a_id, ab.first()).unary(b_id, ab.second());
    // X_2 is A and X_1 is B.
    NonterminalId older = b_id, newer = a_id;
    for (int i = 3; i <= n; ++i) {
        auto id = b.nonterminal("X" + std::to_string(i));
        b.binary(id, newer, older);
        older = newer;
        newer = id;
    }
    return b.build(newer);
}

std::string to_text(const Grammar& g) {
    std::string out = "{";
    bool first = true;
    for (const auto& p : g.productions()) {
        if (!first) out += ", ";
        first = false;
        out += g.name(p.lhs) + "->";
        if (p.is_unary()) {
            out += p.terminal().name();
        } else {
            out += g.name(p.pair().left) + " " + g.name(p.pair().right);
        }
    }
    out += "} start " + g.name(g.start());
    return out;
}

} // namespace slp
