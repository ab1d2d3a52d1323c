#include "slp/strategy_graph.hpp"

#include <algorithm>
#include <map>

#include "slp/errors.hpp"
#include "slp/fibonacci.hpp"

namespace slp {

std::string FamilyMember::label() const {
    const char* prefix = family == WordFamily::fib ? "F" : family == WordFamily::p ? "P" : "Q";
    return prefix + std::to_string(order);
}

StrategyGraph::StrategyGraph(int n) : n_(n) {
    if (n < 6) throw DomainError("strategy graph needs n >= 6");
    const int half = n / 2;
    for (int i = n; i >= 4; --i) vertices_.push_back({WordFamily::fib, i});
    for (int i = half; i >= 3; --i) vertices_.push_back({WordFamily::p, i});
    for (int i = half - 1; i >= 2; --i) vertices_.push_back({WordFamily::q, i});

    for (int i = n; i >= 5; --i) edges_.push_back({{WordFamily::fib, i}, {WordFamily::fib, i - 1}});
    for (int k = 3; k <= half; ++k) edges_.push_back({{WordFamily::fib, 2 * k}, {WordFamily::p, k}});
    for (int i = half; i >= 3; --i) edges_.push_back({{WordFamily::p, i}, {WordFamily::q, i - 1}});
    for (int i = half - 1; i >= 3; --i) edges_.push_back({{WordFamily::q, i}, {WordFamily::p, i}});
    std::sort(edges_.begin(), edges_.end());
}

FamilyMember StrategyGraph::source() const { return {WordFamily::fib, n_}; }

std::vector<FamilyMember> StrategyGraph::sinks() const {
    std::vector<FamilyMember> out;
    for (const auto& v : vertices_) {
        bool has_out = std::any_of(edges_.begin(), edges_.end(), [&](const StrategyEdge& e) { return e.from == v; });
        if (!has_out) out.push_back(v);
    }
    return out;
}

bool StrategyGraph::has_edge(const FamilyMember& from, const FamilyMember& to) const {
    return std::binary_search(edges_.begin(), edges_.end(), StrategyEdge{from, to});
}

std::vector<std::size_t> StrategyGraph::path_lengths() const {
    std::vector<std::size_t> out;
    std::vector<std::pair<FamilyMember, std::size_t>> stack{{source(), 0}};
    while (!stack.empty()) {
        auto [v, depth] = stack.back();
        stack.pop_back();
        bool leaf = true;
        for (const auto& e : edges_) {
            if (e.from == v) {
                leaf = false;
                stack.emplace_back(e.to, depth + 1);
            }
        }
        if (leaf) out.push_back(depth);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t StrategyGraph::path_count() const {
    std::map<FamilyMember, std::size_t> memo;
    auto count = [&](auto&& self, const FamilyMember& v) -> std::size_t {
        if (auto it = memo.find(v); it != memo.end()) return it->second;
        std::size_t total = 0;
        bool leaf = true;
        for (const auto& e : edges_) {
            if (e.from == v) {
                leaf = false;
                total += self(self, e.to);
            }
        }
        return memo[v] = leaf ? 1 : total;
    };
    return count(count, source());
}

std::string StrategyGraph::to_dot() const {
    std::string out = "digraph strategy {\n  rankdir=TB;\n  node [shape=ellipse];\n";
    std::string top = "  { rank=same;";
    std::string bottom = "  { rank=same;";
    for (const auto& v : vertices_) (v.family == WordFamily::fib ? top : bottom) += " " + v.label() + ";";
    out += top + " }\n" + bottom + " }\n";
    for (const auto& e : edges_) out += "  " + e.from.label() + " -> " + e.to.label() + ";\n";
    out += "}\n";
    return out;
}

StrategyGraph strategy_graph(int n) { return StrategyGraph(n); }

namespace {

// Length of F_i is f_i, of P_i is f_{2i-1}, of Q_i is f_{2i}.
std::optional<int> fib_index_of_length(std::size_t length) {
    std::size_t a = 1, b = 1;
    int i = 2;
    while (b < length) {
        std::size_t c = a + b;
        a = b;
        b = c;
        ++i;
    }
    if (b == length) return i;
    return std::nullopt;
}

} // namespace

std::optional<FamilyMember> classify_family_word(const Word& w) {
    auto alphabet = w.alphabet();
    if (alphabet.size() != 2) return std::nullopt;
    auto idx = fib_index_of_length(w.size());
    if (!idx) return std::nullopt;
    const int i = *idx;

    // Rename to a/b by first occurrence so the generator cache only sees two alphabets.
    std::vector<Symbol> renamed;
    renamed.reserve(w.size());
    for (auto s : w) renamed.push_back(Symbol::terminal(s == alphabet[0] ? 'a' : 'b'));
    const Word v(std::move(renamed));

    auto matches = [&](auto generate, int order) {
        return order >= 2 && (generate(order, OrderedAlphabet::ab()) == v || generate(order, OrderedAlphabet::ba()) == v);
    };
    if (i >= 3 && matches(fib_word, i)) return FamilyMember{WordFamily::fib, i};
    if (i % 2 == 1 && matches(p_word, (i + 1) / 2)) return FamilyMember{WordFamily::p, (i + 1) / 2};
    if (i % 2 == 0 && matches(q_word, i / 2)) return FamilyMember{WordFamily::q, i / 2};
    return std::nullopt;
}

} // namespace slp
