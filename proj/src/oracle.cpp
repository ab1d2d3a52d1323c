#include "slp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

#include "slp/errors.hpp"
#include "slp/factorize.hpp"
#include "slp/repair.hpp"

namespace slp {

namespace {

struct Split {
    std::uint32_t left;
    std::uint32_t right;
};

// Distinct substrings of one word, numbered densely.
class SubstringTable {
public:
    explicit SubstringTable(const Word& w) : n_(w.size()), id_(w.size()) {
        std::unordered_map<Symbol, std::uint32_t> single;
        for (std::size_t i = 0; i < n_; ++i) {
            auto [it, inserted] = single.try_emplace(w[i], static_cast<std::uint32_t>(length_.size()));
            if (inserted) add(i, 1);
            id_[i].assign(n_ - i + 1, 0);
            id_[i][1] = it->second;
        }
        for (std::size_t len = 2; len <= n_; ++len) {
            std::unordered_map<std::uint64_t, std::uint32_t> extend;
            for (std::size_t i = 0; i + len <= n_; ++i) {
                std::uint64_t key = (std::uint64_t{id_[i][len - 1]} << 32) | id_[i + len - 1][1];
                auto [it, inserted] = extend.try_emplace(key, static_cast<std::uint32_t>(length_.size()));
                if (inserted) add(i, len);
                id_[i][len] = it->second;
            }
        }
        splits_.resize(length_.size());
        for (std::uint32_t s = 0; s < length_.size(); ++s) {
            const auto p = first_[s];
            for (std::size_t k = 1; k < length_[s]; ++k) {
                splits_[s].push_back({id_[p][k], id_[p + k][length_[s] - k]});
            }
        }
    }

    std::size_t count() const { return length_.size(); }
    std::uint32_t id(std::size_t pos, std::size_t len) const { return id_[pos][len]; }
    std::size_t length(std::uint32_t s) const { return length_[s]; }
    std::size_t first(std::uint32_t s) const { return first_[s]; }
    const std::vector<Split>& splits(std::uint32_t s) const { return splits_[s]; }

private:
    void add(std::size_t pos, std::size_t len) {
        length_.push_back(len);
        first_.push_back(pos);
    }

    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> id_;
    std::vector<std::size_t> length_;
    std::vector<std::size_t> first_;
    std::vector<std::vector<Split>> splits_;
};

class ClosedSetSearch {
public:
    ClosedSetSearch(const Word& w, std::optional<std::size_t> max_nodes)
        : table_(w), in_set_(table_.count(), 0), stamp_(table_.count(), 0), max_nodes_(max_nodes) {
        for (std::size_t i = 0; i < w.size(); ++i) insert(table_.id(i, 1));
        insert(table_.id(0, w.size()));
    }

    std::size_t base_size() const { return members_.size(); }
    std::size_t nodes() const { return nodes_; }

    /// Is there a closed set of size <= limit?
    bool feasible(std::size_t limit) {
        limit_ = limit;
        collect_ = false;
        return dfs();
    }

    /// Every closed set of size <= limit, as sorted member lists.
    std::set<std::vector<std::uint32_t>> all(std::size_t limit) {
        limit_ = limit;
        collect_ = true;
        found_.clear();
        dfs();
        return std::move(found_);
    }

    const SubstringTable& table() const { return table_; }

    void set_bracket(std::size_t lower, std::size_t upper) { bracket_ = {lower, upper}; }

private:
    void insert(std::uint32_t s) {
        if (in_set_[s]) return;
        in_set_[s] = 1;
        members_.push_back(s);
        if (table_.length(s) >= 2) unresolved_.push_back(s);
    }

    bool splits_inside(std::uint32_t s) const {
        for (const auto& sp : table_.splits(s)) {
            if (in_set_[sp.left] && in_set_[sp.right]) return true;
        }
        return false;
    }

    // Unresolved members with no split inside the set each need a new
    // member among their proper prefixes and suffixes; count a family of
    // such members whose candidate sets are pairwise disjoint.
    std::size_t packing_bound() {
        ++epoch_;
        std::size_t bound = 0;
        for (auto m : unresolved_) {
            if (splits_inside(m)) continue;
            bool disjoint = true;
            for (const auto& sp : table_.splits(m)) {
                for (auto c : {sp.left, sp.right}) {
                    if (!in_set_[c] && stamp_[c] == epoch_) disjoint = false;
                }
            }
            if (!disjoint) continue;
            for (const auto& sp : table_.splits(m)) {
                for (auto c : {sp.left, sp.right}) {
                    if (!in_set_[c]) stamp_[c] = epoch_;
                }
            }
            ++bound;
        }
        return bound;
    }

    bool dfs() {
        if (max_nodes_ && nodes_ >= *max_nodes_) {
            throw ResourceError("oracle search exceeded " + std::to_string(*max_nodes_) + " nodes", bracket_);
        }
        ++nodes_;
        if (unresolved_.empty()) {
            if (collect_) {
                auto set = members_;
                std::sort(set.begin(), set.end());
                found_.insert(std::move(set));
            }
            return true;
        }
        if (members_.size() + packing_bound() > limit_) return false;

        // Resolve the longest unresolved member (smallest id among equals).
        auto pick = std::min_element(unresolved_.begin(), unresolved_.end(), [&](auto x, auto y) {
            auto lx = table_.length(x), ly = table_.length(y);
            return lx != ly ? lx > ly : x < y;
        });
        const std::uint32_t m = *pick;
        const auto slot = static_cast<std::size_t>(pick - unresolved_.begin());
        *pick = unresolved_.back();
        unresolved_.pop_back();
        const std::size_t unresolved_mark = unresolved_.size();

        bool any = false;
        if (splits_inside(m)) {
            // Adding members can only enlarge the remaining obligations.
            any = dfs();
        } else {
            for (const auto& sp : table_.splits(m)) {
                std::size_t added = !in_set_[sp.left] + (sp.left != sp.right && !in_set_[sp.right]);
                if (members_.size() + added > limit_) continue;
                const std::size_t member_mark = members_.size();
                insert(sp.left);
                insert(sp.right);
                bool ok = dfs();
                while (members_.size() > member_mark) {
                    in_set_[members_.back()] = 0;
                    members_.pop_back();
                }
                unresolved_.resize(unresolved_mark);
                any = any || ok;
                if (ok && !collect_) break;
            }
        }
        unresolved_.push_back(m);
        std::swap(unresolved_.back(), unresolved_[slot]);
        return any;
    }

    SubstringTable table_;
    std::vector<char> in_set_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> members_;
    std::vector<std::uint32_t> unresolved_;
    std::size_t limit_ = 0;
    bool collect_ = false;
    std::set<std::vector<std::uint32_t>> found_;
    std::optional<std::size_t> max_nodes_;
    std::size_t nodes_ = 0;
    Bracket bracket_;
};

void check_input(const Word& w, const OracleOptions& options) {
    if (w.empty()) throw DomainError("the oracle needs a non-empty word");
    if (w.has_nonterminals()) throw DomainError("the oracle works on terminal words");
    if (w.size() > options.max_length) {
        throw ResourceError("input of length " + std::to_string(w.size()) + " exceeds the oracle budget of " +
                                std::to_string(options.max_length) + " symbols",
                            Bracket{grammar_lower_bound(w), repair(w).grammar.size()});
    }
}

std::size_t structural_bound(const Word& w) {
    // k binary rules derive words of length at most 2^k.
    std::size_t binary = w.size() <= 1 ? 0 : std::bit_width(w.size() - 1);
    return w.distinct_symbols() + binary;
}

struct Solved {
    OracleResult result;
    std::optional<ClosedSetSearch> search;
};

Solved solve(const Word& w, const OracleOptions& options) {
    check_input(w, options);
    OracleResult r;
    r.lower_bound = grammar_lower_bound(w);
    r.upper_bound = std::min(repair(w, TieBreak::first_occurrence).grammar.size(),
                             repair(w, TieBreak::lexicographic).grammar.size());
    Solved out{r, std::nullopt};
    auto& search = out.search.emplace(w, options.max_nodes);
    std::size_t lower = std::max(structural_bound(w), search.base_size());
    out.result.g_star = out.result.upper_bound;
    for (std::size_t limit = lower; limit < out.result.upper_bound; ++limit) {
        search.set_bracket(limit, out.result.upper_bound);
        if (search.feasible(limit)) {
            out.result.g_star = limit;
            break;
        }
    }
    out.result.nodes = search.nodes();
    return out;
}

} // namespace

OracleResult solve_smallest(const Word& w, const OracleOptions& options) { return solve(w, options).result; }

std::size_t smallest_size(const Word& w, const OracleOptions& options) { return solve_smallest(w, options).g_star; }

bool verify_lower_bound(const Word& w, const OracleOptions& options) {
    auto r = solve_smallest(w, options);
    return r.lower_bound <= r.g_star;
}

SmallestEnumeration enumerate_smallest(const Word& w, const OracleOptions& options) {
    auto solved = solve(w, options);
    auto& search = *solved.search;
    const auto g_star = solved.result.g_star;
    search.set_bracket(g_star, g_star);
    auto sets = search.all(g_star);
    const auto& table = search.table();

    std::map<std::vector<std::uint64_t>, Grammar> grammars;
    for (const auto& set : sets) {
        std::vector<std::uint32_t> index(table.count(), 0);
        for (std::size_t k = 0; k < set.size(); ++k) index[set[k]] = static_cast<std::uint32_t>(k);
        std::vector<std::vector<Split>> options_per_member(set.size());
        for (std::size_t k = 0; k < set.size(); ++k) {
            for (const auto& sp : table.splits(set[k])) {
                if (std::binary_search(set.begin(), set.end(), sp.left) &&
                    std::binary_search(set.begin(), set.end(), sp.right)) {
                    options_per_member[k].push_back(sp);
                }
            }
        }
        // Odometer over split choices.
        std::vector<std::size_t> choice(set.size(), 0);
        const auto root = table.id(0, w.size());
        while (true) {
            GrammarBuilder b;
            for (std::size_t k = 0; k < set.size(); ++k) b.nonterminal("S" + std::to_string(k));
            for (std::size_t k = 0; k < set.size(); ++k) {
                if (table.length(set[k]) == 1) {
                    b.unary(static_cast<NonterminalId>(k), w[table.first(set[k])]);
                } else {
                    const auto& sp = options_per_member[k][choice[k]];
                    b.binary(static_cast<NonterminalId>(k), index[sp.left], index[sp.right]);
                }
            }
            auto g = b.build(index[root]);
            if (validate(g)) {
                auto key = canonical_key(g);
                if (grammars.count(key) == 0) grammars.emplace(std::move(key), canonicalize(g));
            }
            std::size_t k = 0;
            while (k < set.size() && (options_per_member[k].empty() || ++choice[k] == options_per_member[k].size())) {
                choice[k] = 0;
                ++k;
            }
            if (k == set.size()) break;
        }
    }

    SmallestEnumeration out{solved.result, {}};
    out.summary.nodes = search.nodes();
    for (auto& [key, g] : grammars) out.grammars.push_back(std::move(g));
    return out;
}

} // namespace slp
