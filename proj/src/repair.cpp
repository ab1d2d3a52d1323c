#include "slp/repair.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "slp/errors.hpp"

namespace slp {

namespace {

struct BigramStats {
    std::size_t count = 0;
    std::size_t first = 0;
};

std::uint64_t pack(Symbol x, Symbol y) { return (std::uint64_t{x.raw()} << 32) | y.raw(); }
Bigram unpack(std::uint64_t key) {
    auto from_raw = [](std::uint32_t raw) {
        return (raw & 0x80000000u) != 0 ? Symbol::nonterminal(raw & 0x7fffffffu)
                                        : Symbol::terminal(static_cast<unsigned char>(raw));
    };
    return {from_raw(static_cast<std::uint32_t>(key >> 32)), from_raw(static_cast<std::uint32_t>(key))};
}

// Non-overlapping counts of every bigram: x != y counts every occurrence,
// xx counts floor(run / 2) over maximal runs of x.
std::unordered_map<std::uint64_t, BigramStats> bigram_counts(std::span<const Symbol> w) {
    std::unordered_map<std::uint64_t, BigramStats> stats;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i + 1 < n) {
        if (w[i] != w[i + 1]) {
            auto [it, inserted] = stats.try_emplace(pack(w[i], w[i + 1]), BigramStats{0, i});
            ++it->second.count;
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && w[j] == w[i]) ++j;
        auto [it, inserted] = stats.try_emplace(pack(w[i], w[i]), BigramStats{0, i});
        it->second.count += (j - i) / 2;
        i = j - 1;
    }
    return stats;
}

struct Frequent {
    std::size_t count = 0;
    std::vector<Bigram> bigrams; // first-occurrence order
};

Frequent frequent_bigrams(std::span<const Symbol> w) {
    auto stats = bigram_counts(w);
    Frequent out;
    for (const auto& [key, s] : stats) out.count = std::max(out.count, s.count);
    std::vector<std::pair<std::size_t, std::uint64_t>> best;
    for (const auto& [key, s] : stats) {
        if (s.count == out.count) best.emplace_back(s.first, key);
    }
    std::sort(best.begin(), best.end());
    for (auto [pos, key] : best) out.bigrams.push_back(unpack(key));
    return out;
}

void require_pair_length(const Word& w) {
    if (w.size() < 2) throw DomainError("bigram statistics need a word of length at least 2");
}

std::string terminal_rule_name(Symbol c) {
    auto code = c.code();
    if (code >= 'a' && code <= 'z') return std::string(1, static_cast<char>(code - 'a' + 'A'));
    return "T" + std::to_string(code);
}

Bigram choose(const Frequent& f, TieBreak policy) {
    if (policy == TieBreak::first_occurrence) return f.bigrams.front();
    return *std::min_element(f.bigrams.begin(), f.bigrams.end());
}

} // namespace

std::size_t count_nonoverlapping(const Word& w, Bigram bigram) {
    require_pair_length(w);
    return greedy_occurrences(w, bigram).size();
}

std::vector<std::size_t> greedy_occurrences(const Word& w, Bigram bigram) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size();) {
        if (w[i] == bigram.first && w[i + 1] == bigram.second) {
            out.push_back(i);
            i += 2;
        } else {
            ++i;
        }
    }
    return out;
}

std::vector<Bigram> most_frequent_bigrams(const Word& w) {
    require_pair_length(w);
    return frequent_bigrams(w.symbols()).bigrams;
}

Word replace_all(const Word& w, Bigram bigram, Symbol fresh) {
    if (w.contains(fresh)) throw DomainError("fresh symbol " + fresh.name() + " already occurs in the word");
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size();) {
        if (i + 1 < w.size() && w[i] == bigram.first && w[i + 1] == bigram.second) {
            out.push_back(fresh);
            i += 2;
        } else {
            out.push_back(w[i++]);
        }
    }
    return Word(std::move(out));
}

std::string ReplacementTrace::to_text() const {
    auto render = [&](const Word& w) {
        std::string out;
        for (auto s : w) out += s.is_nonterminal() && s.index() <= names.size() ? names[s.index() - 1] : s.name();
        return out;
    };
    auto name = [&](Symbol s) { return render(Word{s}); };
    std::string out;
    for (const auto& step : steps) {
        out += render(step.before) + " --[" + name(step.bigram.first) + name(step.bigram.second) + "->" +
               name(step.fresh) + "]--> " + render(step.after) + "\n";
    }
    return out;
}

RepairResult repair(const Word& w, TieBreak policy) {
    if (w.empty()) throw DomainError("RePair needs a non-empty word");
    if (w.has_nonterminals()) throw DomainError("RePair input must consist of terminals");

    GrammarBuilder b;
    ReplacementTrace trace;
    auto intern = [&](const std::string& name) {
        auto id = b.nonterminal(name);
        trace.names.push_back(name);
        return id;
    };
    auto as_symbol = [](NonterminalId id) { return Symbol::nonterminal(id + 1); };

    // Initial stage.
    std::unordered_map<Symbol, Symbol> unary;
    for (auto c : w.alphabet()) {
        auto id = intern(terminal_rule_name(c));
        b.unary(id, c);
        unary.emplace(c, as_symbol(id));
    }
    std::vector<Symbol> initial;
    initial.reserve(w.size());
    for (auto c : w) initial.push_back(unary.at(c));
    Word seq(std::move(initial));

    // Replacement stage.
    std::size_t fresh_count = 0;
    while (seq.size() >= 2) {
        auto f = frequent_bigrams(seq.symbols());
        if (f.count < 2) break;
        auto bigram = choose(f, policy);
        auto id = intern("X" + std::to_string(++fresh_count));
        b.binary(id, bigram.first.index() - 1, bigram.second.index() - 1);
        auto after = replace_all(seq, bigram, as_symbol(id));
        trace.steps.push_back({bigram, as_symbol(id), seq, after});
        seq = std::move(after);
    }
    trace.final_sequence = seq;

    // Final stage.
    NonterminalId current = seq[0].index() - 1;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        auto id = intern("X" + std::to_string(++fresh_count));
        b.binary(id, current, seq[i].index() - 1);
        current = id;
    }
    return {b.build(current), std::move(trace)};
}

Grammar grammar_from_trace(const ReplacementTrace& trace, const Word& input) {
    const Word& initial = trace.steps.empty() ? trace.final_sequence : trace.steps.front().before;
    if (initial.size() != input.size()) throw DomainError("trace does not match the input length");

    GrammarBuilder b;
    auto name_of = [&](Symbol s) {
        if (!s.is_nonterminal()) throw DomainError("trace sequences must consist of nonterminals");
        return s.index() <= trace.names.size() ? trace.names[s.index() - 1] : s.name();
    };
    std::unordered_map<Symbol, Symbol> terminal_of;
    for (std::size_t i = 0; i < initial.size(); ++i) {
        auto [it, inserted] = terminal_of.emplace(initial[i], input[i]);
        if (inserted) {
            b.unary(name_of(initial[i]), input[i]);
        } else if (it->second != input[i]) {
            throw DomainError("trace maps one nonterminal to two terminals");
        }
    }
    for (const auto& step : trace.steps) {
        b.binary(name_of(step.fresh), name_of(step.bigram.first), name_of(step.bigram.second));
    }
    const auto& seq = trace.final_sequence;
    if (seq.empty()) throw DomainError("trace has an empty final sequence");
    std::string current = name_of(seq[0]);
    // Final-stage names follow the unary and replacement names.
    std::size_t next = terminal_of.size() + trace.steps.size();
    for (std::size_t i = 1; i < seq.size(); ++i) {
        std::string name = ++next <= trace.names.size() ? trace.names[next - 1] : "F" + std::to_string(next);
        b.binary(name, current, name_of(seq[i]));
        current = name;
    }
    return b.build(current);
}

namespace {

// Rules of a partial RePair grammar; nonterminal k (1-based) is rules[k - 1].
struct Rule {
    bool unary;
    std::uint32_t a; // terminal raw, or left index
    std::uint32_t b; // right index
};

class RepairEnumerator {
public:
    RepairEnumerator(const RepairEnumerationOptions& options) : options_(options) {}

    RepairEnumeration run(const Word& w) {
        std::vector<Rule> rules;
        std::unordered_map<Symbol, std::uint32_t> unary;
        for (auto c : w.alphabet()) {
            rules.push_back({true, c.raw(), 0});
            unary.emplace(c, static_cast<std::uint32_t>(rules.size()));
        }
        std::vector<Symbol> seq;
        seq.reserve(w.size());
        for (auto c : w) seq.push_back(Symbol::nonterminal(unary.at(c)));
        explore(rules, Word(std::move(seq)));

        RepairEnumeration out;
        for (auto& [key, g] : grammars_) out.grammars.push_back(std::move(g));
        out.transitions.assign(transitions_.begin(), transitions_.end());
        out.states_explored = states_;
        return out;
    }

private:
    // Post-order numbering of everything reachable from `roots`, left to right.
    static std::vector<std::uint32_t> post_order(const std::vector<Rule>& rules, std::span<const std::uint32_t> roots,
                                                 std::vector<std::uint32_t>& number) {
        number.assign(rules.size() + 1, 0);
        std::vector<std::uint32_t> order;
        for (auto root : roots) {
            if (number[root] != 0) continue;
            std::vector<std::pair<std::uint32_t, int>> stack{{root, 0}};
            number[root] = ~0u;
            while (!stack.empty()) {
                auto& [node, next] = stack.back();
                const auto& r = rules[node - 1];
                if (r.unary || next == 2) {
                    order.push_back(node);
                    number[node] = static_cast<std::uint32_t>(order.size());
                    stack.pop_back();
                    continue;
                }
                auto child = next == 0 ? r.a : r.b;
                ++next;
                if (number[child] == 0) {
                    number[child] = ~0u;
                    stack.emplace_back(child, 0);
                }
            }
        }
        return order;
    }

    static std::vector<std::uint64_t> encode(const std::vector<Rule>& rules, std::span<const std::uint32_t> roots) {
        std::vector<std::uint32_t> number;
        auto order = post_order(rules, roots, number);
        std::vector<std::uint64_t> key;
        key.reserve(order.size() + roots.size() + 1);
        for (auto id : order) {
            const auto& r = rules[id - 1];
            key.push_back(r.unary ? (std::uint64_t{1} << 63) | r.a
                                  : (std::uint64_t{number[r.a]} << 32) | number[r.b]);
        }
        key.push_back(~std::uint64_t{0});
        for (auto root : roots) key.push_back(number[root]);
        return key;
    }

    static std::vector<std::uint32_t> indices(const Word& seq) {
        std::vector<std::uint32_t> out;
        out.reserve(seq.size());
        for (auto s : seq) out.push_back(s.index());
        return out;
    }

    void explore(std::vector<Rule>& rules, const Word& seq) {
        auto roots = indices(seq);
        if (!visited_.insert(encode(rules, roots)).second) return;
        ++states_;

        Frequent f;
        if (seq.size() >= 2) f = frequent_bigrams(seq.symbols());
        if (f.count >= 2) {
            for (const auto& bigram : f.bigrams) {
                rules.push_back({false, bigram.first.index(), bigram.second.index()});
                auto fresh = Symbol::nonterminal(static_cast<std::uint32_t>(rules.size()));
                auto after = replace_all(seq, bigram, fresh);
                if (options_.record_transitions) transitions_.insert({seq, after});
                explore(rules, after);
                rules.pop_back();
            }
            return;
        }
        if (seq.size() > options_.max_final_length) {
            throw ResourceError("final sequence of length " + std::to_string(seq.size()) +
                                " exceeds the bracketing cap of " + std::to_string(options_.max_final_length));
        }
        bracket(rules, roots, 0, roots.size(), [&](std::uint32_t root) { record(rules, root); });
    }

    void bracket(std::vector<Rule>& rules, const std::vector<std::uint32_t>& seq, std::size_t lo, std::size_t hi,
                 const std::function<void(std::uint32_t)>& done) {
        if (hi - lo == 1) {
            done(seq[lo]);
            return;
        }
        for (std::size_t mid = lo + 1; mid < hi; ++mid) {
            bracket(rules, seq, lo, mid, [&](std::uint32_t left) {
                bracket(rules, seq, mid, hi, [&](std::uint32_t right) {
                    rules.push_back({false, left, right});
                    done(static_cast<std::uint32_t>(rules.size()));
                    rules.pop_back();
                });
            });
        }
    }

    void record(const std::vector<Rule>& rules, std::uint32_t root) {
        std::array<std::uint32_t, 1> roots{root};
        auto key = encode(rules, roots);
        if (grammars_.count(key) != 0) return;
        std::vector<std::uint32_t> number;
        auto order = post_order(rules, roots, number);
        GrammarBuilder b;
        for (std::size_t k = 0; k < order.size(); ++k) b.nonterminal("N" + std::to_string(k + 1));
        for (auto id : order) {
            const auto& r = rules[id - 1];
            if (r.unary) {
                b.unary(number[id] - 1, Symbol::terminal(static_cast<unsigned char>(r.a)));
            } else {
                b.binary(number[id] - 1, number[r.a] - 1, number[r.b] - 1);
            }
        }
        grammars_.emplace(std::move(key), b.build(number[root] - 1));
    }

    RepairEnumerationOptions options_;
    std::set<std::vector<std::uint64_t>> visited_;
    std::map<std::vector<std::uint64_t>, Grammar> grammars_;
    std::set<RepairTransition> transitions_;
    std::size_t states_ = 0;
};

} // namespace

RepairEnumeration enumerate_repair(const Word& w, const RepairEnumerationOptions& options) {
    if (w.empty()) throw DomainError("RePair needs a non-empty word");
    if (w.has_nonterminals()) throw DomainError("RePair input must consist of terminals");
    if (w.size() > options.max_input_length) {
        throw ResourceError("input of length " + std::to_string(w.size()) + " exceeds the enumeration budget of " +
                            std::to_string(options.max_input_length));
    }
    RepairEnumerator enumerator(options);
    auto out = enumerator.run(w);
    // Keys of canonical forms sort the same as the grammars' canonical keys.
    std::sort(out.grammars.begin(), out.grammars.end(),
              [](const Grammar& l, const Grammar& r) { return canonical_key(l) < canonical_key(r); });
    return out;
}

} // namespace slp
