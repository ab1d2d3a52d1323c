#include "naive.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace naive {

std::vector<std::string> lz(const std::string& w) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < w.size()) {
        std::size_t best = 0;
        for (std::size_t len = 1; pos + len <= w.size(); ++len) {
            auto prefix = w.substr(0, pos);
            if (prefix.find(w.substr(pos, len)) == std::string::npos) break;
            best = len;
        }
        best = std::max<std::size_t>(best, 1);
        out.push_back(w.substr(pos, best));
        pos += best;
    }
    return out;
}

std::vector<std::string> cfact(const std::string& w) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < w.size()) {
        std::size_t best = 0;
        for (std::size_t j = 0; j < pos; ++j) {
            std::size_t l = 0;
            while (pos + l < w.size() && w[j + l] == w[pos + l]) ++l;
            best = std::max(best, l);
        }
        best = std::max<std::size_t>(best, 1);
        out.push_back(w.substr(pos, best));
        pos += best;
    }
    return out;
}

std::size_t bigram_count(const std::string& w, const std::string& xy) {
    // best[i] = most disjoint occurrences inside w[0..i)
    std::vector<std::size_t> best(w.size() + 1, 0);
    for (std::size_t i = 2; i <= w.size(); ++i) {
        best[i] = best[i - 1];
        if (w.compare(i - 2, 2, xy) == 0) best[i] = std::max(best[i], best[i - 2] + 1);
    }
    return best[w.size()];
}

std::size_t smallest_grammar(const std::string& w) {
    std::vector<std::string> rules;
    for (char c : w) {
        if (std::find(rules.begin(), rules.end(), std::string(1, c)) == rules.end()) rules.emplace_back(1, c);
    }
    if (w.size() == 1) return 1;
    std::function<bool(std::size_t)> search = [&](std::size_t remaining) -> bool {
        if (remaining == 0) return false;
        const std::size_t count = rules.size();
        for (std::size_t j = 0; j < count; ++j) {
            for (std::size_t k = 0; k < count; ++k) {
                auto e = rules[j] + rules[k];
                if (e.size() > w.size() || w.find(e) == std::string::npos) continue;
                if (e == w) return true;
                if (std::find(rules.begin(), rules.end(), e) != rules.end()) continue;
                rules.push_back(e);
                bool ok = search(remaining - 1);
                rules.pop_back();
                if (ok) return true;
            }
        }
        return false;
    };
    const std::size_t sigma = rules.size();
    for (std::size_t binary = 1;; ++binary) {
        if (search(binary)) return sigma + binary;
    }
}

namespace {

struct State {
    std::vector<int> seq;
    std::map<int, std::pair<int, int>> rules; // binary rules; ids < 0 are terminals
    int next = 1;
};

std::string tree(const State& s, int id) {
    if (id < 0) return std::string(1, static_cast<char>(-id));
    const auto& [l, r] = s.rules.at(id);
    return "(" + tree(s, l) + tree(s, r) + ")";
}

std::vector<std::string> render(const State& s, int start) {
    std::vector<std::string> out{tree(s, start)};
    std::vector<std::string> rest;
    for (const auto& [id, rhs] : s.rules) rest.push_back(tree(s, id));
    std::sort(rest.begin(), rest.end());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

void brackets(State s, std::size_t lo, std::size_t hi, const std::function<void(State&, int)>& done) {
    if (hi - lo == 1) {
        done(s, s.seq[lo]);
        return;
    }
    for (std::size_t mid = lo + 1; mid < hi; ++mid) {
        brackets(s, lo, mid, [&](State& left_state, int left) {
            brackets(left_state, mid, hi, [&](State& right_state, int right) {
                State t = right_state;
                int id = t.next++;
                t.rules[id] = {left, right};
                done(t, id);
            });
        });
    }
}

void explore(const State& s, std::set<std::vector<std::string>>& out) {
    // Non-overlapping counts by dynamic programming over the current sequence.
    std::map<std::pair<int, int>, std::size_t> counts;
    for (std::size_t i = 0; i + 1 < s.seq.size(); ++i) counts[{s.seq[i], s.seq[i + 1]}] = 0;
    std::size_t top = 0;
    for (auto& [pair, count] : counts) {
        std::vector<std::size_t> best(s.seq.size() + 1, 0);
        for (std::size_t i = 2; i <= s.seq.size(); ++i) {
            best[i] = best[i - 1];
            if (s.seq[i - 2] == pair.first && s.seq[i - 1] == pair.second) best[i] = std::max(best[i], best[i - 2] + 1);
        }
        count = best[s.seq.size()];
        top = std::max(top, count);
    }
    if (top >= 2) {
        for (const auto& [pair, count] : counts) {
            if (count != top) continue;
            State t = s;
            int id = t.next++;
            t.rules[id] = pair;
            t.seq.clear();
            for (std::size_t i = 0; i < s.seq.size();) {
                if (i + 1 < s.seq.size() && s.seq[i] == pair.first && s.seq[i + 1] == pair.second) {
                    t.seq.push_back(id);
                    i += 2;
                } else {
                    t.seq.push_back(s.seq[i++]);
                }
            }
            explore(t, out);
        }
        return;
    }
    brackets(s, 0, s.seq.size(), [&](State& t, int root) { out.insert(render(t, root)); });
}

} // namespace

std::set<std::vector<std::string>> repair_grammars(const std::string& w) {
    State s;
    for (char c : w) s.seq.push_back(-static_cast<int>(static_cast<unsigned char>(c)));
    std::set<std::vector<std::string>> out;
    explore(s, out);
    return out;
}

std::string fib(int n, char x, char y) {
    std::string a(1, y), b(1, x);
    if (n == 1) return a;
    for (int i = 3; i <= n; ++i) {
        std::string c = b + a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

} // namespace naive
