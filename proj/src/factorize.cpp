#include "slp/factorize.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "slp/errors.hpp"

namespace slp {

namespace {

constexpr std::size_t kLinearLookupAlphabet = 8;

void require_nonempty(std::span<const Symbol> w) {
    if (w.empty()) throw DomainError("factorization of the empty word");
}

} // namespace

template <typename Sink>
void LzFactorizer::run(std::span<const Symbol> w, Sink&& sink) {
    require_nonempty(w);
    const std::size_t n = w.size();

    // Dense symbol ids: linear lookup for the small alphabets of the sweeps.
    alphabet_.clear();
    dense_.resize(n);
    std::unordered_map<std::uint32_t, std::uint32_t> big;
    for (std::size_t i = 0; i < n; ++i) {
        auto raw = w[i].raw();
        if (alphabet_.size() <= kLinearLookupAlphabet) {
            auto it = std::find(alphabet_.begin(), alphabet_.end(), raw);
            if (it != alphabet_.end()) {
                dense_[i] = static_cast<std::uint32_t>(it - alphabet_.begin());
                continue;
            }
            if (alphabet_.size() < kLinearLookupAlphabet) {
                dense_[i] = static_cast<std::uint32_t>(alphabet_.size());
                alphabet_.push_back(raw);
                continue;
            }
            for (std::uint32_t k = 0; k < alphabet_.size(); ++k) big.emplace(alphabet_[k], k);
            alphabet_.push_back(0); // marks the switch to hashed lookup
        }
        auto [it, inserted] = big.try_emplace(raw, static_cast<std::uint32_t>(big.size()));
        dense_[i] = it->second;
    }
    const std::size_t sigma = big.empty() ? alphabet_.size() : big.size();

    // Suffix automaton with a flat transition table; at most 2n states.
    const std::size_t max_states = 2 * n + 1;
    next_.assign(max_states * sigma, -1);
    link_.assign(max_states, -1);
    len_.assign(max_states, 0);
    std::int32_t states = 1;
    std::int32_t last = 0;
    auto extend = [&](std::uint32_t c) {
        std::int32_t cur = states++;
        len_[cur] = len_[last] + 1;
        std::int32_t p = last;
        while (p != -1 && next_[p * sigma + c] == -1) {
            next_[p * sigma + c] = cur;
            p = link_[p];
        }
        if (p == -1) {
            link_[cur] = 0;
        } else {
            std::int32_t q = next_[p * sigma + c];
            if (len_[p] + 1 == len_[q]) {
                link_[cur] = q;
            } else {
                std::int32_t clone = states++;
                len_[clone] = len_[p] + 1;
                link_[clone] = link_[q];
                std::copy_n(next_.begin() + q * sigma, sigma, next_.begin() + clone * sigma);
                while (p != -1 && next_[p * sigma + c] == q) {
                    next_[p * sigma + c] = clone;
                    p = link_[p];
                }
                link_[q] = clone;
                link_[cur] = clone;
            }
        }
        last = cur;
    };

    std::size_t pos = 0;
    while (pos < n) {
        std::size_t len = 0;
        std::int32_t state = 0;
        while (pos + len < n) {
            auto t = next_[state * sigma + dense_[pos + len]];
            if (t == -1) break;
            state = t;
            ++len;
        }
        if (len == 0) len = 1;
        sink(len);
        for (std::size_t k = 0; k < len; ++k) extend(dense_[pos + k]);
        pos += len;
    }
}

std::vector<std::size_t> LzFactorizer::phrase_lengths(std::span<const Symbol> w) {
    std::vector<std::size_t> out;
    run(w, [&](std::size_t len) { out.push_back(len); });
    return out;
}

std::size_t LzFactorizer::phrase_count(std::span<const Symbol> w) {
    std::size_t count = 0;
    run(w, [&](std::size_t) { ++count; });
    return count;
}

Factorization lz_factorize(const Word& w) {
    LzFactorizer engine;
    auto lengths = engine.phrase_lengths(w.symbols());
    return Factorization::from_lengths(w, lengths, FactorizationKind::lz);
}

std::vector<std::size_t> suffix_array(std::span<const Symbol> w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> sa(n), rank(n), tmp(n);
    std::iota(sa.begin(), sa.end(), 0);
    std::vector<std::uint32_t> raws(n);
    for (std::size_t i = 0; i < n; ++i) raws[i] = w[i].raw();
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return raws[a] < raws[b]; });
    for (std::size_t i = 0; i < n; ++i) {
        rank[sa[i]] = i > 0 && raws[sa[i]] == raws[sa[i - 1]] ? rank[sa[i - 1]] : i;
    }
    for (std::size_t k = 1; k < n; k *= 2) {
        auto key = [&](std::size_t i) {
            return std::pair<std::size_t, std::size_t>(rank[i], i + k < n ? rank[i + k] + 1 : 0);
        };
        std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        tmp[sa[0]] = 0;
        bool distinct = true;
        for (std::size_t i = 1; i < n; ++i) {
            bool tie = key(sa[i]) == key(sa[i - 1]);
            distinct = distinct && !tie;
            tmp[sa[i]] = tie ? tmp[sa[i - 1]] : i;
        }
        rank.swap(tmp);
        if (distinct) break;
    }
    return sa;
}

std::vector<std::size_t> lcp_array(std::span<const Symbol> w, std::span<const std::size_t> sa) {
    const std::size_t n = w.size();
    std::vector<std::size_t> rank(n), lcp(n, 0);
    for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

std::vector<std::size_t> longest_previous_factor(std::span<const Symbol> w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> lpf(n, 0);
    if (n < 2) return lpf;
    auto sa = suffix_array(w);
    auto lcp = lcp_array(w, sa);

    // Sparse table for range minimum over lcp.
    std::vector<std::vector<std::size_t>> table{lcp};
    for (std::size_t span = 2; span <= n; span *= 2) {
        const auto& prev = table.back();
        std::vector<std::size_t> level(n - span + 1);
        for (std::size_t i = 0; i + span <= n; ++i) level[i] = std::min(prev[i], prev[i + span / 2]);
        table.push_back(std::move(level));
    }
    // lcp of the suffixes at ranks lo < hi.
    auto lcp_between = [&](std::size_t lo, std::size_t hi) {
        std::size_t from = lo + 1, count = hi - lo;
        std::size_t k = 0;
        while ((std::size_t{2} << k) <= count) ++k;
        return std::min(table[k][from], table[k][hi + 1 - (std::size_t{1} << k)]);
    };

    // For each rank, the nearest ranks on either side holding a smaller
    // position are the only candidate sources that matter.
    std::vector<std::size_t> stack;
    for (std::size_t r = 0; r < n; ++r) {
        while (!stack.empty() && sa[stack.back()] > sa[r]) stack.pop_back();
        if (!stack.empty()) lpf[sa[r]] = std::max(lpf[sa[r]], lcp_between(stack.back(), r));
        stack.push_back(r);
    }
    stack.clear();
    for (std::size_t r = n; r-- > 0;) {
        while (!stack.empty() && sa[stack.back()] > sa[r]) stack.pop_back();
        if (!stack.empty()) lpf[sa[r]] = std::max(lpf[sa[r]], lcp_between(r, stack.back()));
        stack.push_back(r);
    }
    return lpf;
}

Factorization c_factorize(const Word& w) {
    require_nonempty(w.symbols());
    auto lpf = longest_previous_factor(w.symbols());
    std::vector<std::size_t> lengths;
    for (std::size_t pos = 0; pos < w.size();) {
        auto len = std::max<std::size_t>(lpf[pos], 1);
        lengths.push_back(len);
        pos += len;
    }
    return Factorization::from_lengths(w, lengths, FactorizationKind::c);
}

Factorization semi_greedy(const Factorization& lz) {
    std::vector<std::size_t> ends(lz.ends().begin(), lz.ends().end());
    for (std::size_t k = 0; k + 1 < ends.size(); ++k) {
        if (lz.phrase_length(k) > 1) --ends[k];
    }
    return Factorization(lz.subject(), std::move(ends), FactorizationKind::semi_greedy);
}

Factorization semi_greedy(const Word& w) { return semi_greedy(lz_factorize(w)); }

std::size_t z(const Word& w) {
    LzFactorizer engine;
    return engine.phrase_count(w.symbols());
}

std::size_t grammar_lower_bound(const Word& w) { return z(w) - 1 + w.distinct_symbols(); }

} // namespace slp
