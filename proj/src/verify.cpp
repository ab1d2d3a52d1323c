#include "slp/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "slp/derivation.hpp"
#include "slp/errors.hpp"
#include "slp/factorize.hpp"
#include "slp/fibonacci.hpp"
#include "slp/kernels.hpp"
#include "slp/morphism.hpp"
#include "slp/oracle.hpp"
#include "slp/strategy_graph.hpp"

namespace slp {

Word replace_subset(const Word& w, Bigram bigram, std::span<const std::size_t> positions, Symbol fresh) {
    if (w.contains(fresh)) throw DomainError("fresh symbol " + fresh.name() + " already occurs in the word");
    std::vector<std::size_t> sorted(positions.begin(), positions.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        auto p = sorted[k];
        if (p + 1 >= w.size() || w[p] != bigram.first || w[p + 1] != bigram.second) {
            throw DomainError("position " + std::to_string(p) + " is not an occurrence of the bigram");
        }
        if (k > 0 && sorted[k - 1] + 1 >= p) throw DomainError("occurrences at " + std::to_string(sorted[k - 1]) +
                                                               " and " + std::to_string(p) + " overlap");
    }
    std::vector<Symbol> out;
    out.reserve(w.size());
    std::size_t pos = 0;
    for (auto p : sorted) {
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(p));
        out.push_back(fresh);
        pos = p + 2;
    }
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
    return Word(std::move(out));
}

std::string StrategyCase::label() const { return (id < 10 ? "case0" : "case") + std::to_string(id); }
std::string StrategyCase::bigram() const { return {first, second}; }

const std::vector<StrategyCase>& strategy_cases() {
    using F = CaseFamily;
    using M = ReplaceMode;
    static const std::vector<StrategyCase> cases{
        {1, F::fib, 'a', 'b', M::not_all},      {2, F::fib, 'a', 'a', M::all},
        {3, F::fib, 'a', 'a', M::not_all},      {4, F::fib_even, 'b', 'a', M::not_all},
        {5, F::fib_odd, 'b', 'a', M::all},      {6, F::fib_odd, 'b', 'a', M::not_all},
        {7, F::p, 'a', 'b', M::not_all},        {8, F::p, 'b', 'a', M::all},
        {9, F::p, 'b', 'a', M::not_all},        {10, F::p, 'b', 'b', M::all},
        {11, F::p, 'b', 'b', M::not_all},       {12, F::q, 'a', 'b', M::not_all},
        {13, F::q, 'b', 'a', M::all},           {14, F::q, 'b', 'a', M::not_all},
        {15, F::q, 'a', 'a', M::all},           {16, F::q, 'a', 'a', M::not_all},
    };
    return cases;
}

const StrategyCase& strategy_case(int id) {
    if (id < 1 || id > 16) throw DomainError("strategy cases are numbered 1 to 16");
    return strategy_cases()[static_cast<std::size_t>(id - 1)];
}

int case_min_order(const StrategyCase& c) {
    switch (c.family) {
    case CaseFamily::fib: return 5;
    case CaseFamily::fib_even: return 6;
    case CaseFamily::fib_odd: return 5;
    case CaseFamily::p: return 6;
    case CaseFamily::q: return 8;
    }
    return 5;
}

CaseTarget case_target(const StrategyCase& c, int n) {
    if (n < case_min_order(c)) throw DomainError(c.label() + " needs n >= " + std::to_string(case_min_order(c)));
    if ((c.family == CaseFamily::fib_even && n % 2 != 0) || (c.family == CaseFamily::fib_odd && n % 2 == 0)) {
        throw DomainError(c.label() + " does not apply to n = " + std::to_string(n));
    }
    const auto un = static_cast<std::size_t>(n);
    switch (c.family) {
    case CaseFamily::p: {
        int k = n / 2;
        return {p_word(k), "P" + std::to_string(k), static_cast<std::size_t>(2 * k - 2)};
    }
    case CaseFamily::q: {
        int j = n / 2 - 1;
        return {q_word(j), "Q" + std::to_string(j), static_cast<std::size_t>(2 * j - 1)};
    }
    default: return {fib_word(n), "F" + std::to_string(n), un - 1};
    }
}

nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json out{{"claim", r.claim}, {"range", r.range}, {"passed", r.passed}, {"rng", r.rng},
                       {"seed", r.seed},   {"details", r.details}};
    out["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
    return out;
}

namespace {

const Symbol kFresh = Symbol::nonterminal(1);

std::string range_text(const char* var, int lo, int hi) {
    if (hi < lo) return "empty";
    return std::to_string(lo) + "<=" + var + "<=" + std::to_string(hi);
}

// Records the first failure only; later ones are counted.
struct Recorder {
    CheckReport report;
    std::size_t failures = 0;
    std::size_t checked = 0;

    void expect(bool ok, const std::function<std::string()>& counterexample) {
        ++checked;
        if (ok) return;
        ++failures;
        report.passed = false;
        if (!report.counterexample) report.counterexample = counterexample();
    }

    CheckReport finish(std::string details = {}) {
        report.details = "checks=" + std::to_string(checked) + " failures=" + std::to_string(failures) +
                         (details.empty() ? "" : " " + details);
        return std::move(report);
    }
};

Recorder start(const std::string& claim, std::string range) {
    Recorder r;
    r.report.claim = claim;
    r.report.range = std::move(range);
    return r;
}

OrderedAlphabet ab() { return OrderedAlphabet::ab(); }
OrderedAlphabet ba() { return OrderedAlphabet::ba(); }
Symbol sym(char c) { return Symbol::terminal(static_cast<unsigned char>(c)); }

std::string words_text(const std::vector<Word>& ws) {
    std::string out;
    for (const auto& w : ws) out += (out.empty() ? "" : "|") + w.str();
    return out;
}

bool occurs_before(const Word& w, std::size_t start, const Word& needle) {
    if (needle.size() > start) return false;
    auto hay = w.symbols().subspan(0, start);
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

Word random_binary_word(std::mt19937_64& rng, std::size_t max_length) {
    auto length = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(sym((rng() & 1) ? 'b' : 'a'));
    return Word(std::move(out));
}

std::set<Bigram> bigram_set(std::initializer_list<const char*> list) {
    std::set<Bigram> out;
    for (auto s : list) out.insert({sym(s[0]), sym(s[1])});
    return out;
}

CheckReport check_fact1(int n_max) {
    int hi = std::min(n_max, 12);
    auto r = start("fact1", range_text("i", 1, hi));
    std::size_t odd_index_form = 0;
    for (int i = 1; i <= hi; ++i) {
        BigInt odd = 0, even = 0;
        for (int k = 1; k <= i; ++k) {
            odd += fib_number(2 * k - 1);
            even += fib_number(2 * k);
        }
        r.expect(odd == fib_number(2 * i), [&] { return "i=" + std::to_string(i) + ": odd-index sum " + odd.str(); });
        r.expect(even == fib_number(2 * i + 2) - 1, [&] {
            return "i=" + std::to_string(i) + ": even-index sum " + even.str() + " != f_{2i+2}-1 = " +
                   BigInt(fib_number(2 * i + 2) - 1).str();
        });
        if (even == fib_number(2 * i + 1) - 1) ++odd_index_form;
    }
    return r.finish("even-index sum equals f_{2i+1}-1 for " + std::to_string(odd_index_form) + " of " +
                    std::to_string(std::max(hi, 0)) + " values of i");
}

CheckReport check_lemma1(int n_max) {
    int f_hi = std::min(n_max, 25), pq_hi = std::min(n_max, 12);
    auto r = start("lemma1", range_text("n", 3, f_hi) + " (F), " + range_text("i", 2, pq_hi) + " (P), " +
                                 range_text("j", 3, pq_hi) + " (Q)");
    auto check = [&](const std::string& label, const Word& w, const std::set<Bigram>& expected) {
        auto got = most_frequent_bigrams(w);
        std::set<Bigram> got_set(got.begin(), got.end());
        r.expect(got_set == expected, [&] {
            std::string s;
            for (auto b : got) s += " " + b.first.name() + b.second.name();
            return label + ": most frequent bigrams" + s;
        });
    };
    for (int n = 3; n <= f_hi; ++n) check("F" + std::to_string(n), fib_word(n), n % 2 == 0 ? bigram_set({"ab", "ba"}) : bigram_set({"ab"}));
    for (int i = 2; i <= pq_hi; ++i) check("P" + std::to_string(i), p_word(i), bigram_set({"ab"}));
    for (int j = 3; j <= pq_hi; ++j) check("Q" + std::to_string(j), q_word(j), bigram_set({"ab"}));
    return r.finish();
}

CheckReport check_lemma2(int n_max) {
    int hi = std::min(n_max, 25);
    auto r = start("lemma2", range_text("n", 5, hi));
    for (int n = 5; n <= hi; ++n) {
        std::vector<Word> expected{"a"_w, "b"_w, "a"_w};
        for (int i = 4; i <= n - 2; ++i) expected.push_back(reverse(fib_word(i)));
        expected.push_back(n % 2 == 1 ? "ab"_w : "ba"_w);
        auto got = lz_factorize(fib_word(n)).phrases();
        r.expect(got == expected, [&] { return "n=" + std::to_string(n) + ": LZ " + words_text(got); });
    }
    return r.finish();
}

CheckReport check_lemma3(int n_max) {
    int hi = std::min(n_max, 12);
    auto r = start("lemma3", range_text("i", 1, hi));
    for (int i = 1; i <= hi; ++i) {
        r.expect(p_word(i, ab()) == right_rotation(fib_word(2 * i - 1, ba())),
                 [&] { return "i=" + std::to_string(i) + ": P_i is not a rotation of F_{2i-1}^(b,a)"; });
        r.expect(q_word(i, ab()) == right_rotation(fib_word(2 * i, ab())),
                 [&] { return "i=" + std::to_string(i) + ": Q_i is not a rotation of F_{2i}"; });
    }
    return r.finish();
}

CheckReport check_lemma4(int n_max) {
    int hi = std::min(n_max, 12);
    auto r = start("lemma4", range_text("i", 2, hi));
    for (int i = 2; i <= hi; ++i) {
        auto got = lz_factorize(p_word(i, ab())).phrases();
        bool ok = got.size() == static_cast<std::size_t>(2 * i - 2) && got.back() == "b"_w;
        for (int j = 1; ok && j <= 2 * i - 3; ++j) ok = got[static_cast<std::size_t>(j - 1)] == reverse(fib_word(j, ba()));
        r.expect(ok, [&] { return "i=" + std::to_string(i) + ": LZ " + words_text(got); });
    }
    return r.finish();
}

CheckReport check_lemma5(int n_max, std::uint64_t seed) {
    auto population = grammar_population(n_max, seed);
    auto r = start("lemma5", "grammars=" + std::to_string(population.size()));
    r.report.rng = "mt19937_64";
    r.report.seed = seed;
    for (const auto& g : population) {
        auto w = expand(g);
        auto gf = g_factorization(g).size();
        auto zw = z(w);
        r.expect(gf - 1 + w.distinct_symbols() <= g.size(),
                 [&] { return "|gfact|=" + std::to_string(gf) + " too large for " + to_text(g); });
        r.expect(zw <= gf, [&] { return "z=" + std::to_string(zw) + " > |gfact| for " + to_text(g); });
    }
    return r.finish();
}

CheckReport check_lemma6(int n_max, std::uint64_t seed) {
    int hi = std::min(n_max, 12);
    auto r = start("lemma6", range_text("i", 1, hi) + ", 1000 random words");
    r.report.rng = "mt19937_64";
    r.report.seed = seed;
    auto psi1 = reverse_phi(sym('b'), "ba"_w);
    auto psi2 = reverse_phi(sym('b'), "ab"_w);
    auto psi3 = reverse_phi(sym('a'), "ab"_w);
    for (int i = 1; i <= hi; ++i) {
        auto tag = "i=" + std::to_string(i);
        r.expect(psi1(p_word(i)) == fib_word(2 * i), [&] { return tag + ": psi_{b->ba}(P_i) != F_2i"; });
        r.expect(psi2(p_word(i)) == q_word(i), [&] { return tag + ": psi_{b->ab}(P_i) != Q_i"; });
        r.expect(psi3(q_word(i)) == p_word(i + 1), [&] { return tag + ": psi_{a->ab}(Q_i) != P_{i+1}"; });
    }
    auto phi = Morphism::fibonacci(ab());
    auto pi = Morphism::pi(ab());
    auto theta = Morphism::theta(ab());
    std::mt19937_64 rng(derive_seed(seed, {6}));
    for (int k = 0; k < 1000; ++k) {
        auto x = random_binary_word(rng, 30);
        r.expect(phi.power(psi1(x), 2) == psi1(pi(x)), [&] { return x.str() + ": phi^2 psi1 != psi1 pi"; });
        r.expect(psi2(pi(x)) == theta(psi2(x)), [&] { return x.str() + ": psi2 pi != theta psi2"; });
        r.expect(psi3(theta(x)) == pi(psi3(x)), [&] { return x.str() + ": psi3 theta != pi psi3"; });
    }
    return r.finish();
}

CheckReport check_lemma7_count(int n_max) {
    int hi = std::min(n_max, 20);
    auto r = start("lemma7-count", range_text("n", 6, hi));
    std::string details;
    for (int n = 6; n <= hi; ++n) {
        auto w = fib_word(n);
        auto e = enumerate_repair(w);
        const std::size_t expected = static_cast<std::size_t>(2 * (n / 2) - 2);
        r.expect(e.grammars.size() == expected,
                 [&] { return "n=" + std::to_string(n) + ": " + std::to_string(e.grammars.size()) + " grammars"; });
        for (const auto& g : e.grammars) {
            r.expect(g.size() == static_cast<std::size_t>(n) && expand(g) == w,
                     [&] { return "n=" + std::to_string(n) + ": grammar " + to_text(g); });
        }
        details += (details.empty() ? "" : ",") + std::to_string(e.grammars.size());
    }
    return r.finish("counts=" + details);
}

CheckReport check_lemma7_graph(int n_max) {
    int hi = std::min(n_max, 20);
    auto r = start("lemma7-graph", range_text("n", 6, hi));
    for (int n = 6; n <= hi; ++n) {
        auto tag = "n=" + std::to_string(n);
        auto graph = strategy_graph(n);
        r.expect(graph.path_count() == static_cast<std::size_t>(n / 2 - 1),
                 [&] { return tag + ": " + std::to_string(graph.path_count()) + " paths"; });
        auto lengths = graph.path_lengths();
        r.expect(std::all_of(lengths.begin(), lengths.end(), [&](auto l) { return l == static_cast<std::size_t>(n - 4); }),
                 [&] { return tag + ": a path length differs from n-4"; });
        auto sinks = graph.sinks();
        r.expect(sinks == std::vector<FamilyMember>{{WordFamily::fib, 4}, {WordFamily::q, 2}},
                 [&] { return tag + ": unexpected sinks"; });
        RepairEnumerationOptions options;
        options.record_transitions = true;
        auto e = enumerate_repair(fib_word(n), options);
        for (const auto& t : e.transitions) {
            auto from = classify_family_word(t.before);
            auto to = classify_family_word(t.after);
            r.expect(from && to && graph.has_edge(*from, *to),
                     [&] { return tag + ": step " + t.before.str() + " -> " + t.after.str() + " is not an edge"; });
        }
    }
    return r.finish();
}

CheckReport check_observation1(int n_max) {
    int hi = std::min(n_max, 25);
    auto r = start("observation1", range_text("i", 3, hi));
    for (int i = 3; i <= hi; ++i) {
        auto got = replace_all(fib_word(i), {sym('a'), sym('b')}, kFresh);
        r.expect(got == fib_word(i - 1, OrderedAlphabet(kFresh, sym('a'))),
                 [&] { return "i=" + std::to_string(i) + ": " + got.str(); });
    }
    return r.finish();
}

CheckReport check_corollary1(int n_max) {
    int hi = std::min(n_max, 25), oracle_hi = std::min(n_max, 9);
    auto r = start("corollary1", range_text("n", 5, hi) + " (bounds), " + range_text("n", 5, oracle_hi) + " (oracle)");
    for (int n = 5; n <= hi; ++n) {
        auto w = fib_word(n);
        const auto un = static_cast<std::size_t>(n);
        auto tag = "n=" + std::to_string(n);
        r.expect(grammar_lower_bound(w) == un, [&] { return tag + ": lower bound " + std::to_string(grammar_lower_bound(w)); });
        for (auto policy : {TieBreak::first_occurrence, TieBreak::lexicographic}) {
            auto size = repair(w, policy).grammar.size();
            r.expect(size == un, [&] { return tag + ": RePair size " + std::to_string(size); });
        }
        if (n <= oracle_hi) {
            auto g = smallest_size(w);
            r.expect(g == un, [&] { return tag + ": g* = " + std::to_string(g); });
        }
    }
    return r.finish();
}

CheckReport check_corollary2(int n_max) {
    int hi = std::min(n_max, 12);
    auto r = start("corollary2", range_text("i", 1, hi));
    const Bigram ab_pair{sym('a'), sym('b')}, ba_pair{sym('b'), sym('a')};
    const OrderedAlphabet aX(sym('a'), kFresh), Xb(kFresh, sym('b'));
    for (int i = 1; i <= hi; ++i) {
        auto tag = "i=" + std::to_string(i);
        r.expect(replace_all(fib_word(2 * i), ba_pair, kFresh) == p_word(i, aX), [&] { return tag + ": F_2i with ba replaced"; });
        r.expect(replace_all(q_word(i), ab_pair, kFresh) == p_word(i, aX), [&] { return tag + ": Q_i with ab replaced"; });
        r.expect(replace_all(p_word(i + 1), ab_pair, kFresh) == q_word(i, Xb), [&] { return tag + ": P_{i+1} with ab replaced"; });
    }
    return r.finish();
}

CheckReport check_claim1(std::uint64_t seed) {
    auto r = start("claim1", "1000 random binary words, 1<=|x|<=30");
    r.report.rng = "mt19937_64";
    r.report.seed = seed;
    auto phi_ba = Morphism::fibonacci(ba());
    auto phi_ab = Morphism::fibonacci(ab());
    auto pi = Morphism::pi(ab());
    auto theta = Morphism::theta(ab());
    std::mt19937_64 rng(derive_seed(seed, {1}));
    for (int k = 0; k < 1000; ++k) {
        auto x = random_binary_word(rng, 30);
        r.expect(phi_ba.power(x, 2) + "b"_w == "b"_w + pi(x), [&] { return x.str() + ": first identity"; });
        r.expect(phi_ab.power(x, 2) + "ab"_w == "ab"_w + theta(x), [&] { return x.str() + ": second identity"; });
    }
    return r.finish();
}

CheckReport check_claim2(int n_max) {
    int hi = std::min(n_max, 25);
    auto r = start("claim2", range_text("n", 5, hi));
    for (int n = 5; n <= hi; ++n) {
        auto w = fib_word(n);
        auto sg = semi_greedy(w);
        auto phrases = sg.phrases();
        auto tag = "n=" + std::to_string(n) + ": SG " + words_text(phrases);
        r.expect(sg.size() == static_cast<std::size_t>(n - 1) && sg.size() == z(w), [&] { return tag; });
        if (phrases.size() != static_cast<std::size_t>(n - 1)) continue;
        r.expect(phrases[0] == "a"_w && phrases[1] == "b"_w && phrases[2] == "a"_w && phrases[3] == "ab"_w,
                 [&] { return tag; });
        for (int i = 5; i <= n - 2; ++i) {
            const auto k = static_cast<std::size_t>(i - 1);
            r.expect(phrases[k] == right_rotation(reverse(fib_word(i))) && occurs_before(w, sg.phrase_start(k), phrases[k]),
                     [&] { return tag + " (phrase " + std::to_string(i) + ")"; });
        }
        // For n = 5 the last phrase is also the fourth, ab.
        if (n >= 6) r.expect(phrases.back() == (n % 2 == 0 ? "aba"_w : "aab"_w), [&] { return tag + " (last phrase)"; });
        auto ends = sg.ends();
        for (std::size_t b = 0; b + 1 < ends.size(); ++b) {
            if (b == 0 || b == 2) continue;
            auto e = ends[b];
            r.expect(w[e - 1] == sym('b') && w[e] == sym('a'),
                     [&] { return tag + " (boundary " + std::to_string(b + 1) + " does not split ba)"; });
        }
    }
    return r.finish();
}

CheckReport check_theorem1(std::uint64_t seed) {
    constexpr std::size_t count = 10'000, max_length = 14;
    auto r = start("theorem1", std::to_string(count) + " random words over 2-3 letters, 1<=|w|<=14");
    r.report.rng = kSweepRng;
    r.report.seed = seed;
    auto outcome = lower_bound_sweep_parallel(count, max_length, seed);
    r.checked = outcome.tested;
    if (outcome.failure_word) {
        r.failures = 1;
        r.report.passed = false;
        r.report.counterexample = "index " + std::to_string(*outcome.failure_index) + ": " + outcome.failure_word->str();
    }
    return r.finish("tight=" + std::to_string(outcome.tight));
}

CheckReport check_theorem2(int n_max) {
    int hi = std::min(n_max, 9);
    auto r = start("theorem2", range_text("n", 5, hi));
    for (int n = 5; n <= hi; ++n) {
        auto w = fib_word(n);
        auto opt = enumerate_smallest(w);
        auto rp = enumerate_repair(w);
        std::set<std::vector<std::uint64_t>> a, b;
        for (const auto& g : opt.grammars) a.insert(canonical_key(g));
        for (const auto& g : rp.grammars) b.insert(canonical_key(g));
        r.expect(a == b, [&] {
            return "n=" + std::to_string(n) + ": |Opt|=" + std::to_string(a.size()) + " |RePair|=" + std::to_string(b.size());
        });
    }
    return r.finish();
}

CheckReport check_forbidden(int n_max) {
    int hi = std::min(n_max, 25);
    auto r = start("forbidden-factors", range_text("n", 3, hi));
    for (int n = 3; n <= hi; ++n) {
        auto s = fib_word(n).str();
        r.expect(s.find("bb") == std::string::npos && s.find("aaa") == std::string::npos,
                 [&] { return "n=" + std::to_string(n); });
    }
    return r.finish();
}

CheckReport check_case_sweep(const StrategyCase& c, int n_max, std::uint64_t seed) {
    int hi = std::min(n_max, 16);
    auto r = start(c.label(), range_text("n", case_min_order(c), hi));
    r.report.rng = kSweepRng;
    r.report.seed = seed;
    std::string details;
    for (int n = case_min_order(c); n <= hi; ++n) {
        if (c.family == CaseFamily::fib_even && n % 2 != 0) continue;
        if (c.family == CaseFamily::fib_odd && n % 2 == 0) continue;
        if ((c.family == CaseFamily::p || c.family == CaseFamily::q) && n % 2 != 0) continue;
        auto target = case_target(c, n);
        auto count = greedy_occurrences(target.word, {sym(c.first), sym(c.second)}).size();
        if (c.mode == ReplaceMode::not_all && count < 2) {
            details += (details.empty() ? "" : "; ") + ("n=" + std::to_string(n) + " " + target.label + " vacuous (" +
                                                        std::to_string(count) + " occurrence)");
            continue;
        }
        CaseCheckOptions options;
        options.seed = seed;
        auto one = check_strategy_case(c, n, options);
        ++r.checked;
        if (!one.passed) {
            ++r.failures;
            r.report.passed = false;
            if (!r.report.counterexample) r.report.counterexample = one.counterexample;
        }
        details += (details.empty() ? "" : "; ") + one.details;
    }
    return r.finish(details);
}

// Cases 2 and 5 come with exact phrase counts, z(R) = n - 1.
CheckReport check_case_exact(int id, int n_max) {
    const auto& c = strategy_case(id);
    int hi = std::min(n_max, 25);
    auto r = start(c.label() + "-exact", range_text("n", case_min_order(c), hi));
    std::string observed;
    for (int n = case_min_order(c); n <= hi; ++n) {
        if (c.family == CaseFamily::fib_odd && n % 2 == 0) continue;
        auto zr = z(replace_all(fib_word(n), {sym(c.first), sym(c.second)}, kFresh));
        r.expect(zr == static_cast<std::size_t>(n - 1),
                 [&] { return "n=" + std::to_string(n) + ": z=" + std::to_string(zr) + " != n-1"; });
        observed += (observed.empty() ? "" : ",") + std::to_string(n) + ":" + std::to_string(zr);
    }
    return r.finish("z(R) by n " + observed);
}

} // namespace

CheckReport check_strategy_case(const StrategyCase& c, int n, const CaseCheckOptions& options) {
    auto target = case_target(c, n);
    const Bigram bigram{sym(c.first), sym(c.second)};
    const auto& w = target.word;
    auto occurrences = greedy_occurrences(w, bigram);
    if (occurrences.empty()) throw DomainError("bigram " + c.bigram() + " does not occur in " + target.label);
    if (c.mode == ReplaceMode::all) {
        auto frequent = most_frequent_bigrams(w);
        if (std::find(frequent.begin(), frequent.end(), bigram) != frequent.end()) {
            throw DomainError("replacing every " + c.bigram() + " in " + target.label + " is a RePair step");
        }
    }

    CheckReport report;
    report.claim = c.label();
    report.range = "n=" + std::to_string(n);
    std::ostringstream details;
    details << "n=" << n << " " << target.label << " threshold=" << target.threshold << " occurrences=" << occurrences.size();

    if (c.mode == ReplaceMode::all) {
        auto zr = z(replace_all(w, bigram, kFresh));
        bool ok = zr >= target.threshold;
        report.passed = ok;
        if (!ok) report.counterexample = "n=" + std::to_string(n) + " all occurrences: z=" + std::to_string(zr);
        details << " z=" << zr;
        report.details = details.str();
        return report;
    }

    if (occurrences.size() < 2) {
        throw DomainError("bigram " + c.bigram() + " occurs once in " + target.label + "; no proper subset exists");
    }
    SubsetPlan plan;
    plan.occurrences = occurrences.size();
    plan.exhaustive = occurrences.size() <= options.exhaustive_limit;
    plan.samples = options.samples;
    plan.seed = derive_seed(options.seed, {static_cast<std::uint64_t>(c.id), static_cast<std::uint64_t>(n)});
    report.rng = plan.exhaustive ? "" : kSweepRng;
    report.seed = options.seed;
    auto outcome = options.parallel ? subset_sweep_parallel(w, occurrences, kFresh, target.threshold, plan)
                                    : subset_sweep_serial(w, occurrences, kFresh, target.threshold, plan);
    details << (plan.exhaustive ? " exhaustive=" : " sampled=") << outcome.tested << " z=[" << outcome.min_z << ","
            << outcome.max_z << "]";
    report.details = details.str();
    if (outcome.failure_index) {
        report.passed = false;
        std::string subset;
        for (auto j : outcome.failure_subset) subset += (subset.empty() ? "" : ",") + std::to_string(occurrences[j]);
        report.counterexample = "n=" + std::to_string(n) + " subset index " + std::to_string(*outcome.failure_index) +
                                " positions {" + subset + "}: z=" + std::to_string(outcome.failure_z);
    }
    return report;
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out{"fact1",        "lemma1",      "lemma2",     "lemma3",       "lemma4",
                                     "lemma5",       "lemma6",      "lemma7-count", "lemma7-graph", "observation1",
                                     "corollary1",   "corollary2",  "claim1",     "claim2",       "theorem1",
                                     "theorem2",     "forbidden-factors"};
        for (const auto& c : strategy_cases()) out.push_back(c.label());
        out.push_back("case02-exact");
        out.push_back("case05-exact");
        return out;
    }();
    return ids;
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& claims, int n_max, std::uint64_t seed) {
    const auto& ids = claim_ids();
    std::set<std::string> selected;
    if (claims.empty()) selected.insert(ids.begin(), ids.end());
    for (const auto& c : claims) {
        if (c == "all") {
            selected.insert(ids.begin(), ids.end());
        } else if (c == "cases") {
            for (const auto& sc : strategy_cases()) selected.insert(sc.label());
        } else if (std::find(ids.begin(), ids.end(), c) != ids.end()) {
            selected.insert(c);
        } else {
            throw DomainError("unknown claim '" + c + "'");
        }
    }

    std::vector<CheckReport> out;
    for (const auto& id : ids) {
        if (selected.count(id) == 0) continue;
        if (id == "fact1") out.push_back(check_fact1(n_max));
        else if (id == "lemma1") out.push_back(check_lemma1(n_max));
        else if (id == "lemma2") out.push_back(check_lemma2(n_max));
        else if (id == "lemma3") out.push_back(check_lemma3(n_max));
        else if (id == "lemma4") out.push_back(check_lemma4(n_max));
        else if (id == "lemma5") out.push_back(check_lemma5(n_max, seed));
        else if (id == "lemma6") out.push_back(check_lemma6(n_max, seed));
        else if (id == "lemma7-count") out.push_back(check_lemma7_count(n_max));
        else if (id == "lemma7-graph") out.push_back(check_lemma7_graph(n_max));
        else if (id == "observation1") out.push_back(check_observation1(n_max));
        else if (id == "corollary1") out.push_back(check_corollary1(n_max));
        else if (id == "corollary2") out.push_back(check_corollary2(n_max));
        else if (id == "claim1") out.push_back(check_claim1(seed));
        else if (id == "claim2") out.push_back(check_claim2(n_max));
        else if (id == "theorem1") out.push_back(check_theorem1(seed));
        else if (id == "theorem2") out.push_back(check_theorem2(n_max));
        else if (id == "forbidden-factors") out.push_back(check_forbidden(n_max));
        else if (id == "case02-exact") out.push_back(check_case_exact(2, n_max));
        else if (id == "case05-exact") out.push_back(check_case_exact(5, n_max));
        else out.push_back(check_case_sweep(strategy_case(std::stoi(id.substr(4))), n_max, seed));
    }
    return out;
}

std::vector<Grammar> grammar_population(int n_max, std::uint64_t seed) {
    std::vector<Grammar> out;
    for (int n = 3; n <= std::min(n_max, 25); ++n) out.push_back(from_recursive_fib(n));
    for (int n = 3; n <= std::min(n_max, 20); ++n) {
        for (auto& g : enumerate_repair(fib_word(n)).grammars) out.push_back(std::move(g));
    }
    for (int i = 2; i <= std::min(n_max, 8); ++i) {
        for (const auto& w : {p_word(i), q_word(i)}) {
            for (auto& g : enumerate_repair(w).grammars) out.push_back(std::move(g));
        }
    }
    for (int n = 3; n <= std::min(n_max, 9); ++n) {
        for (auto& g : enumerate_smallest(fib_word(n)).grammars) out.push_back(std::move(g));
    }
    std::mt19937_64 rng(derive_seed(seed, {5}));
    for (int k = 0; k < 1000; ++k) {
        auto length = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
        auto sigma = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<Symbol> symbols;
        for (std::size_t i = 0; i < length; ++i) symbols.push_back(sym(static_cast<char>('a' + rng() % sigma)));
        Word w(std::move(symbols));
        out.push_back(repair(w, TieBreak::first_occurrence).grammar);
        out.push_back(repair(w, TieBreak::lexicographic).grammar);
        if (k < 200 && w.size() <= 12) {
            for (auto& g : enumerate_smallest(w).grammars) out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace slp
