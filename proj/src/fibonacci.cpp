#include "slp/fibonacci.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <tuple>

namespace slp {
namespace {

std::atomic<std::size_t> g_length_cap{10'000'000};

enum class Family { fib, p, q };

using CacheKey = std::tuple<Family, int, std::uint32_t, std::uint32_t>;

// Fills are idempotent, so a racing double computation is harmless.
class WordCache {
public:
    template <typename Make>
    Word get(Family family, int order, OrderedAlphabet ab, Make make) {
        CacheKey key{family, order, ab.first().raw(), ab.second().raw()};
        {
            std::lock_guard lock(mutex_);
            if (auto it = words_.find(key); it != words_.end()) return it->second;
        }
        Word w = make();
        std::lock_guard lock(mutex_);
        return words_.emplace(key, std::move(w)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<CacheKey, Word> words_;
};

WordCache& cache() {
    static WordCache instance;
    return instance;
}

void check_order(int i) {
    if (i < 1) throw DomainError("order must be at least 1, got " + std::to_string(i));
}

void check_length(int fib_index) {
    if (fib_number(fib_index) > BigInt(g_length_cap.load())) {
        throw ResourceError("word of length f_" + std::to_string(fib_index) + " exceeds the generator cap of " +
                            std::to_string(g_length_cap.load()) + " symbols");
    }
}

} // namespace

BigInt fib_number(int i) {
    check_order(i);
    BigInt prev = 1, cur = 1;
    for (int k = 3; k <= i; ++k) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::size_t generator_length_cap() { return g_length_cap.load(); }
void set_generator_length_cap(std::size_t cap) { g_length_cap.store(cap); }

Word fib_word(int i, OrderedAlphabet ab) {
    check_order(i);
    check_length(i);
    return cache().get(Family::fib, i, ab, [&] {
        if (i == 1) return Word{ab.second()};
        std::vector<Symbol> older{ab.second()}, newer{ab.first()};
        for (int k = 3; k <= i; ++k) {
            std::vector<Symbol> next;
            next.reserve(newer.size() + older.size());
            next.insert(next.end(), newer.begin(), newer.end());
            next.insert(next.end(), older.begin(), older.end());
            older = std::move(newer);
            newer = std::move(next);
        }
        return Word(std::move(newer));
    });
}

Word p_word(int i, OrderedAlphabet ab) {
    check_order(i);
    check_length(2 * i - 1);
    return cache().get(Family::p, i, ab, [&] { return Morphism::pi(ab).power(Word{ab.first()}, i - 1); });
}

Word q_word(int i, OrderedAlphabet ab) {
    check_order(i);
    check_length(2 * i);
    return cache().get(Family::q, i, ab, [&] { return Morphism::theta(ab).power(Word{ab.first()}, i - 1); });
}

Word right_rotation(const Word& w) {
    if (w.empty()) throw DomainError("right rotation of the empty word");
    std::vector<Symbol> out;
    out.reserve(w.size());
    out.push_back(w.back());
    out.insert(out.end(), w.begin(), w.end() - 1);
    return Word(std::move(out));
}

Word reverse(const Word& w) { return Word(std::vector<Symbol>(w.symbols().rbegin(), w.symbols().rend())); }

} // namespace slp
