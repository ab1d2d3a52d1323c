#include "slp/kernels.hpp"

#include <algorithm>
#include <random>

#include <omp.h>

#include "slp/errors.hpp"
#include "slp/factorize.hpp"
#include "slp/oracle.hpp"

namespace slp {

namespace {

constexpr std::size_t kChunk = 4096;

std::size_t mask_words(std::size_t m) { return (m + 63) / 64; }

bool mask_is_proper(std::span<const std::uint64_t> mask, std::size_t m) {
    bool any = false, all = true;
    for (std::size_t k = 0; k < mask.size(); ++k) {
        std::size_t bits = std::min<std::size_t>(64, m - 64 * k);
        std::uint64_t full = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
        any = any || mask[k] != 0;
        all = all && mask[k] == full;
    }
    return any && !all;
}

// Calls visit(index, mask) for every subset of one chunk, in order.
template <typename Visit>
void for_chunk(const SubsetPlan& plan, std::size_t chunk, Visit&& visit) {
    const std::size_t total = plan.size();
    const std::size_t begin = chunk * kChunk;
    const std::size_t end = std::min(total, begin + kChunk);
    std::vector<std::uint64_t> mask(mask_words(plan.occurrences), 0);
    if (plan.exhaustive) {
        for (std::size_t i = begin; i < end; ++i) {
            mask[0] = i + 1;
            visit(i, std::span<const std::uint64_t>(mask));
        }
        return;
    }
    std::mt19937_64 rng(derive_seed(plan.seed, {chunk}));
    const std::size_t m = plan.occurrences;
    for (std::size_t i = begin; i < end; ++i) {
        do {
            for (std::size_t k = 0; k < mask.size(); ++k) {
                std::size_t bits = std::min<std::size_t>(64, m - 64 * k);
                mask[k] = bits == 64 ? rng() : rng() & ((std::uint64_t{1} << bits) - 1);
            }
        } while (!mask_is_proper(mask, m));
        visit(i, std::span<const std::uint64_t>(mask));
    }
}

std::vector<std::size_t> mask_members(std::span<const std::uint64_t> mask, std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m; ++j) {
        if ((mask[j / 64] >> (j % 64)) & 1) out.push_back(j);
    }
    return out;
}

void merge(SubsetSweepOutcome& into, const SubsetSweepOutcome& part) {
    into.tested += part.tested;
    into.min_z = std::min(into.min_z, part.min_z);
    into.max_z = std::max(into.max_z, part.max_z);
    if (part.failure_index && (!into.failure_index || *part.failure_index < *into.failure_index)) {
        into.failure_index = part.failure_index;
        into.failure_subset = part.failure_subset;
        into.failure_z = part.failure_z;
    }
}

void validate_plan(const SubsetPlan& plan, std::span<const std::size_t> occurrences) {
    if (plan.occurrences != occurrences.size()) throw DomainError("subset plan does not match the occurrence list");
    if (plan.occurrences < 2) throw DomainError("a proper non-empty subset needs at least two occurrences");
    if (plan.exhaustive && plan.occurrences > 62) throw DomainError("exhaustive subset plans support at most 62 occurrences");
}

SubsetSweepOutcome sweep_chunk(std::span<const Symbol> w, std::span<const std::size_t> occurrences, Symbol fresh,
                               std::size_t threshold, const SubsetPlan& plan, std::size_t chunk) {
    SubsetSweepOutcome out;
    for_chunk(plan, chunk, [&](std::size_t index, std::span<const std::uint64_t> mask) {
        auto z = subset_z(w, occurrences, mask, fresh);
        ++out.tested;
        out.min_z = std::min(out.min_z, z);
        out.max_z = std::max(out.max_z, z);
        if (z < threshold && !out.failure_index) {
            out.failure_index = index;
            out.failure_subset = mask_members(mask, plan.occurrences);
            out.failure_z = z;
        }
    });
    return out;
}

void check_lower_bound(std::size_t index, const Word& w, LowerBoundSweepOutcome& out) {
    auto r = solve_smallest(w);
    ++out.tested;
    if (r.lower_bound == r.g_star) ++out.tight;
    if (r.lower_bound > r.g_star && (!out.failure_index || index < *out.failure_index)) {
        out.failure_index = index;
        out.failure_word = w;
    }
}

} // namespace

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t h = mix_seed(seed);
    for (auto t : tags) h = mix_seed(h ^ mix_seed(t));
    return h;
}

std::size_t SubsetPlan::size() const {
    if (!exhaustive) return samples;
    return occurrences >= 2 ? (std::size_t{1} << occurrences) - 2 : 0;
}

std::size_t subset_z(std::span<const Symbol> w, std::span<const std::size_t> occurrences,
                     std::span<const std::uint64_t> mask, Symbol fresh) {
    thread_local LzFactorizer lz;
    thread_local std::vector<Symbol> buffer;
    buffer.clear();
    std::size_t pos = 0;
    for (std::size_t j = 0; j < occurrences.size(); ++j) {
        if (((mask[j / 64] >> (j % 64)) & 1) == 0) continue;
        buffer.insert(buffer.end(), w.begin() + static_cast<std::ptrdiff_t>(pos),
                      w.begin() + static_cast<std::ptrdiff_t>(occurrences[j]));
        buffer.push_back(fresh);
        pos = occurrences[j] + 2;
    }
    buffer.insert(buffer.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
    return lz.phrase_count(buffer);
}

std::vector<std::uint64_t> plan_subset(const SubsetPlan& plan, std::size_t index) {
    if (index >= plan.size()) throw DomainError("subset index outside the plan");
    std::vector<std::uint64_t> out;
    for_chunk(plan, index / kChunk, [&](std::size_t i, std::span<const std::uint64_t> mask) {
        if (i == index) out.assign(mask.begin(), mask.end());
    });
    return out;
}

SubsetSweepOutcome subset_sweep_serial(const Word& w, std::span<const std::size_t> occurrences, Symbol fresh,
                                       std::size_t threshold, const SubsetPlan& plan) {
    validate_plan(plan, occurrences);
    SubsetSweepOutcome out;
    const std::size_t chunks = (plan.size() + kChunk - 1) / kChunk;
    for (std::size_t c = 0; c < chunks; ++c) merge(out, sweep_chunk(w.symbols(), occurrences, fresh, threshold, plan, c));
    return out;
}

SubsetSweepOutcome subset_sweep_parallel(const Word& w, std::span<const std::size_t> occurrences, Symbol fresh,
                                         std::size_t threshold, const SubsetPlan& plan) {
    validate_plan(plan, occurrences);
    const std::size_t chunks = (plan.size() + kChunk - 1) / kChunk;
    std::vector<SubsetSweepOutcome> parts(chunks);
    const auto symbols = w.symbols();
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < chunks; ++c) parts[c] = sweep_chunk(symbols, occurrences, fresh, threshold, plan, c);
    SubsetSweepOutcome out;
    for (const auto& p : parts) merge(out, p);
    return out;
}

Word sweep_word(std::uint64_t seed, std::size_t index, std::size_t max_length) {
    if (max_length == 0) throw DomainError("sweep words need a positive maximum length");
    std::mt19937_64 rng(derive_seed(seed, {0x7431, index}));
    const auto sigma = std::uniform_int_distribution<int>(2, 3)(rng);
    const auto length = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
    std::uniform_int_distribution<int> letter(0, sigma - 1);
    std::vector<Symbol> symbols;
    symbols.reserve(length);
    for (std::size_t i = 0; i < length; ++i) symbols.push_back(Symbol::terminal(static_cast<unsigned char>('a' + letter(rng))));
    return Word(std::move(symbols));
}

LowerBoundSweepOutcome lower_bound_sweep_serial(std::size_t count, std::size_t max_length, std::uint64_t seed) {
    LowerBoundSweepOutcome out;
    for (std::size_t i = 0; i < count; ++i) check_lower_bound(i, sweep_word(seed, i, max_length), out);
    return out;
}

LowerBoundSweepOutcome lower_bound_sweep_parallel(std::size_t count, std::size_t max_length, std::uint64_t seed) {
    const int threads = omp_get_max_threads();
    std::vector<LowerBoundSweepOutcome> parts(static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t i = 0; i < count; ++i) {
        check_lower_bound(i, sweep_word(seed, i, max_length), parts[static_cast<std::size_t>(omp_get_thread_num())]);
    }
    LowerBoundSweepOutcome out;
    for (const auto& p : parts) {
        out.tested += p.tested;
        out.tight += p.tight;
        if (p.failure_index && (!out.failure_index || *p.failure_index < *out.failure_index)) {
            out.failure_index = p.failure_index;
            out.failure_word = p.failure_word;
        }
    }
    return out;
}

} // namespace slp
