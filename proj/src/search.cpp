#include "mstd/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mstd/error.hpp"

namespace mstd {

namespace {

// Translate to min 0 and divide by the gcd of the positions.
std::uint64_t normalize_mask(std::uint64_t mask) noexcept {
    mask >>= std::countr_zero(mask);
    unsigned g = 0;
    for (std::uint64_t rest = mask & (mask - 1); rest != 0; rest &= rest - 1) {
        g = std::gcd(g, static_cast<unsigned>(std::countr_zero(rest)));
        if (g == 1) return mask;
    }
    if (g <= 1) return mask;
    std::uint64_t out = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        out |= std::uint64_t{1} << (static_cast<unsigned>(std::countr_zero(rest)) / g);
    }
    return out;
}

// Lexicographic order of the ascending element lists of two masks.
bool lex_less(std::uint64_t x, std::uint64_t y) noexcept {
    if (x == y) return false;
    const int p = std::countr_zero(x ^ y);
    const std::uint64_t above = ~((std::uint64_t{2} << p) - 1);
    if ((x >> p) & 1U) {
        // y agrees below p and then continues above p, or stops (a prefix).
        return (y & above) != 0;
    }
    return (x & above) == 0;
}

IntSet mask_to_set(std::uint64_t mask) {
    std::vector<std::int64_t> out;
    for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return IntSet::from_sorted(std::move(out));
}

struct Partial {
    std::map<std::int64_t, std::uint64_t> counts;
    std::map<std::int64_t, std::uint64_t> witness;  // normalized masks
    std::uint64_t enumerated = 0;
};

void scan(const SpectrumOptions& o, std::uint64_t begin, std::uint64_t end, Partial& out) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        const int pc = std::popcount(mask);
        if (pc < o.min_size || pc > o.max_size || mask == 0) continue;
        const std::int64_t d = mask_delta(mask, o.range_max).delta;
        ++out.counts[d];
        ++out.enumerated;
        const std::uint64_t norm = normalize_mask(mask);
        auto [it, inserted] = out.witness.try_emplace(d, norm);
        if (!inserted && lex_less(norm, it->second)) it->second = norm;
    }
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Unbiased draw from [0, bound) using only the engine's raw output.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

MstdDelta mask_delta(std::uint64_t mask, int range_max) noexcept {
    std::uint64_t sums = 0;
    std::uint64_t diffs = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const int x = std::countr_zero(rest);
        sums |= mask << x;
        diffs |= mask << (range_max - x);
    }
    MstdDelta d;
    d.sum_card = static_cast<std::uint64_t>(std::popcount(sums));
    d.diff_card = static_cast<std::uint64_t>(std::popcount(diffs));
    d.delta = static_cast<std::int64_t>(d.sum_card) - static_cast<std::int64_t>(d.diff_card);
    return d;
}

SearchReport exhaustive_spectrum(const SpectrumOptions& options) {
    const int r = options.range_max;
    if (r < 0 || r > kMaxSpectrumRange) {
        throw BudgetError("range_max must lie in [0, " + std::to_string(kMaxSpectrumRange) + "]");
    }
    if (options.min_size < 0 || options.min_size > options.max_size || options.max_size > r + 1) {
        throw PreconditionError("0 <= min_size <= max_size <= range_max+1");
    }
    std::uint64_t planned = 0;
    for (int s = std::max(1, options.min_size); s <= options.max_size; ++s) planned += binomial(r + 1, s);
    if (planned > options.budget) {
        throw BudgetError(std::to_string(planned) + " subsets exceed the budget of " +
                          std::to_string(options.budget));
    }

    const std::uint64_t total = std::uint64_t{1} << (r + 1);
    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                            : options.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
    std::vector<Partial> parts(threads);
    if (threads == 1) {
        scan(options, 0, total, parts[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t step = total / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = t * step;
            const std::uint64_t end = t + 1 == threads ? total : begin + step;
            pool.emplace_back(scan, std::cref(options), begin, end, std::ref(parts[t]));
        }
        for (auto& th : pool) th.join();
    }

    SearchReport rep;
    rep.range_max = r;
    std::map<std::int64_t, std::uint64_t> best;
    for (const auto& p : parts) {
        rep.enumerated += p.enumerated;
        for (const auto& [d, c] : p.counts) rep.spectrum[d] += c;
        for (const auto& [d, w] : p.witness) {
            auto [it, inserted] = best.try_emplace(d, w);
            if (!inserted && lex_less(w, it->second)) it->second = w;
        }
    }
    for (const auto& [d, w] : best) rep.witnesses.emplace(d, mask_to_set(w));
    return rep;
}

SearchReport random_search(std::int64_t range_max, int size, std::uint64_t trials,
                           std::uint64_t seed) {
    if (range_max < 0) throw PreconditionError("range_max >= 0");
    if (size < 1 || size > range_max + 1) throw PreconditionError("1 <= size <= range_max+1");
    if (trials < 1) throw PreconditionError("trials >= 1");
    if (range_max >= (std::int64_t{1} << 24)) throw BudgetError("range_max too large to sample");

    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> pool(static_cast<std::size_t>(range_max + 1));
    SearchReport rep;
    rep.range_max = range_max;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::iota(pool.begin(), pool.end(), 0);
        // Partial Fisher-Yates: the first `size` slots become the sample.
        for (int i = 0; i < size; ++i) {
            const auto remaining = static_cast<std::uint64_t>(pool.size()) - static_cast<std::uint64_t>(i);
            const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(bounded(rng, remaining));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        const IntSet a = IntSet::from_values({pool.begin(), pool.begin() + size});
        const std::int64_t d = mstd_delta(a).delta;
        ++rep.spectrum[d];
        ++rep.enumerated;
        IntSet norm = normalize(a);
        auto [it, inserted] = rep.witnesses.try_emplace(d, norm);
        if (!inserted && norm < it->second) it->second = std::move(norm);
    }
    return rep;
}

}  // namespace mstd
