#include "mstd/counting.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mstd/error.hpp"

namespace mstd {

namespace {

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::uint64_t reverse_low_bits(std::uint64_t x, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) r |= ((x >> i) & 1U) << (n - 1 - i);
    return r;
}

std::uint64_t rotr(std::uint64_t x, int c, int n) {
    if (c == 0) return x;
    return ((x >> c) | (x << (n - c))) & full_mask(n);
}

// Bit i of the result is the parity of eps_i + eps_{b-i}. Every pair (i, b-i)
// sums to b in Z/n, so g = (b, delta) is in A+A iff some bit equals delta.
std::uint64_t pair_parities(std::uint64_t eps, std::uint64_t rev, int b, int n) {
    return eps ^ rotr(rev, (n - 1 - b + n) % n, n);
}

void require_enumerable(int n) {
    if (n < 2) throw PreconditionError("n >= 2");
    if (n > kMaxOmegaN) {
        throw BudgetError("n = " + std::to_string(n) + " exceeds the enumeration budget of " +
                          std::to_string(kMaxOmegaN));
    }
}

struct ChunkCounts {
    std::uint64_t psi = 0;
    std::vector<std::uint64_t> miss_even;  // indexed by b
    std::vector<std::uint64_t> miss_odd;
};

void count_chunk(int n, std::uint64_t begin, std::uint64_t end, ChunkCounts& out) {
    out.miss_even.assign(static_cast<std::size_t>(n), 0);
    out.miss_odd.assign(static_cast<std::size_t>(n), 0);
    const std::uint64_t full = full_mask(n);
    for (std::uint64_t eps = begin; eps < end; ++eps) {
        const std::uint64_t rev = reverse_low_bits(eps, n);
        bool covers = true;
        for (int b = 0; b < n; ++b) {
            const std::uint64_t x = pair_parities(eps, rev, b, n);
            if (x == full) {
                ++out.miss_even[static_cast<std::size_t>(b)];
                covers = false;
            } else if (x == 0) {
                ++out.miss_odd[static_cast<std::size_t>(b)];
                covers = false;
            }
        }
        if (covers) ++out.psi;
    }
}

GroupSubset verified_witness(int n, std::uint64_t eps) {
    GroupSubset a = OmegaIndex(n, eps).to_subset();
    const auto sums = group_sum_diff(a, 2, 0);
    const auto diffs = group_sum_diff(a, 1, 1);
    const auto two_n = static_cast<std::size_t>(2 * n);
    if (sums.size() != two_n || diffs.size() >= two_n || diffs.contains(Point{0, 1})) {
        throw VerificationError("Omega witness failed |A+A| = 2n > |A-A|");
    }
    return a;
}

}  // namespace

OmegaIndex::OmegaIndex(int n, std::uint64_t eps) : n_(n), eps_(eps) {
    if (n < 2 || n > 63) throw PreconditionError("n must lie in [2, 63]");
    if ((eps & ~full_mask(n)) != 0) throw PreconditionError("eps has bits beyond n");
}

GroupSubset OmegaIndex::to_subset() const {
    std::vector<Point> elements;
    elements.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) elements.push_back({i, eps_at(i)});
    return GroupSubset(GroupSpec({n_, 2}), std::move(elements));
}

bool omega_covers(const OmegaIndex& a) {
    return group_sum_diff(a.to_subset(), 2, 0).size() == static_cast<std::size_t>(2 * a.n());
}

bool omega_covers_fast(int n, std::uint64_t eps) noexcept {
    const std::uint64_t full = full_mask(n);
    const std::uint64_t rev = reverse_low_bits(eps, n);
    for (int b = 0; b < n; ++b) {
        const std::uint64_t x = pair_parities(eps, rev, b, n);
        if (x == 0 || x == full) return false;
    }
    return true;
}

std::uint64_t CountReport::phi_sum() const {
    std::uint64_t s = 0;
    for (const auto& [g, c] : phi_table) s += c;
    return s;
}

std::int64_t psi_lower_bound(int n) {
    if (n < 1 || n > 60) throw PreconditionError("n must lie in [1, 60]");
    const std::int64_t exp = n % 2 == 1 ? (n + 1) / 2 : (n + 2) / 2;
    return (std::int64_t{1} << n) - static_cast<std::int64_t>(n) * (std::int64_t{1} << exp);
}

CountReport psi_exact(int n, unsigned threads) {
    require_enumerable(n);
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    const std::uint64_t total = std::uint64_t{1} << n;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

    std::vector<ChunkCounts> chunks(threads);
    std::vector<std::thread> pool;
    const std::uint64_t step = total / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t begin = t * step;
        const std::uint64_t end = t + 1 == threads ? total : begin + step;
        pool.emplace_back(count_chunk, n, begin, end, std::ref(chunks[t]));
    }
    for (auto& th : pool) th.join();

    CountReport rep;
    rep.n = n;
    rep.total = total;
    for (int b = 0; b < n; ++b) {
        rep.phi_table[{b, 0}] = 0;
        rep.phi_table[{b, 1}] = 0;
    }
    for (const auto& c : chunks) {
        rep.psi_exact += c.psi;
        for (int b = 0; b < n; ++b) {
            rep.phi_table[{b, 0}] += c.miss_even[static_cast<std::size_t>(b)];
            rep.phi_table[{b, 1}] += c.miss_odd[static_cast<std::size_t>(b)];
        }
    }
    rep.bound = psi_lower_bound(n);
    rep.bound_holds = rep.bound <= 0 || rep.psi_exact >= static_cast<std::uint64_t>(rep.bound);
    return rep;
}

std::uint64_t phi_g(int n, int b, int delta) {
    require_enumerable(n);
    if (b < 0 || b >= n || delta < 0 || delta > 1) throw PreconditionError("g must lie in G");
    const std::uint64_t full = full_mask(n);
    const std::uint64_t missing = delta == 0 ? full : 0;
    std::uint64_t count = 0;
    for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << n); ++eps) {
        if (pair_parities(eps, reverse_low_bits(eps, n), b, n) == missing) ++count;
    }
    return count;
}

std::uint64_t phi_g_closed_form(int n, int b, int delta) {
    if (n < 2 || n > 62) throw PreconditionError("n must lie in [2, 62]");
    if (b < 0 || b >= n || delta < 0 || delta > 1) throw PreconditionError("g must lie in G");
    if (n % 2 == 1) return delta == 0 ? 0 : std::uint64_t{1} << ((n + 1) / 2);
    if (b % 2 == 1) return std::uint64_t{1} << (n / 2);
    return delta == 0 ? 0 : std::uint64_t{1} << ((n + 2) / 2);
}

GroupSubset find_group_mstd(int n, WitnessStrategy strategy) {
    if (strategy.kind == WitnessStrategy::Kind::first) {
        require_enumerable(n);
        for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << n); ++eps) {
            if (omega_covers_fast(n, eps)) return verified_witness(n, eps);
        }
        throw BudgetError("no member of Omega covers G for n = " + std::to_string(n));
    }
    if (n < 2 || n > 63) throw PreconditionError("n must lie in [2, 63]");
    std::mt19937_64 rng(strategy.seed);
    const std::uint64_t mask = full_mask(n);
    for (std::uint64_t draw = 0; draw < strategy.max_draws; ++draw) {
        const std::uint64_t eps = rng() & mask;
        if (omega_covers_fast(n, eps)) return verified_witness(n, eps);
    }
    throw BudgetError("no covering member of Omega in " + std::to_string(strategy.max_draws) +
                      " draws for n = " + std::to_string(n));
}

}  // namespace mstd
