#pragma once

#include <cstdint>
#include <map>

#include "mstd/int_set.hpp"

namespace mstd {

struct SearchReport {
    std::int64_t range_max = 0;
    std::map<std::int64_t, std::uint64_t> spectrum;  ///< n(A) -> number of subsets
    std::map<std::int64_t, IntSet> witnesses;        ///< n(A) -> lexicographically least normalized A
    std::uint64_t enumerated = 0;

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

struct SpectrumOptions {
    int range_max = 0;
    int min_size = 1;
    int max_size = 1;
    unsigned threads = 1;  ///< 0 picks the hardware concurrency
    std::uint64_t budget = std::uint64_t{1} << 25;
};

/// Largest range_max the word kernel accepts: 2R+1 bits must fit a word.
constexpr int kMaxSpectrumRange = 31;

/// n(A) for A given as a bit mask over [0, range_max].
MstdDelta mask_delta(std::uint64_t mask, int range_max) noexcept;

/// Every nonempty A in [0, range_max] with min_size <= |A| <= max_size.
/// Output is identical for any thread count.
SearchReport exhaustive_spectrum(const SpectrumOptions& options);

/// `trials` uniformly drawn `size`-subsets of [0, range_max]. The sampler is
/// built on std::mt19937_64 alone, so a seed gives the same report everywhere.
SearchReport random_search(std::int64_t range_max, int size, std::uint64_t trials,
                           std::uint64_t seed);

}  // namespace mstd
