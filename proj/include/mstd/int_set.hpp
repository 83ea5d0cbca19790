#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace mstd {

/// Finite set of 64-bit integers, stored as a strictly increasing sequence.
class IntSet {
public:
    IntSet() = default;

    /// Sorts and deduplicates.
    IntSet(std::initializer_list<std::int64_t> values);

    /// Sorts and deduplicates.
    static IntSet from_values(std::vector<std::int64_t> values);

    /// Takes a sequence that must already be strictly increasing; throws
    /// ParseError on duplicates or descending pairs.
    static IntSet from_sorted(std::vector<std::int64_t> values);

    /// [lo, hi]; empty when lo > hi.
    static IntSet interval(std::int64_t lo, std::int64_t hi);

    std::span<const std::int64_t> elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    std::int64_t min() const;
    std::int64_t max() const;
    bool contains(std::int64_t x) const;

    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    IntSet with(std::int64_t x) const;
    IntSet without(std::int64_t x) const;
    IntSet unite(const IntSet& other) const;
    IntSet difference(const IntSet& other) const;
    bool is_subset_of(const IntSet& other) const;

    /// Lexicographic on the ascending element sequence.
    friend auto operator<=>(const IntSet&, const IntSet&) = default;
    friend bool operator==(const IntSet&, const IntSet&) = default;

private:
    std::vector<std::int64_t> elems_;
};

/// A* = center - A.
struct SymmetryWitness {
    std::int64_t center;
    friend bool operator==(const SymmetryWitness&, const SymmetryWitness&) = default;
};

/// n(A) = |A+A| - |A-A|.
struct MstdDelta {
    std::uint64_t sum_card = 0;
    std::uint64_t diff_card = 0;
    std::int64_t delta = 0;

    bool is_mstd() const noexcept { return delta > 0; }
    friend bool operator==(const MstdDelta&, const MstdDelta&) = default;
};

IntSet sumset(const IntSet& a, const IntSet& b);
IntSet diffset(const IntSet& a, const IntSet& b);

/// hA, with 0A = {0}.
IntSet h_fold(const IntSet& a, int h);

/// hA - kA.
IntSet sum_diff(const IntSet& a, int h, int k);

/// x*A + {y}; x must be nonzero.
IntSet affine(const IntSet& a, std::int64_t x, std::int64_t y);

/// The only possible center of a finite symmetric set is min + max, so a
/// single check decides symmetry.
std::optional<SymmetryWitness> symmetry_witness(const IntSet& a);

MstdDelta mstd_delta(const IntSet& a);

/// Canonical affine representative: min moved to 0, then divided by the gcd
/// of the elements when |a| >= 2. Singletons become {0}.
IntSet normalize(const IntSet& a);

}  // namespace mstd
