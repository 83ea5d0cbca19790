#pragma once

#include <cstdint>
#include <vector>

#include "mstd/int_set.hpp"

namespace mstd {

struct GapDim {
    std::int64_t step;    ///< m_i > 0
    std::int64_t offset;  ///< first coefficient l_i
    std::int64_t length;  ///< k_i >= 1
    friend bool operator==(const GapDim&, const GapDim&) = default;
};

/// Generalized arithmetic progression
///   { base + sum_i x_i * step_i : offset_i <= x_i <= offset_i + length_i - 1 }.
/// Need not be proper; `expand` deduplicates.
class Gap {
public:
    explicit Gap(std::int64_t base, std::vector<GapDim> dims = {});

    std::int64_t base() const noexcept { return base_; }
    const std::vector<GapDim>& dims() const noexcept { return dims_; }
    std::size_t dimension() const noexcept { return dims_.size(); }

    IntSet expand() const;
    Gap translated(std::int64_t by) const;

    friend bool operator==(const Gap&, const Gap&) = default;

private:
    std::int64_t base_;
    std::vector<GapDim> dims_;
};

struct Theorem1Params {
    std::int64_t m, d, k;
};

struct Theorem3Params {
    std::int64_t m, d, k;
};

/// B and L* for the GAP families. See `validate`.
struct GapBase {
    std::int64_t m;
    IntSet b;
    Gap lstar;
};

enum class GapVariant { one_to_k, zero_to_k };

/// Every family adjoins one element to a symmetric core.
struct Construction {
    IntSet set;
    IntSet core;
    std::int64_t a_star;
    std::int64_t adjoined;
    MstdDelta delta;
};

// Validators throw PreconditionError naming the violated clause.
void validate(const Theorem1Params& p);
void validate(const Theorem3Params& p);
void validate(const GapBase& base);

Construction construct_theorem1(const Theorem1Params& p);

/// {0,2} u {3,7,...,4k-1} u {9,13,...,4k+5} u {4k+6,4k+8} u {4}, k >= 2.
Construction construct_theorem2(std::int64_t k);

/// {0,2} u {3,7,...,4k-1} u {4k,4k+2} u {4}, k >= 3.
Construction construct_hegarty_roesler(std::int64_t k);

Construction construct_theorem3(const Theorem3Params& p);

/// L = (m - L*) + m*[1,k] (one_to_k) or m*[0,k] (zero_to_k); a* = min L + max L.
///
/// zero_to_k additionally requires m not in L*+L* and
/// (k-1)m + 1 > min L* + max L*; without the latter, a*-B reaches down to 2m
/// and the adjoined element gains nothing.
Construction construct_gap(const GapBase& base, std::int64_t k, GapVariant variant);

/// B = [0,r-1] u [s,m-1], L* = {r} + P, for P with min 0 and max M, under
/// r >= M+2, r+M+1 <= s <= 2r-1, 2s <= m+r-1.
GapBase recipe_gap_base(const Gap& p, std::int64_t r, std::int64_t s, std::int64_t m);

struct IntervalGapReport {
    bool sum_hypothesis;   ///< s <= 2r-1 and 2s <= m+r-1
    bool diff_hypothesis;  ///< s <= 2r-1 or 2s <= m+r-1
    bool sum_full;         ///< 2B == [0, 2m-2]
    bool diff_full;        ///< B-B == [1-m, m-1]
    IntSet sumset;
    IntSet diffset;
};

/// Exact 2B and B-B for B = [0,r-1] u [s,m-1], 1 <= r, r+1 <= s <= m-1, m >= 4.
IntervalGapReport lemma_interval_gap(std::int64_t m, std::int64_t r, std::int64_t s);

}  // namespace mstd
