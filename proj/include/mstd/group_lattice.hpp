#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mstd/int_set.hpp"

namespace mstd {

/// Integer vector; a lattice point of Z^d or a residue vector of G.
using Point = std::vector<std::int64_t>;

/// G = Z/m_1 x ... x Z/m_d, every m_i >= 2.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::int64_t> moduli);

    const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
    std::size_t dim() const noexcept { return moduli_.size(); }
    std::int64_t order() const noexcept { return order_; }

    bool is_reduced(const Point& p) const;

    /// Coordinatewise residue in [0, m_i).
    Point reduce(const Point& p) const;

    /// Mixed-radix index of a reduced point, in [0, order).
    std::uint64_t index_of(const Point& p) const;
    Point point_at(std::uint64_t index) const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    std::vector<std::int64_t> moduli_;
    std::int64_t order_;
};

/// Subset of a finite group given as reduced residue vectors, kept sorted.
class GroupSubset {
public:
    /// Rejects unreduced coordinates, wrong dimension, and duplicates.
    GroupSubset(GroupSpec spec, std::vector<Point> elements);

    const GroupSpec& spec() const noexcept { return spec_; }
    const std::vector<Point>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(const Point& p) const;

    friend bool operator==(const GroupSubset&, const GroupSubset&) = default;

private:
    GroupSpec spec_;
    std::vector<Point> elements_;
};

/// Finite subset of Z^d, points sorted lexicographically and distinct.
class LatticeSet {
public:
    explicit LatticeSet(std::size_t dim) : dim_(dim) {}

    /// Merges duplicates. Every point must have `dim` coordinates.
    LatticeSet(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    bool contains(const Point& p) const;
    bool is_subset_of(const LatticeSet& other) const;

    friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

private:
    std::size_t dim_;
    std::vector<Point> points_;
};

/// hA - kA in G; 0A is the identity.
GroupSubset group_sum_diff(const GroupSubset& a, int h, int k);

/// Canonical embedding of G into its fundamental parallelepiped P_G.
LatticeSet phi(const GroupSubset& a);

/// Coordinatewise reduction Z^d -> P_G.
LatticeSet pi_reduce(const LatticeSet& s, const GroupSpec& spec);

/// Lambda_G(s,t) = { (q_1 m_1, ..., q_d m_d) : s <= q_i < t }.
LatticeSet lambda_box(const GroupSpec& spec, std::int64_t s, std::int64_t t);

LatticeSet lattice_sum(const LatticeSet& a, const LatticeSet& b);
LatticeSet lattice_diff(const LatticeSet& a, const LatticeSet& b);

/// hS - kS in Z^d; 0S is the origin.
LatticeSet lattice_sum_diff(const LatticeSet& s, int h, int k);

/// B_t = phi(A) + Lambda_G(0,t).
LatticeSet build_bt(const GroupSubset& a, std::int64_t t);

struct LemmaLatReport {
    bool identity_holds;       ///< phi(hA-kA) = pi(h phi(A) - k phi(A))
    bool inclusion_ii_holds;   ///< h phi(A) - k phi(A) in phi(hA-kA) + Lambda(-k,h)
    bool inclusion_iii_holds;  ///< phi(hA-kA) in h phi(A) - k phi(A) + Lambda(-h+1,k+1)

    bool all() const noexcept { return identity_holds && inclusion_ii_holds && inclusion_iii_holds; }
};

LemmaLatReport check_lemma_lat(const GroupSubset& a, int h, int k);

struct SumDiffPair {
    int h;
    int k;
};

/// Smallest t in [1, t_max] with |h1 B_t - k1 B_t| > |h2 B_t - k2 B_t|.
/// Requires h1, h2 >= 1, h1+k1 = h2+k2 and the strict inequality in G.
std::int64_t find_t(const GroupSubset& a, SumDiffPair first, SumDiffPair second,
                    std::int64_t t_max);

struct LatineqReport {
    std::uint64_t lattice_card;  ///< |hB_t - kB_t|
    std::uint64_t group_card;    ///< |hA - kA|
    std::int64_t upper_bound;    ///< |hA-kA| ((h+k)t)^d
    std::int64_t lower_bound;    ///< |hA-kA| ((h+k)t - 2(h+k-1))^d, 0 when vacuous
    bool lower_vacuous;          ///< base (h+k)t - 2(h+k-1) is negative
    bool upper_ok;
    bool lower_ok;
};

LatineqReport check_latineq(const GroupSubset& a, int h, int k, std::int64_t t);

/// ||a|| = max |a_i|.
std::int64_t sup_norm(const Point& p);

/// psi(a) = sum_i a_i m^(i-1).
std::int64_t psi_value(const Point& p, std::int64_t m);

struct PsiEmbedding {
    std::int64_t m;
    IntSet image;
};

/// Linearizes S into Z with the smallest admissible base
/// m = 2 cap_l max||a|| + 1, which keeps |hS - kS| for every h+k <= cap_l.
PsiEmbedding psi_embed(const LatticeSet& s, std::int64_t cap_l);

struct EmbedResult {
    std::int64_t t_used;
    std::int64_t m_used;
    IntSet set;
    MstdDelta delta;
};

/// Group MSTD set -> lattice MSTD set B_t -> integer MSTD set. Errors are
/// raised as PipelineError tagged with the failing stage.
EmbedResult embed_pipeline(const GroupSubset& a, std::int64_t t_max, std::int64_t cap_l = 2);

}  // namespace mstd
