#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "mstd/group_lattice.hpp"

namespace mstd {

/// Member of the family Omega in G = Z/n x Z/2: the "graph" set
/// A = { (i, eps_i) : 0 <= i < n }, with eps_i stored as bit i of `eps`.
class OmegaIndex {
public:
    OmegaIndex(int n, std::uint64_t eps);

    int n() const noexcept { return n_; }
    std::uint64_t eps() const noexcept { return eps_; }
    int eps_at(int i) const noexcept { return static_cast<int>((eps_ >> i) & 1U); }

    GroupSubset to_subset() const;

private:
    int n_;
    std::uint64_t eps_;
};

/// A+A = G, evaluated with the generic group sumset.
bool omega_covers(const OmegaIndex& a);

/// Same predicate on the bit-parallel kernel used by the enumerations.
bool omega_covers_fast(int n, std::uint64_t eps) noexcept;

/// g = (b mod n, delta mod 2).
using GroupElement2 = std::pair<int, int>;

struct CountReport {
    int n = 0;
    std::uint64_t total = 0;       ///< |Omega| = 2^n
    std::uint64_t psi_exact = 0;   ///< members with A+A = G
    std::int64_t bound = 0;        ///< parity-matched closed-form lower bound
    bool bound_holds = false;      ///< psi_exact >= bound (vacuous when bound <= 0)
    std::map<GroupElement2, std::uint64_t> phi_table;  ///< g -> #{A : g not in A+A}

    std::uint64_t phi_sum() const;
};

constexpr int kMaxOmegaN = 24;

/// 2^n - n 2^((n+1)/2) for odd n, 2^n - n 2^((n+2)/2) for even n.
std::int64_t psi_lower_bound(int n);

/// Exhaustive over all 2^n members of Omega; n in [2, 24]. `threads` = 0
/// picks the hardware concurrency. Results do not depend on `threads`.
CountReport psi_exact(int n, unsigned threads = 0);

/// Exact count of A in Omega with g = (b, delta) missing from A+A.
std::uint64_t phi_g(int n, int b, int delta);

/// Closed forms for phi(g): odd n gives 0 or 2^((n+1)/2) by the parity of
/// delta; even n gives 2^(n/2) for odd b, and 0 or 2^((n+2)/2) for even b.
std::uint64_t phi_g_closed_form(int n, int b, int delta);

struct WitnessStrategy {
    enum class Kind { first, random } kind = Kind::first;
    std::uint64_t seed = 0;
    std::uint64_t max_draws = std::uint64_t{1} << 16;

    static WitnessStrategy first() { return {}; }
    static WitnessStrategy random(std::uint64_t seed) { return {Kind::random, seed}; }
};

/// A member of Omega with A+A = G. Such a set is a group MSTD set since
/// (0,1) is never a difference. Throws BudgetError if none is found.
GroupSubset find_group_mstd(int n, WitnessStrategy strategy = WitnessStrategy::first());

}  // namespace mstd
