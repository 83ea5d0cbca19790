#include "mstd/constructions.hpp"

#include <string>

#include "mstd/checked.hpp"
#include "mstd/error.hpp"

namespace mstd {

namespace {

// Keeps every family to desk-scale sizes.
constexpr std::int64_t kMaxConstructionSpan = std::int64_t{1} << 26;

void require(bool ok, const char* clause) {
    if (!ok) throw PreconditionError(clause);
}

void require_span(std::int64_t m, std::int64_t k) {
    if (checked_mul(m, checked_add(k, 4)) > kMaxConstructionSpan) {
        throw BudgetError("construction span exceeds " + std::to_string(kMaxConstructionSpan));
    }
}

IntSet reflect(const IntSet& b, std::int64_t center) { return affine(b, -1, center); }

Construction finish(IntSet core, std::int64_t adjoined, std::int64_t a_star, const char* family) {
    const auto witness = symmetry_witness(core);
    if (!witness || witness->center != a_star) {
        throw VerificationError(std::string(family) + ": core is not symmetric about a*");
    }
    Construction c{core.with(adjoined), std::move(core), a_star, adjoined, {}};
    c.delta = mstd_delta(c.set);
    if (!c.delta.is_mstd()) {
        throw VerificationError(std::string(family) + ": output is not an MSTD set (delta " +
                                std::to_string(c.delta.delta) + ")");
    }
    return c;
}

// [0, m-1] \ {d}
IntSet punctured_interval(std::int64_t m, std::int64_t d) {
    return IntSet::interval(0, m - 1).without(d);
}

}  // namespace

Gap::Gap(std::int64_t base, std::vector<GapDim> dims) : base_(base), dims_(std::move(dims)) {
    for (const auto& dim : dims_) {
        if (dim.step <= 0) throw PreconditionError("GAP step must be positive");
        if (dim.length < 1) throw PreconditionError("GAP length must be at least 1");
    }
}

IntSet Gap::expand() const {
    std::vector<std::int64_t> points{base_};
    for (const auto& dim : dims_) {
        if (checked_mul(static_cast<std::int64_t>(points.size()), dim.length) >
            kMaxConstructionSpan) {
            throw BudgetError("GAP expansion too large");
        }
        std::vector<std::int64_t> next;
        next.reserve(points.size() * static_cast<std::size_t>(dim.length));
        for (auto p : points) {
            for (std::int64_t x = dim.offset; x < dim.offset + dim.length; ++x) {
                next.push_back(checked_add(p, checked_mul(x, dim.step)));
            }
        }
        points = std::move(next);
    }
    return IntSet::from_values(std::move(points));
}

Gap Gap::translated(std::int64_t by) const { return Gap(checked_add(base_, by), dims_); }

void validate(const Theorem1Params& p) {
    require(p.m >= 4, "m >= 4");
    require(1 <= p.d && p.d <= p.m - 1, "1 <= d <= m-1");
    require(2 * p.d != p.m, "d != m/2");
    if (2 * p.d < p.m) require(p.k >= 3, "k >= 3 when d < m/2");
    if (2 * p.d > p.m) require(p.k >= 4, "k >= 4 when d > m/2");
}

void validate(const Theorem3Params& p) {
    require(p.m >= 4, "(i) m >= 4");
    require(1 <= p.d && p.d <= p.m - 2 && 2 * p.d != p.m, "(ii) 1 <= d <= m-2 and d != m/2");
    if (2 * p.d < p.m) require(3 * p.d != p.m, "(iii) d < m/2 implies d != m/3");
    if (2 * p.d > p.m) require(3 * p.d != 2 * p.m, "(iv) d > m/2 implies d != 2m/3");
    require(p.k >= 3, "k >= 3");
}

void validate(const GapBase& base) {
    const std::int64_t m = base.m;
    require(m >= 4, "m >= 4");
    require(!base.b.empty() && base.b.min() >= 0 && base.b.max() <= m - 1, "B subset of [0,m-1]");
    require(sumset(base.b, base.b) == IntSet::interval(0, 2 * m - 2), "B+B = [0,2m-2]");
    require(diffset(base.b, base.b) == IntSet::interval(1 - m, m - 1), "B-B = [1-m,m-1]");
    const IntSet lstar = base.lstar.expand();
    require(lstar.min() >= 0 && lstar.max() <= m - 1, "L* subset of [0,m-1]");
    require(lstar.difference(base.b) == lstar, "L* disjoint from B");
    require(base.b.contains(lstar.min() - 1), "min(L*)-1 in B");
}

Construction construct_theorem1(const Theorem1Params& p) {
    validate(p);
    require_span(p.m, p.k);
    const auto [m, d, k] = p;
    const IntSet b = punctured_interval(m, d);
    std::vector<std::int64_t> l;
    for (std::int64_t j = 1; j <= k; ++j) l.push_back(j * m - d);
    const std::int64_t a_star = (k + 1) * m - 2 * d;
    IntSet core = b.unite(IntSet::from_sorted(std::move(l))).unite(reflect(b, a_star));
    return finish(std::move(core), m, a_star, "construct_theorem1");
}

Construction construct_theorem2(std::int64_t k) {
    require(k >= 2, "k >= 2");
    require_span(4, k);
    std::vector<std::int64_t> values{0, 2, 4 * k + 6, 4 * k + 8};
    for (std::int64_t j = 0; j < k; ++j) {
        values.push_back(3 + 4 * j);
        values.push_back(9 + 4 * j);
    }
    return finish(IntSet::from_values(std::move(values)), 4, 4 * k + 8, "construct_theorem2");
}

Construction construct_hegarty_roesler(std::int64_t k) {
    require(k >= 3, "k >= 3");
    require_span(4, k);
    std::vector<std::int64_t> values{0, 2, 4 * k, 4 * k + 2};
    for (std::int64_t j = 0; j < k; ++j) values.push_back(3 + 4 * j);
    return finish(IntSet::from_values(std::move(values)), 4, 4 * k + 2, "hegarty-roesler");
}

Construction construct_theorem3(const Theorem3Params& p) {
    validate(p);
    require_span(p.m, p.k);
    const auto [m, d, k] = p;
    const IntSet b = punctured_interval(m, d);
    std::vector<std::int64_t> l;
    for (std::int64_t j = 2; j <= k; ++j) {
        l.push_back(j * m - d);
        l.push_back(j * m + d);
    }
    const std::int64_t a_star = (k + 2) * m;
    IntSet core = b.unite(IntSet::from_values(std::move(l))).unite(reflect(b, a_star));
    return finish(std::move(core), m, a_star, "construct_theorem3");
}

Construction construct_gap(const GapBase& base, std::int64_t k, GapVariant variant) {
    validate(base);
    require(k >= 2, "k >= 2");
    const std::int64_t m = base.m;
    require_span(m, k);
    const IntSet lstar = base.lstar.expand();
    const bool zero = variant == GapVariant::zero_to_k;
    if (zero) {
        require(!sumset(lstar, lstar).contains(m), "m not in L*+L*");
        require((k - 1) * m + 1 > lstar.min() + lstar.max(),
                "(k-1)m + 1 > min(L*) + max(L*)");
    }
    std::vector<std::int64_t> l;
    for (std::int64_t j = zero ? 0 : 1; j <= k; ++j) {
        for (auto x : lstar) l.push_back(m - x + j * m);
    }
    const IntSet lset = IntSet::from_values(std::move(l));
    const std::int64_t a_star = lset.min() + lset.max();
    IntSet core = base.b.unite(lset).unite(reflect(base.b, a_star));
    return finish(std::move(core), m, a_star, zero ? "gap2" : "gap");
}

GapBase recipe_gap_base(const Gap& p, std::int64_t r, std::int64_t s, std::int64_t m) {
    const IntSet pset = p.expand();
    require(pset.min() == 0, "min(P) = 0");
    const std::int64_t big_m = pset.max();
    require(r >= big_m + 2, "r >= M+2");
    require(r + big_m + 1 <= s && s <= 2 * r - 1, "r+M+1 <= s <= 2r-1");
    require(2 * s <= m + r - 1, "2s <= m+r-1");
    GapBase base{m, IntSet::interval(0, r - 1).unite(IntSet::interval(s, m - 1)), p.translated(r)};
    try {
        validate(base);
    } catch (const PreconditionError& e) {
        throw VerificationError(std::string("recipe produced an invalid base: ") + e.what());
    }
    return base;
}

IntervalGapReport lemma_interval_gap(std::int64_t m, std::int64_t r, std::int64_t s) {
    require(m >= 4, "m >= 4");
    require(r >= 1, "r >= 1");
    require(r + 1 <= s && s <= m - 1, "r+1 <= s <= m-1");
    const IntSet b = IntSet::interval(0, r - 1).unite(IntSet::interval(s, m - 1));
    IntervalGapReport rep{};
    rep.sum_hypothesis = s <= 2 * r - 1 && 2 * s <= m + r - 1;
    rep.diff_hypothesis = s <= 2 * r - 1 || 2 * s <= m + r - 1;
    rep.sumset = sumset(b, b);
    rep.diffset = diffset(b, b);
    rep.sum_full = rep.sumset == IntSet::interval(0, 2 * m - 2);
    rep.diff_full = rep.diffset == IntSet::interval(1 - m, m - 1);
    return rep;
}

}  // namespace mstd
