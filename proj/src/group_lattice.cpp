#include "mstd/group_lattice.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "mstd/checked.hpp"
#include "mstd/error.hpp"

namespace mstd {

namespace {

constexpr std::uint64_t kMaxDenseVolume = std::uint64_t{1} << 26;
constexpr std::int64_t kMaxGroupOrder = std::int64_t{1} << 28;

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

void require(bool ok, const char* clause) {
    if (!ok) throw PreconditionError(clause);
}

void require_dim(const Point& p, std::size_t dim) {
    if (p.size() != dim) throw PreconditionError("point dimension does not match");
}

// Collects points inside a known bounding box. Dense mixed-radix marking when
// the box is small, an ordered set otherwise. Either way `take` returns the
// points in lexicographic order.
class PointAccumulator {
public:
    PointAccumulator(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        std::uint64_t volume = 1;
        extents_.reserve(lo_.size());
        for (std::size_t i = 0; i < lo_.size(); ++i) {
            std::int64_t span;
            if (__builtin_sub_overflow(hi_[i], lo_[i], &span) ||
                static_cast<std::uint64_t>(span) >= kMaxDenseVolume) {
                dense_ = false;
                return;
            }
            extents_.push_back(static_cast<std::uint64_t>(span) + 1);
            volume *= extents_.back();
            if (volume > kMaxDenseVolume) {
                dense_ = false;
                return;
            }
        }
        dense_ = true;
        marks_.assign(volume, 0);
    }

    void add(const Point& p) {
        if (!dense_) {
            sparse_.insert(p);
            return;
        }
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            idx = idx * extents_[i] + static_cast<std::uint64_t>(p[i] - lo_[i]);
        }
        marks_[idx] = 1;
    }

    std::vector<Point> take() {
        if (!dense_) return {sparse_.begin(), sparse_.end()};
        std::vector<Point> out;
        const std::size_t d = lo_.size();
        for (std::uint64_t idx = 0; idx < marks_.size(); ++idx) {
            if (!marks_[idx]) continue;
            Point p(d);
            std::uint64_t rest = idx;
            for (std::size_t i = d; i-- > 0;) {
                p[i] = lo_[i] + static_cast<std::int64_t>(rest % extents_[i]);
                rest /= extents_[i];
            }
            out.push_back(std::move(p));
        }
        return out;
    }

private:
    Point lo_, hi_;
    std::vector<std::uint64_t> extents_;
    bool dense_ = false;
    std::vector<unsigned char> marks_;
    std::set<Point> sparse_;
};

std::pair<Point, Point> bounds(const LatticeSet& s) {
    Point lo = s.points().front();
    Point hi = lo;
    for (const auto& p : s.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    return {lo, hi};
}

LatticeSet combine(const LatticeSet& a, const LatticeSet& b, bool subtract) {
    if (a.dim() != b.dim()) throw PreconditionError("lattice dimensions differ");
    const std::size_t d = a.dim();
    if (a.empty() || b.empty()) return LatticeSet(d);
    const auto [alo, ahi] = bounds(a);
    const auto [blo, bhi] = bounds(b);
    Point lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = subtract ? checked_sub(alo[i], bhi[i]) : checked_add(alo[i], blo[i]);
        hi[i] = subtract ? checked_sub(ahi[i], blo[i]) : checked_add(ahi[i], bhi[i]);
    }
    PointAccumulator acc(lo, hi);
    Point r(d);
    for (const auto& p : a.points()) {
        for (const auto& q : b.points()) {
            for (std::size_t i = 0; i < d; ++i) r[i] = subtract ? p[i] - q[i] : p[i] + q[i];
            acc.add(r);
        }
    }
    return LatticeSet(d, acc.take());
}

std::size_t group_card(const GroupSubset& a, int h, int k) {
    return group_sum_diff(a, h, k).size();
}

template <typename F>
auto run_stage(const char* stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(stage, e.what());
    }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)), order_(1) {
    require(!moduli_.empty(), "group needs at least one modulus");
    for (auto m : moduli_) {
        require(m >= 2, "every modulus must be >= 2");
        order_ = checked_mul(order_, m);
    }
}

bool GroupSpec::is_reduced(const Point& p) const {
    if (p.size() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (p[i] < 0 || p[i] >= moduli_[i]) return false;
    }
    return true;
}

Point GroupSpec::reduce(const Point& p) const {
    require_dim(p, dim());
    Point r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = floor_mod(p[i], moduli_[i]);
    return r;
}

std::uint64_t GroupSpec::index_of(const Point& p) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(p[i]);
    }
    return idx;
}

Point GroupSpec::point_at(std::uint64_t index) const {
    Point p(dim());
    for (std::size_t i = dim(); i-- > 0;) {
        const auto m = static_cast<std::uint64_t>(moduli_[i]);
        p[i] = static_cast<std::int64_t>(index % m);
        index /= m;
    }
    return p;
}

GroupSubset::GroupSubset(GroupSpec spec, std::vector<Point> elements)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
    for (const auto& p : elements_) {
        require_dim(p, spec_.dim());
        require(spec_.is_reduced(p), "group element coordinates must lie in [0, m_i)");
    }
    std::sort(elements_.begin(), elements_.end());
    require(std::adjacent_find(elements_.begin(), elements_.end()) == elements_.end(),
            "duplicate group element");
}

bool GroupSubset::contains(const Point& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

LatticeSet::LatticeSet(std::size_t dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
    for (const auto& p : points_) require_dim(p, dim_);
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticeSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

bool LatticeSet::is_subset_of(const LatticeSet& other) const {
    return dim_ == other.dim_ && std::includes(other.points_.begin(), other.points_.end(),
                                               points_.begin(), points_.end());
}

GroupSubset group_sum_diff(const GroupSubset& a, int h, int k) {
    require(!a.empty(), "hA-kA requires a nonempty set");
    require(h >= 0 && k >= 0, "h and k must be non-negative");
    const GroupSpec& spec = a.spec();
    if (spec.order() > kMaxGroupOrder) throw BudgetError("group order too large to enumerate");
    const auto order = static_cast<std::size_t>(spec.order());
    const std::size_t d = spec.dim();

    std::vector<unsigned char> current(order, 0);
    current[0] = 1;
    Point q(d);
    for (int step = 0; step < h + k; ++step) {
        const bool subtract = step >= h;
        std::vector<unsigned char> next(order, 0);
        for (std::size_t idx = 0; idx < order; ++idx) {
            if (!current[idx]) continue;
            const Point p = spec.point_at(idx);
            for (const auto& e : a.elements()) {
                for (std::size_t i = 0; i < d; ++i) {
                    const std::int64_t m = spec.moduli()[i];
                    q[i] = subtract ? (p[i] - e[i] + m) % m : (p[i] + e[i]) % m;
                }
                next[spec.index_of(q)] = 1;
            }
        }
        current = std::move(next);
    }
    std::vector<Point> out;
    for (std::size_t idx = 0; idx < order; ++idx) {
        if (current[idx]) out.push_back(spec.point_at(idx));
    }
    return GroupSubset(spec, std::move(out));
}

LatticeSet phi(const GroupSubset& a) {
    // Residue vectors are stored reduced, so they are already the
    // parallelepiped representatives.
    return LatticeSet(a.spec().dim(), a.elements());
}

LatticeSet pi_reduce(const LatticeSet& s, const GroupSpec& spec) {
    require(s.dim() == spec.dim(), "lattice dimension must match the group");
    std::vector<Point> out;
    out.reserve(s.size());
    for (const auto& p : s.points()) out.push_back(spec.reduce(p));
    return LatticeSet(s.dim(), std::move(out));
}

LatticeSet lambda_box(const GroupSpec& spec, std::int64_t s, std::int64_t t) {
    require(s <= t, "s <= t");
    const std::size_t d = spec.dim();
    const std::int64_t side = checked_sub(t, s);
    if (static_cast<std::uint64_t>(checked_pow(side, static_cast<std::int64_t>(d))) >
        kMaxDenseVolume) {
        throw BudgetError("lattice box too large");
    }
    std::vector<Point> out;
    if (side == 0) return LatticeSet(d);
    Point q(d, s);
    while (true) {
        Point p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = checked_mul(q[i], spec.moduli()[i]);
        out.push_back(std::move(p));
        std::size_t i = d;
        while (i-- > 0) {
            if (++q[i] < t) break;
            q[i] = s;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return LatticeSet(d, std::move(out));
}

LatticeSet lattice_sum(const LatticeSet& a, const LatticeSet& b) { return combine(a, b, false); }

LatticeSet lattice_diff(const LatticeSet& a, const LatticeSet& b) { return combine(a, b, true); }

LatticeSet lattice_sum_diff(const LatticeSet& s, int h, int k) {
    require(h >= 0 && k >= 0, "h and k must be non-negative");
    LatticeSet out(s.dim(), {Point(s.dim(), 0)});
    for (int i = 0; i < h; ++i) out = lattice_sum(out, s);
    for (int i = 0; i < k; ++i) out = lattice_diff(out, s);
    return out;
}

LatticeSet build_bt(const GroupSubset& a, std::int64_t t) {
    require(!a.empty(), "B_t requires a nonempty set");
    require(t >= 1, "t >= 1");
    return lattice_sum(phi(a), lambda_box(a.spec(), 0, t));
}

LemmaLatReport check_lemma_lat(const GroupSubset& a, int h, int k) {
    require(!a.empty(), "A must be nonempty");
    require(h >= 1 && k >= 0, "h >= 1 and k >= 0");
    const GroupSpec& spec = a.spec();
    const LatticeSet group_side = phi(group_sum_diff(a, h, k));
    const LatticeSet lattice_side = lattice_sum_diff(phi(a), h, k);
    LemmaLatReport rep{};
    rep.identity_holds = group_side == pi_reduce(lattice_side, spec);
    rep.inclusion_ii_holds =
        lattice_side.is_subset_of(lattice_sum(group_side, lambda_box(spec, -k, h)));
    rep.inclusion_iii_holds =
        group_side.is_subset_of(lattice_sum(lattice_side, lambda_box(spec, -h + 1, k + 1)));
    return rep;
}

std::int64_t find_t(const GroupSubset& a, SumDiffPair first, SumDiffPair second,
                    std::int64_t t_max) {
    require(!a.empty(), "A must be nonempty");
    require(first.h >= 1 && second.h >= 1, "h1 >= 1 and h2 >= 1");
    require(first.k >= 0 && second.k >= 0, "k1, k2 >= 0");
    require(first.h + first.k == second.h + second.k, "h1+k1 = h2+k2");
    require(group_card(a, first.h, first.k) > group_card(a, second.h, second.k),
            "|h1A-k1A| > |h2A-k2A| in G");
    require(t_max >= 1, "t_max >= 1");
    for (std::int64_t t = 1; t <= t_max; ++t) {
        const LatticeSet bt = build_bt(a, t);
        if (lattice_sum_diff(bt, first.h, first.k).size() >
            lattice_sum_diff(bt, second.h, second.k).size()) {
            return t;
        }
    }
    throw BudgetError("no t <= " + std::to_string(t_max) + " separates the two counts");
}

LatineqReport check_latineq(const GroupSubset& a, int h, int k, std::int64_t t) {
    require(!a.empty(), "A must be nonempty");
    require(h >= 1 && k >= 0, "h >= 1 and k >= 0");
    require(t >= 1, "t >= 1");
    const auto d = static_cast<std::int64_t>(a.spec().dim());
    LatineqReport rep{};
    rep.group_card = group_card(a, h, k);
    rep.lattice_card = lattice_sum_diff(build_bt(a, t), h, k).size();
    const auto c = static_cast<std::int64_t>(rep.group_card);
    const auto card = static_cast<std::int64_t>(rep.lattice_card);
    const std::int64_t c_hk = h + k;
    rep.upper_bound = checked_mul(c, checked_pow(checked_mul(c_hk, t), d));
    rep.upper_ok = card <= rep.upper_bound;
    const std::int64_t base = checked_sub(checked_mul(c_hk, t), 2 * (c_hk - 1));
    rep.lower_vacuous = base < 0;
    rep.lower_bound = rep.lower_vacuous ? 0 : checked_mul(c, checked_pow(base, d));
    rep.lower_ok = card >= rep.lower_bound;
    return rep;
}

std::int64_t sup_norm(const Point& p) {
    std::int64_t n = 0;
    for (auto x : p) n = std::max(n, checked_abs(x));
    return n;
}

std::int64_t psi_value(const Point& p, std::int64_t m) {
    std::int64_t value = 0;
    std::int64_t power = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        value = checked_add(value, checked_mul(p[i], power));
        if (i + 1 < p.size()) power = checked_mul(power, m);
    }
    return value;
}

PsiEmbedding psi_embed(const LatticeSet& s, std::int64_t cap_l) {
    require(!s.empty(), "S must be nonempty");
    require(cap_l >= 1, "cap_l >= 1");
    std::int64_t max_norm = 0;
    for (const auto& p : s.points()) max_norm = std::max(max_norm, sup_norm(p));
    const std::int64_t m = checked_add(checked_mul(checked_mul(2, cap_l), max_norm), 1);
    std::vector<std::int64_t> image;
    image.reserve(s.size());
    for (const auto& p : s.points()) image.push_back(psi_value(p, m));
    PsiEmbedding out{m, IntSet::from_values(std::move(image))};
    if (out.image.size() != s.size()) throw VerificationError("psi is not injective on S");
    return out;
}

EmbedResult embed_pipeline(const GroupSubset& a, std::int64_t t_max, std::int64_t cap_l) {
    run_stage("precondition", [&] {
        require(!a.empty(), "A must be nonempty");
        require(cap_l >= 2, "cap_l >= 2 (sums and differences use h+k = 2)");
        require(group_card(a, 2, 0) > group_card(a, 1, 1), "|A+A| > |A-A| in G");
        return 0;
    });
    EmbedResult out{};
    out.t_used = run_stage("find_t", [&] { return find_t(a, {2, 0}, {1, 1}, t_max); });
    const LatticeSet bt = run_stage("build_bt", [&] { return build_bt(a, out.t_used); });
    const PsiEmbedding emb = run_stage("psi_embed", [&] { return psi_embed(bt, cap_l); });
    out.m_used = emb.m;
    out.set = emb.image;
    out.delta = run_stage("verify", [&] {
        const MstdDelta d = mstd_delta(out.set);
        if (!d.is_mstd()) throw VerificationError("embedded set is not MSTD");
        return d;
    });
    return out;
}

}  // namespace mstd
