#include "mstd/int_set.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

#include "mstd/checked.hpp"
#include "mstd/error.hpp"
#include "mstd/offset_bitset.hpp"

namespace mstd {

namespace {

// Dense kernel is used while the result window stays below this many bits.
constexpr std::uint64_t kDenseLimitBits = std::uint64_t{1} << 28;

OffsetBitset to_bits(const IntSet& a) {
    const auto span = static_cast<std::size_t>(a.max() - a.min());
    OffsetBitset bits(a.min(), span + 1);
    for (auto x : a) bits.set(static_cast<std::size_t>(x - a.min()));
    return bits;
}

// Window width hi - lo + 1 if it is small enough for the dense kernel.
std::optional<std::uint64_t> dense_width(std::int64_t lo, std::int64_t hi, std::size_t na,
                                         std::size_t nb) {
    std::int64_t span;
    if (__builtin_sub_overflow(hi, lo, &span)) return std::nullopt;
    const auto width = static_cast<std::uint64_t>(span) + 1;
    if (width > kDenseLimitBits) return std::nullopt;
    // Each row costs width/64 words; pairwise costs one insert per pair.
    const std::uint64_t rows = std::min(na, nb);
    const std::uint64_t pairs = static_cast<std::uint64_t>(na) * nb;
    if (rows * (width / 64 + 1) > 8 * pairs + 1024) return std::nullopt;
    return width;
}

// Combines every x in a with every y in b as x + sign*y. Bounds are already
// checked by the caller, so no intermediate value can overflow.
IntSet combine(const IntSet& a, const IntSet& b, bool subtract, std::int64_t lo,
               std::int64_t hi) {
    if (auto width = dense_width(lo, hi, a.size(), b.size())) {
        const OffsetBitset abits = to_bits(a);
        OffsetBitset out(lo, static_cast<std::size_t>(*width));
        for (auto y : b) {
            // value = (x - a.min) + shift + lo
            const std::int64_t shift = subtract ? b.max() - y : y - b.min();
            out.or_shifted(abits, static_cast<std::size_t>(shift));
        }
        return IntSet::from_sorted(out.values());
    }
    std::vector<std::int64_t> values;
    values.reserve(a.size() * b.size());
    for (auto x : a) {
        for (auto y : b) values.push_back(subtract ? x - y : x + y);
    }
    return IntSet::from_values(std::move(values));
}

}  // namespace

IntSet::IntSet(std::initializer_list<std::int64_t> values)
    : IntSet(from_values(std::vector<std::int64_t>(values))) {}

IntSet IntSet::from_values(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    IntSet s;
    s.elems_ = std::move(values);
    return s;
}

IntSet IntSet::from_sorted(std::vector<std::int64_t> values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i - 1] == values[i]) {
            throw ParseError("duplicate element " + std::to_string(values[i]));
        }
        if (values[i - 1] > values[i]) {
            throw ParseError("elements not ascending at " + std::to_string(values[i]));
        }
    }
    IntSet s;
    s.elems_ = std::move(values);
    return s;
}

IntSet IntSet::interval(std::int64_t lo, std::int64_t hi) {
    IntSet s;
    if (lo > hi) return s;
    const auto n = static_cast<std::uint64_t>(checked_sub(hi, lo)) + 1;
    s.elems_.resize(n);
    std::iota(s.elems_.begin(), s.elems_.end(), lo);
    return s;
}

std::int64_t IntSet::min() const {
    if (elems_.empty()) throw PreconditionError("min of empty set");
    return elems_.front();
}

std::int64_t IntSet::max() const {
    if (elems_.empty()) throw PreconditionError("max of empty set");
    return elems_.back();
}

bool IntSet::contains(std::int64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

IntSet IntSet::with(std::int64_t x) const {
    if (contains(x)) return *this;
    IntSet s = *this;
    s.elems_.insert(std::upper_bound(s.elems_.begin(), s.elems_.end(), x), x);
    return s;
}

IntSet IntSet::without(std::int64_t x) const {
    IntSet s = *this;
    auto it = std::lower_bound(s.elems_.begin(), s.elems_.end(), x);
    if (it != s.elems_.end() && *it == x) s.elems_.erase(it);
    return s;
}

IntSet IntSet::unite(const IntSet& other) const {
    IntSet s;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                   std::back_inserter(s.elems_));
    return s;
}

IntSet IntSet::difference(const IntSet& other) const {
    IntSet s;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(s.elems_));
    return s;
}

bool IntSet::is_subset_of(const IntSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

IntSet sumset(const IntSet& a, const IntSet& b) {
    if (a.empty() || b.empty()) return {};
    const std::int64_t lo = checked_add(a.min(), b.min());
    const std::int64_t hi = checked_add(a.max(), b.max());
    // Iterate rows over the smaller operand.
    if (a.size() < b.size()) return combine(b, a, false, lo, hi);
    return combine(a, b, false, lo, hi);
}

IntSet diffset(const IntSet& a, const IntSet& b) {
    if (a.empty() || b.empty()) return {};
    const std::int64_t lo = checked_sub(a.min(), b.max());
    const std::int64_t hi = checked_sub(a.max(), b.min());
    return combine(a, b, true, lo, hi);
}

IntSet h_fold(const IntSet& a, int h) {
    if (h < 0) throw PreconditionError("h must be non-negative");
    if (h == 0) return IntSet{0};
    IntSet out = a;
    for (int i = 1; i < h; ++i) out = sumset(out, a);
    return out;
}

IntSet sum_diff(const IntSet& a, int h, int k) {
    if (k < 0) throw PreconditionError("k must be non-negative");
    return diffset(h_fold(a, h), h_fold(a, k));
}

IntSet affine(const IntSet& a, std::int64_t x, std::int64_t y) {
    if (x == 0) throw PreconditionError("dilation factor x must be nonzero");
    std::vector<std::int64_t> values;
    values.reserve(a.size());
    for (auto v : a) values.push_back(checked_add(checked_mul(x, v), y));
    if (x < 0) std::reverse(values.begin(), values.end());
    return IntSet::from_sorted(std::move(values));
}

std::optional<SymmetryWitness> symmetry_witness(const IntSet& a) {
    if (a.empty()) throw PreconditionError("symmetry_witness requires a nonempty set");
    const std::int64_t center = checked_add(a.min(), a.max());
    const auto e = a.elements();
    for (std::size_t i = 0, j = e.size() - 1; i <= j; ++i, --j) {
        if (e[i] + e[j] != center) return std::nullopt;
        if (j == 0) break;
    }
    return SymmetryWitness{center};
}

MstdDelta mstd_delta(const IntSet& a) {
    MstdDelta d;
    d.sum_card = sumset(a, a).size();
    d.diff_card = diffset(a, a).size();
    d.delta = static_cast<std::int64_t>(d.sum_card) - static_cast<std::int64_t>(d.diff_card);
    return d;
}

IntSet normalize(const IntSet& a) {
    if (a.empty()) throw PreconditionError("normalize requires a nonempty set");
    const std::int64_t lo = a.min();
    std::vector<std::int64_t> values;
    values.reserve(a.size());
    std::int64_t g = 0;
    for (auto v : a) {
        const std::int64_t t = checked_sub(v, lo);
        g = std::gcd(g, t);
        values.push_back(t);
    }
    if (g > 1) {
        for (auto& v : values) v /= g;
    }
    return IntSet::from_sorted(std::move(values));
}

}  // namespace mstd
