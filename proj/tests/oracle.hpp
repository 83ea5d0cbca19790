#pragma once

// Brute-force reference computations for the test suites. Nothing here uses
// the library's bitset or lattice kernels.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Values = std::vector<std::int64_t>;
using Vec = std::vector<std::int64_t>;

inline Values to_values(const std::set<std::int64_t>& s) { return {s.begin(), s.end()}; }

inline Values sums(const Values& a, const Values& b) {
    std::set<std::int64_t> out;
    for (auto x : a)
        for (auto y : b) out.insert(x + y);
    return to_values(out);
}

inline Values diffs(const Values& a, const Values& b) {
    std::set<std::int64_t> out;
    for (auto x : a)
        for (auto y : b) out.insert(x - y);
    return to_values(out);
}

/// hA - kA by walking every (h+k)-tuple of indices.
inline Values sum_diff_tuples(const Values& a, int h, int k) {
    std::set<std::int64_t> out;
    if (a.empty() && h + k > 0) return {};
    std::vector<std::size_t> idx(static_cast<std::size_t>(h + k), 0);
    while (true) {
        std::int64_t v = 0;
        for (int i = 0; i < h + k; ++i) v += (i < h ? 1 : -1) * a[idx[static_cast<std::size_t>(i)]];
        out.insert(v);
        int pos = h + k - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == a.size()) idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return to_values(out);
}

inline std::int64_t delta(const Values& a) {
    return static_cast<std::int64_t>(sums(a, a).size()) - static_cast<std::int64_t>(diffs(a, a).size());
}

/// Uniform random subset of [lo, hi] of the given size.
inline Values random_set(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::size_t size) {
    std::set<std::int64_t> s;
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    while (s.size() < size) s.insert(dist(rng));
    return to_values(s);
}

// ---- vectors (group and lattice) ----

inline std::set<Vec> vec_sum_diff(const std::vector<Vec>& a, int h, int k, const Vec* moduli) {
    std::set<Vec> out;
    const std::size_t d = a.front().size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(h + k), 0);
    while (true) {
        Vec v(d, 0);
        for (int i = 0; i < h + k; ++i) {
            for (std::size_t c = 0; c < d; ++c) v[c] += (i < h ? 1 : -1) * a[idx[static_cast<std::size_t>(i)]][c];
        }
        if (moduli) {
            for (std::size_t c = 0; c < d; ++c) v[c] = (((v[c] % (*moduli)[c]) + (*moduli)[c]) % (*moduli)[c]);
        }
        out.insert(v);
        int pos = h + k - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == a.size()) idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return out;
}

}  // namespace oracle
