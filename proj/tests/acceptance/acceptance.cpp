// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. `--only N` runs a single criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mstd/constructions.hpp"
#include "mstd/counting.hpp"
#include "mstd/error.hpp"
#include "mstd/group_lattice.hpp"
#include "mstd/int_set.hpp"
#include "mstd/search.hpp"
#include "oracle.hpp"

namespace {

using mstd::IntSet;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    const char* name;
    double limit_ms;
    std::function<Outcome()> run;
};

std::string str(std::int64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------

Outcome worked_examples() {
    Outcome out;
    const IntSet a1{0, 2, 3, 4, 7, 11, 12, 14};
    const IntSet a2{0, 2, 3, 4, 7, 9, 13, 14, 16};
    out.require(mstd::mstd_delta(a1) == mstd::MstdDelta{26, 25, 1}, "delta(A1) != (26,25,+1)");
    out.require(mstd::mstd_delta(a2) == mstd::MstdDelta{30, 29, 1}, "delta(A2) != (30,29,+1)");
    out.require(mstd::sumset(a1, a1) == IntSet::interval(0, 28).without(1).without(20).without(27),
                "A1+A1 element list");
    out.require(mstd::diffset(a1, a1) ==
                    IntSet::interval(-14, 14).without(-13).without(-6).without(6).without(13),
                "A1-A1 element list");
    out.require(mstd::sumset(a2, a2) == IntSet::interval(0, 32).without(1).without(24).without(31),
                "A2+A2 element list");
    out.require(mstd::diffset(a2, a2) ==
                    IntSet::interval(-16, 16).without(-15).without(-8).without(8).without(15),
                "A2-A2 element list");
    if (out.ok) out.detail = "A1 (26,25,+1), A2 (30,29,+1)";
    return out;
}

// Checks shared by every family: positive delta, unchanged differences and
// the new sum 2*adjoined.
void check_construction(Outcome& out, const mstd::Construction& c, const std::string& label) {
    out.require(c.delta.delta >= 1, label + ": delta < 1");
    out.require(mstd::diffset(c.set, c.set) == mstd::diffset(c.core, c.core), label + ": A-A != A*-A*");
    const std::int64_t gain = 2 * c.adjoined;
    out.require(mstd::sumset(c.set, c.set).contains(gain) && !mstd::sumset(c.core, c.core).contains(gain),
                label + ": " + str(gain) + " not a new sum");
}

// Every P = {0} or a GAP of dimension <= 2 with min 0 and max M <= 5.
std::vector<mstd::Gap> recipe_ps(std::int64_t max_elem) {
    if (max_elem == 0) return {mstd::Gap(0)};
    std::vector<mstd::Gap> out;
    for (std::int64_t step = 1; step <= max_elem; ++step) {
        if (max_elem % step == 0) out.emplace_back(0, std::vector<mstd::GapDim>{{step, 0, max_elem / step + 1}});
    }
    for (std::int64_t s1 = 1; s1 <= 5; ++s1)
        for (std::int64_t s2 = 1; s2 <= 5; ++s2)
            for (std::int64_t k1 = 2; k1 <= 6; ++k1)
                for (std::int64_t k2 = 2; k2 <= 6; ++k2)
                    if (s1 * (k1 - 1) + s2 * (k2 - 1) == max_elem)
                        out.emplace_back(0, std::vector<mstd::GapDim>{{s1, 0, k1}, {s2, 0, k2}});
    return out;
}

std::string clause(const std::function<void()>& f) {
    try {
        f();
    } catch (const mstd::PreconditionError& e) {
        return e.what();
    }
    return "";
}

Outcome construction_families() {
    Outcome out;
    int t1 = 0, t3 = 0, t2 = 0, hr = 0, gap1 = 0, gap0 = 0, rej_sum = 0, rej_low = 0;

    for (std::int64_t m = 4; m <= 10; ++m) {
        for (std::int64_t d = 1; d <= m - 1; ++d) {
            for (std::int64_t k = 1; k <= 8; ++k) {
                const bool valid = 2 * d != m && k >= (2 * d < m ? 3 : 4);
                try {
                    const auto c = mstd::construct_theorem1({m, d, k});
                    out.require(valid, "t1 accepted invalid params");
                    check_construction(out, c, "t1(" + str(m) + "," + str(d) + "," + str(k) + ")");
                    ++t1;
                } catch (const mstd::PreconditionError&) {
                    out.require(!valid, "t1 rejected valid params");
                }
            }
            for (std::int64_t k = 3; k <= 6; ++k) {
                const bool valid = d <= m - 2 && 2 * d != m && !(2 * d < m && 3 * d == m) &&
                                   !(2 * d > m && 3 * d == 2 * m);
                try {
                    const auto c = mstd::construct_theorem3({m, d, k});
                    out.require(valid, "t3 accepted invalid params");
                    check_construction(out, c, "t3(" + str(m) + "," + str(d) + "," + str(k) + ")");
                    ++t3;
                } catch (const mstd::PreconditionError&) {
                    out.require(!valid, "t3 rejected valid params");
                }
            }
        }
    }
    for (std::int64_t k = 2; k <= 10; ++k) {
        check_construction(out, mstd::construct_theorem2(k), "t2(" + str(k) + ")");
        ++t2;
    }
    for (std::int64_t k = 3; k <= 10; ++k) {
        check_construction(out, mstd::construct_hegarty_roesler(k), "hr(" + str(k) + ")");
        ++hr;
    }

    for (std::int64_t m = 4; m <= 20; ++m) {
        for (std::int64_t max_p = 0; max_p <= 5; ++max_p) {
            for (const auto& p : recipe_ps(max_p)) {
                for (std::int64_t r = max_p + 2; r < m; ++r) {
                    for (std::int64_t s = r + max_p + 1; s <= 2 * r - 1; ++s) {
                        if (2 * s > m + r - 1) continue;
                        const auto base = mstd::recipe_gap_base(p, r, s, m);
                        const IntSet lstar = base.lstar.expand();
                        for (std::int64_t k = 2; k <= 4; ++k) {
                            const std::string label = "gap(m=" + str(m) + ",r=" + str(r) + ",s=" + str(s) +
                                                      ",k=" + str(k) + ")";
                            check_construction(out, mstd::construct_gap(base, k, mstd::GapVariant::one_to_k),
                                               label);
                            ++gap1;

                            const std::string why = clause([&] {
                                check_construction(out, mstd::construct_gap(base, k, mstd::GapVariant::zero_to_k),
                                                   label + "[0,k]");
                            });
                            if (why.empty()) {
                                ++gap0;
                            } else if (why == "m not in L*+L*") {
                                out.require(mstd::sumset(lstar, lstar).contains(m), label + ": bad rejection");
                                ++rej_sum;
                            } else if (why == "(k-1)m + 1 > min(L*) + max(L*)") {
                                // Rejected: confirm the literal set really fails.
                                IntSet l;
                                for (auto x : lstar)
                                    for (std::int64_t j = 0; j <= k; ++j) l = l.with(m - x + m * j);
                                const std::int64_t a_star = l.min() + l.max();
                                const IntSet core = base.b.unite(l).unite(mstd::affine(base.b, -1, a_star));
                                out.require(mstd::mstd_delta(core.with(m)).delta <= 0,
                                            label + ": rejected but MSTD");
                                ++rej_low;
                            } else {
                                out.require(false, label + ": unexpected clause " + why);
                            }
                        }
                    }
                }
            }
        }
    }
    // Grid sizes from an independent enumeration.
    out.require(t1 == 209 && t3 == 108 && t2 == 9 && hr == 8, "family grid sizes");
    out.require(gap1 == 3477 && gap0 == 1928 && rej_sum == 1335 && rej_low == 214, "gap grid sizes");
    if (out.ok) {
        out.detail = "t1 " + str(t1) + ", t3 " + str(t3) + ", t2 " + str(t2) + ", hr " + str(hr) + ", gap[1,k] " +
                     str(gap1) + ", gap[0,k] " + str(gap0) + " (rejected: " + str(rej_sum) +
                     " m in L*+L*, " + str(rej_low) + " with a*-B reaching 2m, all non-MSTD)";
    }
    return out;
}

Outcome interval_gap_lemma() {
    Outcome out;
    int cases = 0;
    for (std::int64_t m = 4; m <= 14; ++m) {
        for (std::int64_t r = 1; r <= m - 2; ++r) {
            for (std::int64_t s = r + 1; s <= m - 1; ++s) {
                oracle::Values b;
                for (std::int64_t x = 0; x < m; ++x)
                    if (x < r || x >= s) b.push_back(x);
                const auto rep = mstd::lemma_interval_gap(m, r, s);
                const auto full = static_cast<std::size_t>(2 * m - 1);
                const bool sum_full = oracle::sums(b, b).size() == full;
                const bool diff_full = oracle::diffs(b, b).size() == full;
                const std::string label = "(" + str(m) + "," + str(r) + "," + str(s) + ")";
                out.require(rep.sum_full == sum_full && rep.diff_full == diff_full, label + " flags");
                out.require(!rep.sum_hypothesis || sum_full, label + " sum hypothesis without 2B full");
                out.require(!rep.diff_hypothesis || diff_full, label + " diff hypothesis without B-B full");
                ++cases;
            }
        }
    }
    if (out.ok) out.detail = str(cases) + " (m,r,s) triples";
    return out;
}

mstd::GroupSubset random_group_subset(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 3), mod(2, 6);
    std::vector<std::int64_t> moduli(static_cast<std::size_t>(dim(rng)));
    for (auto& m : moduli) m = mod(rng);
    const mstd::GroupSpec spec(moduli);
    std::uniform_int_distribution<std::int64_t> size(1, std::min<std::int64_t>(5, spec.order()));
    std::uniform_int_distribution<std::uint64_t> pick(0, static_cast<std::uint64_t>(spec.order() - 1));
    const auto want = static_cast<std::size_t>(size(rng));
    std::set<std::uint64_t> idx;
    while (idx.size() < want) idx.insert(pick(rng));
    std::vector<mstd::Point> pts;
    for (auto i : idx) pts.push_back(spec.point_at(i));
    return mstd::GroupSubset(spec, pts);
}

Outcome lattice_lemmas() {
    Outcome out;
    std::mt19937_64 rng(4004);
    std::uniform_int_distribution<int> hk(1, 4), tdist(1, 4);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_group_subset(rng);
        const int total = hk(rng);
        const int h = std::uniform_int_distribution<int>(1, total)(rng);
        const int k = total - h;
        const std::int64_t t = tdist(rng);
        const std::string label = "instance " + str(i);
        const auto lat = mstd::check_lemma_lat(a, h, k);
        out.require(lat.identity_holds, label + ": reduction identity");
        out.require(lat.inclusion_ii_holds, label + ": inclusion (ii)");
        out.require(lat.inclusion_iii_holds, label + ": inclusion (iii)");
        const auto ineq = mstd::check_latineq(a, h, k, t);
        out.require(ineq.upper_ok, label + ": upper bound");
        out.require(ineq.lower_ok, label + ": lower bound");
    }
    if (out.ok) out.detail = "200 instances";
    return out;
}

Outcome psi_preservation() {
    Outcome out;
    std::mt19937_64 rng(5005);
    std::uniform_int_distribution<int> dim(1, 3), size(1, 12);
    std::uniform_int_distribution<std::int64_t> coord(-8, 8);
    for (int i = 0; i < 100; ++i) {
        const auto d = static_cast<std::size_t>(dim(rng));
        std::vector<mstd::Point> pts(static_cast<std::size_t>(size(rng)), mstd::Point(d));
        std::int64_t norm = 0;
        for (auto& p : pts)
            for (auto& x : p) {
                x = coord(rng);
                norm = std::max(norm, x < 0 ? -x : x);
            }
        const mstd::LatticeSet s(d, pts);
        const auto emb = mstd::psi_embed(s, 2);
        const std::string label = "set " + str(i);
        out.require(emb.m == 4 * norm + 1, label + ": m not minimal");
        out.require(emb.image.size() == s.size(), label + ": not injective");
        out.require(mstd::sumset(emb.image, emb.image).size() == mstd::lattice_sum(s, s).size(), label + ": |S+S|");
        out.require(mstd::diffset(emb.image, emb.image).size() == mstd::lattice_diff(s, s).size(), label + ": |S-S|");
    }
    if (out.ok) out.detail = "100 lattice sets";
    return out;
}

Outcome counting_theorem() {
    Outcome out;
    std::string table;
    for (int n = 4; n <= 16; ++n) {
        const auto rep = mstd::psi_exact(n);
        out.require(rep.bound == mstd::psi_lower_bound(n), "bound mismatch at n=" + str(n));
        out.require(static_cast<std::int64_t>(rep.psi_exact) >= rep.bound && rep.bound_holds,
                    "Psi below bound at n=" + str(n));
        if (n >= 7) table += " " + str(n) + ":" + str(static_cast<std::int64_t>(rep.psi_exact));
    }
    for (int n = 3; n <= 14; ++n) {
        const auto rep = mstd::psi_exact(n);
        for (int b = 0; b < n; ++b) {
            for (int d = 0; d <= 1; ++d) {
                const auto closed = mstd::phi_g_closed_form(n, b, d);
                out.require(mstd::phi_g(n, b, d) == closed && rep.phi_table.at({b, d}) == closed,
                            "phi(" + str(b) + "," + str(d) + ") at n=" + str(n));
            }
        }
    }
    if (out.ok) out.detail = "Psi(n) >= bound for n in [4,16]; phi closed forms for n in [3,14]; Psi" + table;
    return out;
}

Outcome pipeline() {
    Outcome out;
    int n = 2;
    std::optional<mstd::GroupSubset> witness;
    for (; !witness; ++n) {
        try {
            witness = mstd::find_group_mstd(n);
        } catch (const mstd::BudgetError&) {
        }
    }
    --n;
    const auto r = mstd::embed_pipeline(*witness, 16, 2);
    out.require(r.delta.delta >= 1, "embedded set has delta < 1");
    // Regression fixtures recorded on the first run.
    out.require(n == 7, "smallest n changed");
    out.require(r.t_used == 2 && r.m_used == 53 && r.delta.delta == 3, "t/m/delta changed");
    out.require(r.set == IntSet{2,   4,   5,   6,   9,   11,  12,  13,  53,  54,  56,  60,  61,  63,
                                108, 110, 111, 112, 115, 117, 118, 119, 159, 160, 162, 166, 167, 169},
                "embedded set changed");
    if (out.ok) {
        out.detail = "n=" + str(n) + ", t=" + str(r.t_used) + ", m=" + str(r.m_used) + ", |A|=" +
                     str(static_cast<std::int64_t>(r.set.size())) + ", delta=+" + str(r.delta.delta);
    }
    return out;
}

Outcome property_suite() {
    Outcome out;
    std::mt19937_64 rng(8008);
    std::uniform_int_distribution<int> size(1, 15);
    std::uniform_int_distribution<std::int64_t> coef(-9, 9);
    for (int i = 0; i < 1000; ++i) {
        const IntSet a = IntSet::from_sorted(oracle::random_set(rng, -40, 40, static_cast<std::size_t>(size(rng))));
        const auto n = static_cast<std::uint64_t>(a.size());
        const IntSet sums = mstd::sumset(a, a);
        const IntSet diffs = mstd::diffset(a, a);
        const std::string label = "set " + str(i);
        out.require(diffs.size() % 2 == 1, label + ": |A-A| even");
        bool paired = true;
        for (auto c : diffs) paired = paired && diffs.contains(-c);
        out.require(paired, label + ": A-A not symmetric");
        out.require(sums.size() >= 2 * n - 1 && sums.size() <= n * (n + 1) / 2, label + ": |A+A| bounds");
        out.require(diffs.size() >= 2 * n - 1 && diffs.size() <= n * n - n + 1, label + ": |A-A| bounds");

        const IntSet sym = a.unite(mstd::affine(a, -1, 3));
        out.require(mstd::sumset(sym, sym).size() == mstd::diffset(sym, sym).size(), label + ": symmetric");

        std::int64_t x = 0;
        while (x == 0) x = coef(rng);
        out.require(mstd::mstd_delta(mstd::affine(a, x, coef(rng) * 13)).delta ==
                        static_cast<std::int64_t>(sums.size()) - static_cast<std::int64_t>(diffs.size()),
                    label + ": affine invariance");
    }
    if (out.ok) out.detail = "1000 random sets";
    return out;
}

Outcome spectrum() {
    Outcome out;
    mstd::SpectrumOptions o;
    o.range_max = 14;
    o.min_size = 1;
    o.max_size = 15;
    o.threads = 1;
    const auto serial = mstd::exhaustive_spectrum(o);
    o.threads = 0;
    const auto parallel = mstd::exhaustive_spectrum(o);
    out.require(serial == parallel, "serial and parallel reports differ");
    out.require(serial.spectrum.count(1) == 1, "no delta = +1 entry");
    out.require(serial.enumerated == 32767, "wrong number of subsets");
    if (out.ok) {
        out.detail = str(static_cast<std::int64_t>(serial.enumerated)) + " subsets, " +
                     str(static_cast<std::int64_t>(serial.spectrum.at(1))) + " with delta +1, witness {";
        bool first = true;
        for (auto v : serial.witnesses.at(1)) {
            out.detail += (first ? "" : ",") + str(v);
            first = false;
        }
        out.detail += "}";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "worked examples", 1.0, worked_examples},
        {2, "construction families", 5'000.0, construction_families},
        {3, "interval-with-gap lemma", 1'000.0, interval_gap_lemma},
        {4, "lattice reduction and cardinality bounds", 10'000.0, lattice_lemmas},
        {5, "psi preservation", 5'000.0, psi_preservation},
        {6, "counting theorem", 120'000.0, counting_theorem},
        {7, "end-to-end pipeline", 30'000.0, pipeline},
        {8, "property suite", 5'000.0, property_suite},
        {9, "spectrum oracle", 120'000.0, spectrum},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome res;
        try {
            res = c.run();
        } catch (const std::exception& e) {
            res.ok = false;
            res.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = ms <= c.limit_ms;
        const bool pass = res.ok && in_time;
        if (!pass) ++failures;
        std::printf("AC%d %s  %-42s %10.3f ms (limit %.0f ms)  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.name, ms,
                    c.limit_ms, in_time ? "" : "[over time] ", res.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
