#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mzv/rational.hpp"
#include "mzv/strata.hpp"

using namespace mzv;

namespace {

using Subsets = std::vector<std::vector<int>>;

// --- independent brute-force machinery over 12th roots of unity ----------
// A point is an exponent vector a in (Z/12)^n; A_I holds iff sum_{i in I} a_i
// is 0 mod 12.

constexpr int kOrder = 12;

std::vector<std::vector<int>> torsion_points(const Subsets& family, int n) {
    std::vector<std::vector<int>> pts;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool ok = true;
        for (const auto& I : family) {
            int s = 0;
            for (int i : I) s += a[static_cast<std::size_t>(i - 1)];
            if (s % kOrder != 0) {
                ok = false;
                break;
            }
        }
        if (ok) pts.push_back(a);
        int pos = n - 1;
        while (pos >= 0 && ++a[static_cast<std::size_t>(pos)] == kOrder) {
            a[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return pts;
}

// independent exact rank of the 0/1 characteristic matrix (fraction-free
// elimination written out locally, no shared code with the library)
int oracle_rank(const Subsets& family, int n) {
    std::vector<std::vector<long long>> m;
    for (const auto& I : family) {
        std::vector<long long> row(static_cast<std::size_t>(n), 0);
        for (int i : I) row[static_cast<std::size_t>(i - 1)] = 1;
        m.push_back(row);
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank) continue;
            long long a = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            long long b = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            if (a == 0) continue;
            for (int c = 0; c < n; ++c) {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    b * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    a * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
            }
        }
        ++rank;
    }
    return rank;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Subsets all_divisors(int n) {
    Subsets out;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) I.push_back(i + 1);
        }
        out.push_back(I);
    }
    return out;
}

}  // namespace

TEST_CASE("divisor labels") {
    DivisorLabel a = DivisorLabel::A({2, 1}, 3);
    CHECK(a.to_string() == "A{1,2}");
    CHECK(DivisorLabel::B0(2, 3).to_string() == "B0{2}");
    CHECK(DivisorLabel::B1(2, 3).same_divisor(DivisorLabel::A({2}, 3)));
    CHECK_FALSE(DivisorLabel::B0(2, 3).same_divisor(DivisorLabel::A({2}, 3)));
    CHECK_THROWS_AS(DivisorLabel::A({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(DivisorLabel::A({5}, 3), std::invalid_argument);
}

TEST_CASE("characteristic matrices") {
    IntMat m1 = char_matrix({{1, 2}}, 2);
    CHECK(m1.rows() == 1);
    CHECK(m1.at(0, 0) == 1);
    CHECK(m1.at(0, 1) == 1);

    IntMat m2 = char_matrix({{1, 2}, {2, 3}}, 3);
    CHECK(m2.at(0, 2) == 0);
    CHECK(m2.at(1, 0) == 0);

    IntMat m3 = char_matrix({{1, 2}, {2, 3}, {1, 3}}, 3);
    CHECK(determinant(m3) == 2);

    CHECK_THROWS_AS(char_matrix({{}}, 3), std::invalid_argument);
}

TEST_CASE("intersection classification") {
    // one divisor: hypersurface
    for (int n = 2; n <= 6; ++n) {
        for (int a = 1; a <= n; ++a) {
            std::vector<int> I;
            for (int i = 1; i <= a; ++i) I.push_back(i);
            IntersectionClass c = intersection_type({I}, n);
            CHECK(c.s == n - a);
            CHECK(c.r == 1);
            CHECK(c.torus_rank == a - 1);
            CHECK(c.invariant_factors == std::vector<long long>{1});
            CHECK(c.component_count_closure == 1);
        }
    }

    IntersectionClass two = intersection_type({{1, 2}, {2, 3}}, 3);
    CHECK(two.s == 0);
    CHECK(two.r == 2);
    CHECK(two.torus_rank == 1);
    CHECK(two.invariant_factors == std::vector<long long>{1, 1});

    IntersectionClass tri = intersection_type({{1, 2}, {2, 3}, {1, 3}}, 3);
    CHECK(tri.s == 0);
    CHECK(tri.r == 3);
    CHECK(tri.torus_rank == 0);
    CHECK(tri.invariant_factors == std::vector<long long>{1, 1, 2});
    CHECK(tri.component_count_closure == 2);
}

TEST_CASE("the triple intersection is exactly two torsion points") {
    auto pts = torsion_points({{1, 2}, {2, 3}, {1, 3}}, 3);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == std::vector<int>{0, 0, 0});                       // (1,1,1)
    CHECK(pts[1] == std::vector<int>{kOrder / 2, kOrder / 2, kOrder / 2});  // (-1,-1,-1)
}

TEST_CASE("component count matches the torsion point count for n <= 3") {
    for (int n = 2; n <= 3; ++n) {
        Subsets divisors = all_divisors(n);
        const int d = static_cast<int>(divisors.size());
        for (int mask = 1; mask < (1 << d); ++mask) {
            Subsets family;
            for (int i = 0; i < d; ++i) {
                if (mask & (1 << i)) family.push_back(divisors[static_cast<std::size_t>(i)]);
            }
            IntersectionClass cls = intersection_type(family, n);
            for (long long c : cls.invariant_factors) REQUIRE(kOrder % c == 0);
            long long pts = static_cast<long long>(torsion_points(family, n).size());
            int dim = n - cls.r;
            CHECK(cls.r == oracle_rank(family, n));
            CHECK(pts == ipow(kOrder, dim) * cls.component_count_closure);
        }
    }
}

TEST_CASE("clean intersections") {
    CHECK(clean_intersection_check({{1, 2, 3}}, 4));
    CHECK(clean_intersection_check({{1, 2}, {2, 3}, {1, 3}}, 3));
    for (int n = 2; n <= 4; ++n) {
        Subsets divisors = all_divisors(n);
        for (std::size_t a = 0; a < divisors.size(); ++a) {
            for (std::size_t b = a + 1; b < divisors.size(); ++b) {
                CHECK(clean_intersection_check({divisors[a], divisors[b]}, n));
            }
        }
    }
    CHECK_THROWS_AS(clean_intersection_check({{1, 2}, {1, 2}}, 3), std::invalid_argument);
}

TEST_CASE("tate certificates") {
    TateCertificate single = tate_certificate({{1, 2, 3}}, 4);
    CHECK(single.valid);
    CHECK(single.model == "A^1 x Gm^2");

    TateCertificate pts = tate_certificate({{1, 2}, {2, 3}, {1, 3}}, 3);
    CHECK(pts.valid);
    CHECK(pts.model == "A^0 x Gm^0 x {2 components}");
    CHECK(pts.U * pts.M * pts.V == pts.D);
}

TEST_CASE("the n=2 poset is the three divisors over the point (1,1)") {
    StratumPoset p = build_poset(2);
    REQUIRE(p.nodes.size() == 4);
    CHECK(p.smooth_ok);
    CHECK(p.clean_ok);
    CHECK(p.closure_ok);

    int point_idx = -1;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (p.nodes[i].dim == 0) {
            REQUIRE(point_idx == -1);  // only one point stratum
            point_idx = static_cast<int>(i);
        }
    }
    REQUIRE(point_idx >= 0);
    CHECK(p.nodes[static_cast<std::size_t>(point_idx)].rank == 0);
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (static_cast<int>(i) == point_idx) continue;
        CHECK(p.nodes[i].dim == 1);
        CHECK(p.nodes[i].rank == 1);
        CHECK(p.lt[static_cast<std::size_t>(point_idx)][i]);  // point below every divisor
    }

    auto schedule = blowup_schedule(p);
    REQUIRE(schedule.size() == 2);
    CHECK(schedule[0].size() == 1);
    CHECK(schedule[1].size() == 3);
}

TEST_CASE("the n=3 poset matches the brute-force solution-set oracle") {
    StratumPoset p = build_poset(3);

    // oracle: enumerate all families, dedup varieties by their torsion point
    // sets, split into components (positive-dimensional classes here are
    // connected; the component-count formula certifies it)
    const int n = 3;
    Subsets divisors = all_divisors(n);
    const int d = static_cast<int>(divisors.size());
    std::map<std::vector<std::vector<int>>, int> variety_dim;  // point set -> dim
    for (int mask = 1; mask < (1 << d); ++mask) {
        Subsets family;
        for (int i = 0; i < d; ++i) {
            if (mask & (1 << i)) family.push_back(divisors[static_cast<std::size_t>(i)]);
        }
        auto pts = torsion_points(family, n);
        std::sort(pts.begin(), pts.end());
        int dim = n - oracle_rank(family, n);
        long long comp = static_cast<long long>(pts.size()) / ipow(kOrder, dim);
        if (dim > 0) REQUIRE(comp == 1);  // torsion-free in this range
        auto it = variety_dim.find(pts);
        if (it == variety_dim.end()) {
            variety_dim.emplace(std::move(pts), dim);
        } else {
            REQUIRE(it->second == dim);
        }
    }
    // components: positive-dimensional varieties are single nodes, zero
    // dimensionals split into their individual points
    std::set<std::vector<std::vector<int>>> fingerprints;
    for (const auto& [pts, dim] : variety_dim) {
        if (dim > 0) {
            fingerprints.insert(pts);
        } else {
            for (const auto& pt : pts) fingerprints.insert({pt});
        }
    }
    CHECK(p.nodes.size() == fingerprints.size());

    // rank function over the oracle poset (inclusion of point sets)
    std::vector<std::vector<std::vector<int>>> fp(fingerprints.begin(), fingerprints.end());
    auto contains = [](const std::vector<std::vector<int>>& big,
                       const std::vector<std::vector<int>>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    std::vector<int> orank(fp.size(), -1);
    std::function<int(std::size_t)> rank_of = [&](std::size_t v) -> int {
        if (orank[v] >= 0) return orank[v];
        int r = 0;
        for (std::size_t u = 0; u < fp.size(); ++u) {
            if (u != v && contains(fp[v], fp[u])) r = std::max(r, rank_of(u) + 1);
        }
        return orank[v] = r;
    };
    std::multiset<int> oracle_ranks, lib_ranks;
    for (std::size_t v = 0; v < fp.size(); ++v) oracle_ranks.insert(rank_of(v));
    for (const StratumNode& node : p.nodes) lib_ranks.insert(node.rank);
    CHECK(oracle_ranks == lib_ranks);

    CHECK(p.smooth_ok);
    CHECK(p.clean_ok);
    CHECK(p.closure_ok);

    CHECK_THROWS_AS(build_poset(5), std::range_error);
}

TEST_CASE("blow-up schedule levels are antichains covering every node") {
    for (int n : {2, 3}) {
        StratumPoset p = build_poset(n);
        auto levels = blowup_schedule(p);
        std::size_t covered = 0;
        for (std::size_t r = 0; r < levels.size(); ++r) {
            covered += levels[r].size();
            for (int v : levels[r]) {
                CHECK(p.nodes[static_cast<std::size_t>(v)].rank == static_cast<int>(r));
            }
        }
        CHECK(covered == p.nodes.size());
    }
}

TEST_CASE("singleton flag partition in rank order validates") {
    for (int n : {2, 3}) {
        StratumPoset p = build_poset(n);
        CHECK(validate_flag_schedule(p, flag_partition(p)));
    }
}

TEST_CASE("chain and antichain schedules") {
    // chain a < b: two singleton flags in order validate, reversed fails
    std::vector<std::vector<bool>> lt = {{false, true}, {false, false}};
    CHECK(validate_flag_schedule(2, lt, FlagSchedule{{{0}, {1}}}));
    CHECK(validate_flag_schedule(2, lt, FlagSchedule{{{0, 1}}}));  // one flag, increasing
    CHECK_FALSE(validate_flag_schedule(2, lt, FlagSchedule{{{1}, {0}}}));
    CHECK_FALSE(validate_flag_schedule(2, lt, FlagSchedule{{{1, 0}}}));

    // antichain: any single-flag chain fails, singleton flags in any order pass
    std::vector<std::vector<bool>> anti = {{false, false}, {false, false}};
    CHECK(validate_flag_schedule(2, anti, FlagSchedule{{{1}, {0}}}));
    CHECK_FALSE(validate_flag_schedule(2, anti, FlagSchedule{{{0, 1}}}));
}

TEST_CASE("the explicit interval flag family validates for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        IntervalPoset p = interval_poset(n);
        FlagSchedule fs = interval_flag_family(p);
        CHECK(static_cast<int>(fs.flags.size()) == n);
        CHECK(validate_flag_schedule(static_cast<int>(p.intervals.size()), p.lt, fs));
    }
}

TEST_CASE("mutations of the interval family are rejected") {
    for (int n : {3, 4, 6}) {
        IntervalPoset p = interval_poset(n);
        const int count = static_cast<int>(p.intervals.size());
        FlagSchedule good = interval_flag_family(p);

        // swapping the first two flags schedules the deepest stratum too late
        FlagSchedule swapped = good;
        std::swap(swapped.flags[0], swapped.flags[1]);
        CHECK_FALSE(validate_flag_schedule(count, p.lt, swapped));

        // reversing a chain breaks monotonicity
        FlagSchedule reversed = good;
        std::reverse(reversed.flags[0].begin(), reversed.flags[0].end());
        if (n > 1) CHECK_FALSE(validate_flag_schedule(count, p.lt, reversed));

        // moving a node onto the end of another flag breaks that chain
        FlagSchedule moved = good;
        moved.flags[1].push_back(moved.flags[0].back());
        moved.flags[0].pop_back();
        CHECK_FALSE(validate_flag_schedule(count, p.lt, moved));

        // dropping a node breaks the partition
        FlagSchedule dropped = good;
        dropped.flags[0].pop_back();
        CHECK_FALSE(validate_flag_schedule(count, p.lt, dropped));
    }
}

TEST_CASE("symmetric function identity") {
    CHECK(sigma_identity_check(1));
    CHECK(sigma_identity_check(2));
    CHECK(sigma_identity_check(5));
    CHECK_THROWS_AS(sigma_identity_check(0), std::range_error);
}

TEST_CASE("clearance polynomial of the smallest case") {
    // I = {1,2} in dimension 2: bracket is 1 + s_2 - s_1 s_2
    Polynomial b = clearance_polynomial({1, 2}, 2);
    Polynomial expect = Polynomial::one();
    expect += Polynomial(Monomial::var(1));
    expect -= Polynomial(Monomial::var(0) * Monomial::var(1));
    CHECK(b == expect);
}

TEST_CASE("boundary clearance checks") {
    ClearanceReport small = boundary_clearance_check({1, 2}, 2, 500, 11);
    CHECK(small.symbolic_ok);
    CHECK(small.positive_ok);
    CHECK(small.samples == 500);

    ClearanceReport mid = boundary_clearance_check({1, 3}, 3, 1000, 7);
    CHECK(mid.ok());

    CHECK_THROWS_AS(boundary_clearance_check({2}, 3, 10, 0), std::invalid_argument);
}

TEST_CASE("clearance expression at a vanishing blow-up coordinate") {
    // with any s_i = 0 for i in J_0 the bracket collapses to 1 + sigma_1 > 0
    Polynomial b = clearance_polynomial({2, 3, 4}, 4);  // J_0 = {1,2}
    std::vector<Rat> pt{Rat(0), Rat(1, 2), Rat(1, 3), Rat(1, 5)};
    // expected: 1 + s3 + s3*s4
    Rat expect = Rat(1) + Rat(1, 3) + Rat(1, 3) * Rat(1, 5);
    CHECK(b.eval(pt) == expect);
    CHECK(b.eval(pt) > 0);
}

TEST_CASE("boundary strata have strictly larger codimension than chain strata") {
    for (int n = 2; n <= 6; ++n) CHECK(boundary_codim_gap_check(n));
}
