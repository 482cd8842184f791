#include "doctest.h"
#include "support.hpp"

#include "oracle.hpp"
#include "rokhlin/catalog.hpp"
#include "rokhlin/errors.hpp"
#include "rokhlin/measure.hpp"
#include "rokhlin/tower.hpp"

using namespace testing;
namespace cat = rokhlin::catalog;

namespace {

void check_partition_invariants(const SystemSpec& sys, const EntrancePartition& p) {
    Rational total(0);
    IntervalSet seen;
    IntervalSet saturation;
    IntervalSet pulled = p.base;
    for (int k = 0; k <= p.depth(); ++k) {
        const auto& level = p.levels[k];
        CHECK(!intersects(level, seen));
        if (k > 0) CHECK(level == difference(preimage(sys.map, p.levels[k - 1]), p.base));
        seen = unite(seen, level);
        saturation = unite(saturation, pulled);
        CHECK(seen == saturation);
        pulled = preimage(sys.map, pulled);
        total += measure(level, sys.cdf);
    }
    CHECK(total + p.residual == Rational(1));
}

// F^{k+j} <= T^{-j}F^k <= F^{k+j} u F^0 u ... u F^{j-1}, for k + j <= depth
void check_sandwich(const SystemSpec& sys, const EntrancePartition& p) {
    const int depth = p.depth();
    for (int k = 0; k <= depth; ++k) {
        IntervalSet pulled = p.levels[k];
        IntervalSet low;
        for (int j = 0; k + j <= depth; ++j) {
            CHECK(is_subset(p.levels[k + j], pulled));
            CHECK(is_subset(pulled, unite(p.levels[k + j], low)));
            low = unite(low, p.levels[j]);
            pulled = preimage(sys.map, pulled);
        }
    }
}

}  // namespace

TEST_CASE("first entrance partition of the doubling map") {
    const auto d = cat::doubling();
    const auto p = first_entrance_partition(d, set({{"0", "1/2"}}), 3);
    REQUIRE(p.levels.size() == 4);
    CHECK(p.levels[0] == set({{"0", "1/2"}}));
    CHECK(p.levels[1] == set({{"1/2", "3/4"}}));
    CHECK(p.levels[2] == set({{"3/4", "7/8"}}));
    CHECK(p.levels[3] == set({{"7/8", "15/16"}}));
    CHECK(p.residual == q("1/16"));
    check_partition_invariants(d, p);

    // orbit-wise first entrance times agree
    const long m = 10000;
    for (long i = 0; i < m; ++i) {
        const Rational x = oracle::grid_point(i, m);
        if (!oracle::non_boundary(d, p.base, x, 3)) continue;
        const auto t = oracle::grid_entrance_time(d, p.base, x, 3);
        for (int k = 0; k <= 3; ++k) CHECK(p.levels[k].contains(x) == (t && *t == k));
    }
}

TEST_CASE("first entrance partition of the identity map") {
    const auto p = first_entrance_partition(cat::identity(), set({{"0", "1/4"}}), 5);
    REQUIRE(p.levels.size() == 6);
    for (int k = 1; k <= 5; ++k) CHECK(p.levels[k].empty());
    CHECK(p.residual == q("3/4"));
    CHECK_THROWS_AS(first_entrance_partition(cat::identity(), IntervalSet(), 2), DomainError);
}

TEST_CASE("entrance partitions on random bases") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const SystemSpec sys = trial % 2 ? cat::tent() : SystemSpec{Cdf::lebesgue(), random_full_branch_map(rng)};
        auto f = random_set(rng, 16, 2);
        if (f.empty()) f = set({{"1/4", "5/16"}});
        const auto p = first_entrance_partition(sys, f, 8);
        check_partition_invariants(sys, p);
        check_sandwich(sys, p);
        Rational prev(1);
        for (int k = 0; k <= 8; ++k) {
            const Rational r = first_entrance_partition(sys, f, k).residual;
            CHECK(r <= prev);
            prev = r;
        }
    }
}

TEST_CASE("saturate") {
    const auto d = cat::doubling();
    const auto s = saturate(d, set({{"5/16", "3/8"}}), 12);
    const auto p = first_entrance_partition(d, set({{"5/16", "3/8"}}), 12);
    CHECK(s.set == p.saturation());
    CHECK(s.deficit == p.residual);
    // uncovered points are those whose orbit avoids the base for 12 steps
    const long m = 10000;
    const auto est = oracle::grid_measure(complement(s.set), d.cdf, m);
    CHECK(std::abs(est.value - s.deficit.to_double()) <= est.bound);

    CHECK(saturate(cat::identity(), set({{"0", "1/4"}}), 7).deficit == q("3/4"));
    CHECK(saturate(d, IntervalSet::full(), 0).deficit == Rational(0));
    CHECK(saturate(cat::tent(), IntervalSet::full(), 0).set == IntervalSet::full());
}

TEST_CASE("enlarge_to_saturation") {
    const auto d = cat::doubling();
    SaturationOptions loose;
    loose.tolerance = q("1/10");

    const auto seed = verify_chain(d, set({{"5/16", "3/8"}}), 2);
    const auto big = enlarge_to_saturation(d, seed, 40, 6, loose);
    CHECK(big.valid());
    CHECK(is_subset(seed.base, big.base));
    CHECK(big.base_measure > seed.base_measure);
    EntranceSequence seq(d, big.base);
    while (seq.depth() < 40 && seq.residual() > loose.tolerance) seq.extend_to(seq.depth() + 1);
    CHECK(seq.residual() <= loose.tolerance);

    const auto full = verify_chain(d, IntervalSet::full(), 1);
    CHECK(enlarge_to_saturation(d, full, 4, 3).base == full.base);

    const auto bad = verify_chain(cat::identity(), set({{"0", "1/2"}}), 2);
    CHECK_THROWS_AS(enlarge_to_saturation(cat::identity(), bad, 10, 4), ChainNotFoundError);
}

TEST_CASE("verify_tower examples") {
    const auto d = cat::doubling();
    const auto whole = verify_tower(d, IntervalSet::full(), 2);
    REQUIRE(whole.pairwise_intersections.size() == 1);
    CHECK(whole.pairwise_intersections[0].measure == Rational(1));
    CHECK(!whole.disjoint());

    const auto cell = verify_tower(d, set({{"5/16", "3/8"}}), 2);
    CHECK(cell.pairwise_intersections[0].measure == Rational(0));
    CHECK(cell.tower_measure == q("1/8"));
    CHECK(cell.level_measures == std::vector<Rational>{q("1/16"), q("1/16")});
}

TEST_CASE("chain length selection") {
    CHECK(select_chain_length(1, q("1/2")) == 1);
    CHECK(select_chain_length(2, q("1/4")) == 5);
    CHECK(select_chain_length(3, q("1/10")) == 21);
    CHECK(select_chain_length(5, q("1/10")) == 41);
    CHECK(select_chain_length(4, q("9/10")) == 4);
    CHECK(select_chain_length(2, q("1/3")) == 4);
    CHECK_THROWS_AS(select_chain_length(2, q("0")), DomainError);
    CHECK_THROWS_AS(select_chain_length(2, q("1")), DomainError);
    CHECK_THROWS_AS(select_chain_length(0, q("1/2")), DomainError);
}

TEST_CASE("doubling tower for n=2, epsilon=1/4") {
    const auto d = cat::doubling();
    const auto r = build_tower(d, 2, q("1/4"), 64, 10);
    CHECK(r.m == 5);
    CHECK(r.chain.valid());
    CHECK(r.certified());
    CHECK(r.tower_measure() > q("3/4"));
    for (const auto& x : r.tower.pairwise_intersections) CHECK(x.measure == Rational(0));
    CHECK(r.tower_measure() >= r.theorem_bound - r.residual());
    CHECK(r.tower_measure() == Rational(1) - r.low_levels - r.truncation_loss);
    CHECK(r.low_levels == r.chain.base_measure);
    CHECK(r.truncation_depth <= 64);
    CHECK(r.entrance.depth() == r.truncation_depth + 1);

    // independent recomputation
    const auto v = verify_tower(d, r.tower.base, 2);
    CHECK(v.tower_measure == r.tower_measure());
    CHECK(v.disjoint());
    check_partition_invariants(d, r.entrance);

    // E = union of F^{2k-1}
    IntervalSet e;
    for (int k = 1; 2 * k - 1 <= r.truncation_depth; ++k) e = unite(e, r.entrance.levels[2 * k - 1]);
    CHECK(e == r.tower.base);
}

TEST_CASE("tower bookkeeping on other systems") {
    for (const auto& sys : {cat::tent(), cat::skewed_doubling()}) {
        for (int n : {2, 3}) {
            const Rational eps = n == 2 ? q("1/4") : q("1/2");
            const auto r = build_tower(sys, n, eps, 64, 10);
            CHECK(r.certified());
            const auto& lv = r.entrance.levels;
            // F^i = T^{-i}F for i <= n-2, so the low levels weigh (n-1) mu(F)
            IntervalSet pulled = r.chain.base;
            for (int i = 0; i <= n - 2; ++i) {
                CHECK(lv[i] == pulled);
                pulled = preimage(sys.map, pulled);
            }
            CHECK(r.low_levels == Rational(n - 1) * r.chain.base_measure);
            CHECK(r.tower_measure() == Rational(1) - r.low_levels - r.truncation_loss);
            // F^{pn-1} & T^{-j}F^{qn-1} = 0 for 1 <= j <= n-1
            for (int p = 1; p * n - 1 <= r.truncation_depth; ++p)
                for (int qq = 1; qq * n - 1 <= r.truncation_depth; ++qq) {
                    IntervalSet pq = lv[qq * n - 1];
                    for (int j = 1; j < n; ++j) {
                        pq = preimage(sys.map, pq);
                        CHECK(measure(intersect(lv[p * n - 1], pq), sys.cdf) == Rational(0));
                    }
                }
            // the tower is the levels n-1..L plus whatever it shares with the low ones
            IntervalSet upper, all;
            for (int i = 0; i <= r.entrance.depth(); ++i) {
                all = unite(all, lv[i]);
                if (i >= n - 1) upper = unite(upper, lv[i]);
            }
            CHECK(is_subset(upper, r.tower.support));
            CHECK(is_subset(r.tower.support, all));
        }
    }
}

TEST_CASE("n = 1 is the truncated saturation") {
    const auto d = cat::doubling();
    const auto r = build_tower(d, 1, q("1/3"), 10, 4);
    CHECK(r.m == 1);
    CHECK(r.tower.level_sets.size() == 1);
    CHECK(r.tower.pairwise_intersections.empty());
    CHECK(r.tower_measure() == Rational(1) - r.residual());
}

TEST_CASE("tower preconditions") {
    try {
        build_tower(cat::half_rotation(), 2, q("1/4"), 64, 10);
        FAIL("expected defect-positive");
    } catch (const DefectPositiveError& e) {
        CHECK(e.n() == 2);
        CHECK(e.kind() == "defect-positive");
    }
    CHECK_THROWS_AS(build_tower(cat::identity(), 2, q("1/4"), 64, 10), DefectPositiveError);
    CHECK_THROWS_AS(build_tower(cat::broken_slope3(), 2, q("1/4"), 64, 10), NotPreservingError);
    CHECK_THROWS_AS(build_tower(cat::doubling(), 2, q("0"), 64, 10), DomainError);
    CHECK_THROWS_AS(build_tower(cat::doubling(), 0, q("1/4"), 64, 10), DomainError);
}

TEST_CASE("short truncation fails honestly") {
    TowerOptions no_growth;
    no_growth.enlarge = false;
    const auto d = cat::doubling();
    CHECK_THROWS_AS(build_tower(d, 2, q("1/4"), 1, 10, no_growth), BoundNotMetError);
    const auto r = construct_tower(d, 2, q("1/4"), 1, 10, no_growth);
    CHECK(!r.certified());
    CHECK(r.truncation_depth == 1);
    CHECK(r.tower.disjoint());
    CHECK(r.tower_measure() == Rational(1) - r.low_levels - r.truncation_loss);
}
