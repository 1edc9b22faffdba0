#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "oscm/crossings.hpp"

using namespace oscm;

TEST(EdgesCross, Basics) {
    EXPECT_TRUE(edges_cross({1, 2}, {2, 1}));
    EXPECT_FALSE(edges_cross({1, 1}, {2, 2}));
    EXPECT_FALSE(edges_cross({1, 1}, {1, 2}));  // shared vertex
    EXPECT_FALSE(edges_cross({1, 2}, {3, 2}));  // shared slot
}

TEST(PairCrossings, MatchesGeometricOracle) {
    for (int a1 = 1; a1 <= 5; ++a1)
        for (int b1 = a1 + 1; b1 <= 5; ++b1)
            for (int a2 = 1; a2 <= 5; ++a2)
                for (int b2 = a2 + 1; b2 <= 5; ++b2)
                    for (int s1 = 1; s1 <= 3; ++s1)
                        for (int s2 = 1; s2 <= 3; ++s2) {
                            if (s1 == s2) continue;
                            EXPECT_EQ(pair_crossings({a1, b1}, s1, {a2, b2}, s2),
                                      oracle::pair_count({a1, b1}, s1, {a2, b2}, s2));
                        }
}

TEST(PairCrossings, SameSlotThrows) {
    try {
        pair_crossings({1, 2}, 3, {2, 4}, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SameSlot);
    }
}

TEST(TotalCrossings, MatchesOracleOnRandomAssignments) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 9;
        const auto reqs = oracle::random_two_regular(n, rng);
        std::vector<int> slots(static_cast<std::size_t>(n));
        std::iota(slots.begin(), slots.end(), 1);
        std::shuffle(slots.begin(), slots.end(), rng);
        Instance inst{n, {}, Regularity::TwoRegular};
        for (auto [a, b] : reqs) inst.requests.push_back({a, b});
        EXPECT_EQ(total_crossings(inst, {slots}), oracle::crossings(reqs, slots));
    }
}

TEST(Classify, NamedConfigurations) {
    // shared endpoints
    EXPECT_EQ(classify_pair({1, 2}, 1, {1, 2}, 2).kind, PairKind::OneOne);
    const auto two_one = classify_pair({1, 2}, 1, {1, 3}, 2);
    EXPECT_EQ(two_one.kind, PairKind::TwoOne);
    EXPECT_EQ(two_one.placed_count, 1);
    EXPECT_EQ(two_one.swapped_count, 2);
    EXPECT_EQ(classify_pair({1, 3}, 1, {2, 3}, 2).kind, PairKind::TwoOne);
    EXPECT_EQ(classify_pair({1, 2}, 1, {2, 3}, 2).kind, PairKind::ThreeZero);
    // disjoint
    EXPECT_EQ(classify_pair({1, 3}, 1, {2, 4}, 2).kind, PairKind::ThreeOne);
    const auto four = classify_pair({1, 2}, 2, {3, 4}, 1);
    EXPECT_EQ(four.kind, PairKind::FourZero);
    EXPECT_EQ(four.placed_count, 4);
    EXPECT_EQ(four.avoidable(), 4);
    EXPECT_EQ(classify_pair({1, 4}, 1, {2, 3}, 2).kind, PairKind::TwoTwo);
}

TEST(Classify, ExhaustiveAndConsistent) {
    std::map<PairKind, std::set<std::pair<int, int>>> seen;
    for (int n = 2; n <= 6; ++n)
        for (int a1 = 1; a1 <= n; ++a1)
            for (int b1 = a1 + 1; b1 <= n; ++b1)
                for (int a2 = 1; a2 <= n; ++a2)
                    for (int b2 = a2 + 1; b2 <= n; ++b2)
                        for (int s1 = 1; s1 <= n; ++s1)
                            for (int s2 = 1; s2 <= n; ++s2) {
                                if (s1 == s2) continue;
                                const auto k = classify_pair({a1, b1}, s1, {a2, b2}, s2);
                                const auto back = classify_pair({a2, b2}, s2, {a1, b1}, s1);
                                EXPECT_EQ(k, back);  // argument order is irrelevant
                                const auto sw = classify_pair({a1, b1}, s2, {a2, b2}, s1);
                                EXPECT_EQ(sw.kind, k.kind);
                                EXPECT_EQ(sw.placed_count, k.swapped_count);
                                EXPECT_EQ(k.unavoidable() + k.avoidable(), k.placed_count);
                                seen[k.kind].insert({std::max(k.placed_count, k.swapped_count),
                                                     std::min(k.placed_count, k.swapped_count)});
                            }
    const std::map<PairKind, std::pair<int, int>> expect{
        {PairKind::OneOne, {1, 1}},   {PairKind::TwoOne, {2, 1}},   {PairKind::ThreeZero, {3, 0}},
        {PairKind::ThreeOne, {3, 1}}, {PairKind::FourZero, {4, 0}}, {PairKind::TwoTwo, {2, 2}}};
    ASSERT_EQ(seen.size(), 6u);
    for (auto [kind, counts] : expect) {
        EXPECT_EQ(seen[kind], (std::set<std::pair<int, int>>{counts})) << to_string(kind);
    }
}

TEST(Classify, MirrorPreservesKind) {
    const int n = 6;
    for (int a1 = 1; a1 <= n; ++a1)
        for (int b1 = a1 + 1; b1 <= n; ++b1)
            for (int a2 = 1; a2 <= n; ++a2)
                for (int b2 = a2 + 1; b2 <= n; ++b2) {
                    const auto k = classify_pair({a1, b1}, 2, {a2, b2}, 5);
                    const auto m = classify_pair({n + 1 - b1, n + 1 - a1}, n + 1 - 2, {n + 1 - b2, n + 1 - a2},
                                                 n + 1 - 5);
                    EXPECT_EQ(k, m);
                }
}

TEST(PairKind, Names) {
    EXPECT_STREQ(to_string(PairKind::OneOne), "1-1");
    EXPECT_STREQ(to_string(PairKind::FourZero), "4-0");
    EXPECT_STREQ(to_string(PairKind::TwoTwo), "2-2");
}

TEST(AvoidableSplit, Values) {
    EXPECT_EQ(avoidable_split(10, 4), (CrossingSplit{4, 6}));
    EXPECT_EQ(avoidable_split(4, 4), (CrossingSplit{4, 0}));
    try {
        avoidable_split(3, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeAvoidable);
    }
}

TEST(Comparable, Cases) {
    EXPECT_TRUE(comparable({1, 2}, {3, 4}));
    EXPECT_TRUE(comparable({1, 3}, {2, 4}));
    EXPECT_TRUE(comparable({3, 4}, {1, 2}));
    EXPECT_FALSE(comparable({1, 4}, {2, 3}));
}

TEST(PairwiseLowerBound, NeverExceedsOracleOpt) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 5;
        const auto reqs = oracle::random_two_regular(n, rng);
        Instance inst{n, {}, Regularity::TwoRegular};
        for (auto [a, b] : reqs) inst.requests.push_back({a, b});
        EXPECT_LE(pairwise_lower_bound(inst), oracle::opt(reqs));
    }
}

TEST(SwapProperty, UninvertingComparablePairNeverHurts) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + trial % 7;
        const auto reqs = oracle::random_two_regular(n, rng);
        Instance inst{n, {}, Regularity::TwoRegular};
        for (auto [a, b] : reqs) inst.requests.push_back({a, b});
        std::vector<int> slots(static_cast<std::size_t>(n));
        std::iota(slots.begin(), slots.end(), 1);
        std::shuffle(slots.begin(), slots.end(), rng);
        std::uniform_int_distribution<int> pick(0, n - 1);
        const auto i = static_cast<std::size_t>(pick(rng));
        const auto j = static_cast<std::size_t>(pick(rng));
        const auto& x = inst.requests[i];
        const auto& y = inst.requests[j];
        if (i == j || !comparable(x, y)) continue;
        const bool x_left = x.a <= y.a && x.b <= y.b;
        const bool inverted = x_left ? slots[i] > slots[j] : slots[j] > slots[i];
        if (!inverted) continue;
        auto fixed = slots;
        std::swap(fixed[i], fixed[j]);
        EXPECT_LE(total_crossings(inst, {fixed}), total_crossings(inst, {slots}));
    }
}
