#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "oscm/adversaries.hpp"
#include "oscm/crossings.hpp"
#include "oscm/harness.hpp"
#include "oscm/offline.hpp"

using namespace oscm;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an oscm::Error";
    return ErrorCode::InvalidArgument;
}

std::int64_t oracle_total(const PlacementState& st) {
    std::vector<oracle::Pair> reqs;
    std::vector<int> slots;
    for (const auto& [s, r] : st.placed()) {
        reqs.emplace_back(r.a, r.b);
        slots.push_back(s);
    }
    return oracle::crossings(reqs, slots);
}

} // namespace

TEST(Thm1, PathThenFarEnd) {
    Thm1Adversary adv(10);
    const auto t = play(adv, scripted_algorithm({1, 2, 3, 4, 6, 7, 8, 9, 10, 5}));
    ASSERT_EQ(t.steps.size(), 10u);
    for (int i = 0; i < 9; ++i) EXPECT_EQ(t.steps[static_cast<std::size_t>(i)].request, (Request{i + 1, i + 2}));
    EXPECT_EQ(t.steps.back().request, (Request{9, 10}));
    EXPECT_EQ(t.steps.back().slot, 5);
    const auto alg = oracle_total(t.final_state);
    EXPECT_EQ(alg, 16);  // 4+4+4 over s6..s8, 3 over s9, 1 over s10
    EXPECT_GE(alg, 2 * 2 * (10 / 2 - 1));
}

TEST(Thm1, FirstFitGetsLeftEnd) {
    Thm1Adversary adv(10);
    const auto t = play(adv, first_fit_algorithm());
    EXPECT_EQ(t.steps.back().request, (Request{1, 2}));
    EXPECT_EQ(t.steps.back().slot, 10);
    BruteForceOptions o;
    o.max_n = 10;
    EXPECT_EQ(brute_force_opt(t.instance(), o).opt_crossings, 1);
    EXPECT_GT(oracle_total(t.final_state), 1);
}

TEST(Thm1, FinalRequestSide) {
    Thm1Adversary adv(9);
    EXPECT_EQ(adv.final_request(5), (Request{8, 9}));
    EXPECT_EQ(adv.final_request(6), (Request{1, 2}));
    EXPECT_EQ(code_of([] { Thm1Adversary bad(3); }), ErrorCode::InvalidArgument);
}

TEST(Thm1, ProtocolErrors) {
    Thm1Adversary adv(4);
    Trace wrong;
    wrong.n = 4;
    wrong.final_state = PlacementState(4);
    PlacementState next;
    wrong.steps.push_back(make_step(wrong.final_state, {2, 3}, 1, next));
    wrong.final_state = next;
    EXPECT_EQ(code_of([&] { adv.next(wrong); }), ErrorCode::Protocol);
}

TEST(Thm2, ProbeThenCaseBlocks) {
    // Probe on s1 forces the left case.
    Thm2Adversary left(1);
    Trace t;
    t.n = left.n();
    t.final_state = PlacementState(t.n);
    auto step = [&](Slot s) {
        const auto r = left.next(t);
        ASSERT_TRUE(r.has_value());
        PlacementState next;
        t.steps.push_back(make_step(t.final_state, *r, s, next));
        t.final_state = next;
    };
    step(1);
    EXPECT_EQ(t.steps[0].request, (Request{3, 4}));
    step(2);
    step(3);
    step(4);
    EXPECT_EQ(t.steps[1].request, (Request{1, 2}));
    EXPECT_EQ(t.steps[2].request, (Request{2, 4}));
    EXPECT_EQ(t.steps[3].request, (Request{1, 3}));
    ASSERT_FALSE(left.blocks().empty());
    EXPECT_EQ(left.blocks().front().kind, RoundCase::Left);
    EXPECT_EQ(left.blocks().front().size, 4u);

    Thm2Adversary right(1);
    const auto tr = play(right, scripted_algorithm({5, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11}));
    EXPECT_EQ(right.blocks().front().kind, RoundCase::Right);
    EXPECT_EQ(tr.steps[1].request, (Request{4, 5}));
    EXPECT_EQ(tr.steps[2].request, (Request{3, 5}));
    EXPECT_EQ(tr.steps[3].request, (Request{1, 2}));
    EXPECT_EQ(tr.steps[4].request, (Request{1, 2}));
}

TEST(Thm2, CompletesTwoRegularInstances) {
    for (int rounds = 1; rounds <= 6; ++rounds) {
        for (const auto& name : algorithm_names()) {
            Thm2Adversary adv(rounds);
            const auto t = play(adv, algorithm_by_name(name));
            auto inst = t.instance();
            EXPECT_EQ(inst.n, Thm2Adversary::slots_for_rounds(rounds));
            EXPECT_EQ(inst.regularity, Regularity::TwoRegular);
            EXPECT_TRUE(is_valid(inst)) << name << " rounds=" << rounds;
            EXPECT_TRUE(t.final_state.full());
        }
    }
    EXPECT_EQ(code_of([] { Thm2Adversary bad(0); }), ErrorCode::InvalidArgument);
}

TEST(Thm2, RandomResponsesStayValid) {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        Thm2Adversary adv(1 + trial % 4);
        OnlineAlgorithm random_alg{"random", [&](const PlacementState& st, const Request&) {
                                       const auto f = free_slots(st);
                                       return f[std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng)];
                                   }};
        const auto t = play(adv, random_alg);
        EXPECT_TRUE(is_valid(t.instance()));
    }
}

TEST(Thm2, StepMismatchIsProtocolError) {
    Thm2Adversary adv(1);
    Trace t;
    t.n = adv.n();
    t.final_state = PlacementState(t.n);
    ASSERT_TRUE(adv.next(t).has_value());
    EXPECT_EQ(code_of([&] { adv.next(t); }), ErrorCode::Protocol);
}

TEST(EndgameFill, ChainAndFallback) {
    EXPECT_TRUE(endgame_fill({}, 0).empty());
    EXPECT_EQ(endgame_fill({1, 2, 3, 4}, 2), (std::vector<Request>{{2, 3}, {1, 4}}));
    // Chain would pair 2 with 2; the shifted pairing avoids it.
    EXPECT_EQ(endgame_fill({1, 2, 2, 3}, 2), (std::vector<Request>{{1, 2}, {2, 3}}));
    EXPECT_EQ(code_of([] { endgame_fill({1, 1}, 1); }), ErrorCode::Infeasible);
    EXPECT_EQ(code_of([] { endgame_fill({1, 2, 3}, 2); }), ErrorCode::Infeasible);
    EXPECT_EQ(code_of([] { endgame_fill(std::vector<Vertex>(14, 1), 7); }), ErrorCode::InvalidArgument);
}

TEST(EndgameFill, EveryOutputCompletesTheDegrees) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t r = 1 + static_cast<std::size_t>(trial % 6);
        std::vector<Vertex> tokens;
        for (Vertex v = 1; tokens.size() < 2 * r; ++v) {
            const int copies = (r == 1 || rng() % 3 == 0 || tokens.size() + 2 > 2 * r) ? 1 : 2;
            for (int c = 0; c < copies; ++c) tokens.push_back(v);
        }
        try {
            const auto out = endgame_fill(tokens, r);
            ASSERT_EQ(out.size(), r);
            std::vector<Vertex> used;
            for (const auto& q : out) {
                EXPECT_LT(q.a, q.b);
                used.insert(used.end(), {q.a, q.b});
            }
            std::sort(used.begin(), used.end());
            EXPECT_EQ(used, tokens);
        } catch (const Error& e) {
            ADD_FAILURE() << "tokens of size " << tokens.size() << ": " << e.what();
        }
    }
}

TEST(Fig8, ShapeAndOptimum) {
    const auto inst = fig8_instance(4);
    EXPECT_EQ(inst.requests, (std::vector<Request>{{3, 4}, {3, 4}, {1, 2}, {1, 2}}));
    for (int n : {4, 6, 8}) {
        const auto f = fig8_instance(n);
        EXPECT_TRUE(is_valid(f));
        EXPECT_EQ(brute_force_opt(f).opt_crossings, n / 2);
    }
    EXPECT_EQ(code_of([] { fig8_instance(5); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { fig8_instance(2); }), ErrorCode::InvalidArgument);
}

TEST(Fig8, BarycenterPushesLastPairRight) {
    const auto t = play(fig8_instance(4), barycenter_algorithm());
    EXPECT_EQ(t.steps.back().slot, 4);
}

TEST(BlockInstance, RelabelsByRank) {
    const auto inst = block_instance({{7, 9}, {3, 7}, {3, 12}});
    EXPECT_EQ(inst.requests, (std::vector<Request>{{2, 3}, {1, 2}, {1, 4}}));
    EXPECT_EQ(inst.n, 4);
    EXPECT_EQ(inst.regularity, Regularity::General);
}

TEST(Thm1, OddLayoutMeetsFloorBound) {
    // n = 9, path crossing-free around an open s5, either end pair dropped into s5.
    for (Request last : {Request{1, 2}, Request{8, 9}}) {
        Instance inst{9, {}, Regularity::General};
        for (int i = 1; i <= 8; ++i) inst.requests.push_back({i, i + 1});
        inst.requests.push_back(last);
        const Assignment asg{{1, 2, 3, 4, 6, 7, 8, 9, 5}};
        EXPECT_EQ(total_crossings(inst, asg), 2 * 2 * (9 / 2 - 1));
        EXPECT_EQ(brute_force_opt(inst).opt_crossings, 1);
    }
}
