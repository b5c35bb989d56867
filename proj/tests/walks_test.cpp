#include <gtest/gtest.h>

#include "treemate/walks.hpp"

using namespace treemate;

TEST(StepAlphabet, NamedFamilies) {
    auto kre = StepAlphabet::family("kreweras");
    ASSERT_EQ(kre->size(), 3u);
    EXPECT_EQ(kre->step_at(0), (Step{1, 0}));
    EXPECT_EQ(kre->step_at(1), (Step{0, 1}));
    EXPECT_EQ(kre->step_at(2), (Step{-1, -1}));
    EXPECT_EQ(kre->letters(), "abc");

    auto ry = StepAlphabet::family("rY");
    EXPECT_EQ(ry->steps()[0], (Step{0, 1}));
    EXPECT_EQ(ry->steps()[1], (Step{-1, -1}));
    EXPECT_EQ(ry->steps()[2], (Step{1, -1}));

    auto tan = StepAlphabet::family("tandem");
    EXPECT_EQ(tan->step_at(0), (Step{0, 1}));
    EXPECT_EQ(tan->step_at(1), (Step{1, -1}));
    EXPECT_EQ(tan->step_at(2), (Step{-1, 0}));

    EXPECT_THROW(StepAlphabet::family("nonsense"), Error);
    EXPECT_THROW(StepAlphabet::family("lukasiewicz"), Error); // bound required
    EXPECT_THROW(StepAlphabet::family("kmsw"), Error);
}

TEST(StepAlphabet, SchnyderForbidsBc) {
    auto sch = StepAlphabet::family("schnyder");
    int b = *sch->index_of_letter('b');
    int c = *sch->index_of_letter('c');
    EXPECT_FALSE(sch->pair_allowed(b, c));
    EXPECT_TRUE(sch->pair_allowed(c, b));
    EXPECT_TRUE(sch->pair_allowed(b, b));
}

TEST(StepAlphabet, LukasiewiczAdmitsZeroStep) {
    auto luk = StepAlphabet::family("lukasiewicz", 2);
    EXPECT_TRUE(luk->admits_zero_step());
    EXPECT_TRUE(luk->index_of({0, 2}).has_value());
    EXPECT_FALSE(StepAlphabet::family("rY")->admits_zero_step());
}

TEST(Confinement, TwelveStepExample) {
    auto small = StepAlphabet::family("small");
    Walk w = parse_walk_text(
        "(1,0);(0,1);(-1,1);(1,0);(0,-1);(1,0);(0,-1);(0,1);(-1,0);(-1,0);(1,0);(-1,-1)", small);
    EXPECT_TRUE(is_confined(w));
    EXPECT_EQ(w.end(), (Point{0, 0}));
}

TEST(Confinement, LeavesQuadrant) {
    auto small = StepAlphabet::family("small");
    Walk w{small, {0, 0}, {{-1, 0}}};
    EXPECT_FALSE(is_confined(w));
}

TEST(Confinement, EmptyWalk) {
    auto small = StepAlphabet::family("small");
    EXPECT_TRUE(is_confined(Walk{small, {0, 0}, {}}));
}

TEST(Enumerate, RyLengthFour) {
    auto ry = StepAlphabet::family("rY");
    auto walks = enumerate_walks(ry, 4, {0, 0}, {0, 0});
    ASSERT_EQ(walks.size(), 2u);
    EXPECT_EQ(walks[0].steps, (std::vector<Step>{{0, 1}, {0, 1}, {1, -1}, {-1, -1}}));
    EXPECT_EQ(walks[1].steps, (std::vector<Step>{{0, 1}, {1, -1}, {0, 1}, {-1, -1}}));
}

TEST(Enumerate, LengthZero) {
    auto tan = StepAlphabet::family("tandem");
    auto walks = enumerate_walks(tan, 0, {2, 3}, {2, 3});
    ASSERT_EQ(walks.size(), 1u);
    EXPECT_TRUE(walks[0].steps.empty());
}

TEST(Enumerate, TandemLengthSix) {
    auto tan = StepAlphabet::family("tandem");
    EXPECT_EQ(enumerate_walks(tan, 6, {0, 0}, {0, 0}).size(), 5u);
}

TEST(Count, MatchesEnumeration) {
    for (const char* name : {"straight", "rY", "kreweras", "tandem", "schnyder"}) {
        auto a = StepAlphabet::family(name);
        for (int len = 0; len <= 7; ++len) {
            auto walks = enumerate_walks(a, len, {0, 0}, {0, 0});
            EXPECT_EQ(count_walks(a, len, {0, 0}, {0, 0}), BigInt(walks.size()))
                << name << " length " << len;
        }
    }
}

TEST(Count, BoundedFamiliesMatchEnumeration) {
    for (int bound : {2, 3}) {
        auto luk = StepAlphabet::family("lukasiewicz", bound);
        auto kmsw = StepAlphabet::family("kmsw", bound);
        for (int len = 0; len <= 5; ++len) {
            EXPECT_EQ(count_walks(luk, len, {0, 0}, {0, 0}),
                      BigInt(enumerate_walks(luk, len, {0, 0}, {0, 0}).size()));
            EXPECT_EQ(count_walks(kmsw, len, {0, 1}, {1, 0}),
                      BigInt(enumerate_walks(kmsw, len, {0, 1}, {1, 0}).size()));
        }
    }
}

TEST(Count, SpotValues) {
    EXPECT_EQ(count_walks(StepAlphabet::family("tandem"), 9, {0, 0}, {0, 0}), BigInt(42));
    EXPECT_EQ(count_walks(StepAlphabet::family("straight"), 1, {0, 0}, {0, 0}), BigInt(0));
    EXPECT_EQ(count_walks(StepAlphabet::family("straight"), 2, {0, 0}, {0, 0}), BigInt(2));
}

TEST(Reflect, SwapsCoordinates) {
    auto small = StepAlphabet::family("small");
    Walk w{small, {2, 5}, {{1, 0}, {0, -1}}};
    Walk r = reflect_diagonal(w);
    EXPECT_EQ(r.start, (Point{5, 2}));
    EXPECT_EQ(r.steps, (std::vector<Step>{{0, 1}, {-1, 0}}));
}

TEST(Reflect, Involution) {
    auto tan = StepAlphabet::family("tandem");
    for (const Walk& w : enumerate_walks(tan, 6, {0, 0}, {0, 0})) {
        Walk rr = reflect_diagonal(reflect_diagonal(w));
        EXPECT_EQ(rr, w); // alphabet pointer restored through the cache
        EXPECT_TRUE(is_confined(reflect_diagonal(w)));
        Point e = w.end(), re = reflect_diagonal(w).end();
        EXPECT_EQ(re, (Point{e.y, e.x}));
    }
}

TEST(Reflect, TandemConventionBridge) {
    auto tan = StepAlphabet::family("tandem");
    Walk w = parse_walk_text("abacbc", tan);
    Walk r = reflect_diagonal(w);
    auto sch = StepAlphabet::family("schnyder");
    for (std::size_t i = 0; i < r.steps.size(); ++i)
        EXPECT_TRUE(sch->index_of(r.steps[i]).has_value());
    EXPECT_EQ(r.letter_word(), "abacbc"); // letters survive the reflection
}

TEST(ExpandStep, UnitExpansion) {
    auto e34 = expand_step({3, 4});
    ASSERT_EQ(e34.size(), 7u);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(e34[static_cast<std::size_t>(i)], (Step{1, 0}));
    for (int i = 3; i < 7; ++i) EXPECT_EQ(e34[static_cast<std::size_t>(i)], (Step{0, 1}));
    EXPECT_EQ(expand_step({1, 0}), (std::vector<Step>{{1, 0}}));
    auto em21 = expand_step({-2, 1});
    EXPECT_EQ(em21, (std::vector<Step>{{-1, 0}, {-1, 0}, {0, 1}}));
}

TEST(WalkText, LetterForm) {
    auto kre = StepAlphabet::family("kreweras");
    Walk w = parse_walk_text("aabbccbac", kre);
    ASSERT_EQ(w.size(), 9u);
    EXPECT_EQ(w.steps[0], (Step{1, 0}));
    EXPECT_EQ(w.steps[4], (Step{-1, -1}));
    EXPECT_EQ(format_walk_text(w), "aabbccbac");
}

TEST(WalkText, TokenForm) {
    auto small = StepAlphabet::family("small");
    Walk w = parse_walk_text("(1,0);(0,1);(-1,1)", small);
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w.steps[2], (Step{-1, 1}));
    EXPECT_EQ(format_walk_text(w), "(1,0);(0,1);(-1,1)");
}

TEST(WalkText, StartSuffix) {
    auto kmsw = StepAlphabet::family("kmsw", 3);
    Walk w = parse_walk_text("(1,-1) @ (0,1)", kmsw);
    EXPECT_EQ(w.start, (Point{0, 1}));
    EXPECT_EQ(format_walk_text(w), "(1,-1) @ (0,1)");
}

TEST(WalkText, UnknownLetterColumn) {
    auto kre = StepAlphabet::family("kreweras");
    try {
        parse_walk_text("abx", kre);
        FAIL() << "expected a parse error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("column 3"), std::string::npos);
    }
}

TEST(WalkText, StepOutsideAlphabet) {
    auto kre = StepAlphabet::family("kreweras");
    EXPECT_THROW(parse_walk_text("(1,1)", kre), Error);
}

TEST(Enumerate, ParallelMatchesSequential) {
    for (const char* name : {"rY", "kreweras", "tandem"}) {
        auto a = StepAlphabet::family(name);
        for (int len : {4, 6}) {
            auto seq = enumerate_walks(a, len, {0, 0}, {0, 0});
            auto par = enumerate_walks_parallel(a, len, {0, 0}, {0, 0});
            EXPECT_EQ(seq, par) << name << " length " << len;
        }
    }
}
