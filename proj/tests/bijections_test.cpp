#include <gtest/gtest.h>

#include <set>

#include "treemate/bijections.hpp"
#include "treemate/map_io.hpp"

using namespace treemate;

// --------------------------------------------------------------------- rY

TEST(Ry, LengthFourImages) {
    auto ry = StepAlphabet::family("rY");
    auto walks = enumerate_walks(ry, 4, {0, 0}, {0, 0});
    ASSERT_EQ(walks.size(), 2u);
    std::set<std::string> codes;
    for (const Walk& w : walks) {
        SpanningTreeMap m = ry_forward(w);
        EXPECT_TRUE(m.is_special());
        EXPECT_EQ(m.map.vertex_count(), 2); // 2n vertices
        EXPECT_EQ(m.map.edge_count(), 3);   // 3n edges
        EXPECT_EQ(m.tree_edges.size(), 1u); // 2n-1
        EXPECT_EQ(ry_inverse(m).steps, w.steps);
        codes.insert(m.canonical_string());
    }
    EXPECT_EQ(codes.size(), 2u);
}

TEST(Ry, CubicSizesAtLengthEight) {
    auto ry = StepAlphabet::family("rY");
    for (const Walk& w : enumerate_walks(ry, 8, {0, 0}, {0, 0})) {
        SpanningTreeMap m = ry_forward(w);
        EXPECT_EQ(m.map.vertex_count(), 4);
        EXPECT_EQ(m.map.edge_count(), 6);
        for (int v = 0; v < m.map.vertex_count(); ++v) EXPECT_EQ(m.map.degree_of_vertex(v), 3);
        EXPECT_EQ(ry_inverse(m).steps, w.steps);
    }
}

TEST(Ry, ExtendedEndpoint) {
    auto ry = StepAlphabet::family("rY");
    auto to_origin = enumerate_walks(ry, 4, {0, 0}, {0, 0});
    auto to_two = enumerate_walks(ry, 4, {0, 0}, {2, 0});
    EXPECT_EQ(to_origin.size() + to_two.size(), 4u); // C2 * C2
    for (const Walk& w : to_two) {
        SpanningTreeMap m = ry_forward(w);
        EXPECT_FALSE(m.is_special());
        EXPECT_EQ(ry_inverse(m).steps, w.steps);
    }
}

TEST(Ry, Errors) {
    auto ry = StepAlphabet::family("rY");
    Walk bad_end{ry, {0, 0}, {{0, 1}, {1, -1}}}; // ends at (1,0)
    EXPECT_THROW(ry_forward(bad_end), Error);
    Walk not_confined{ry, {0, 0}, {{1, -1}}};
    EXPECT_THROW(ry_forward(not_confined), Error);
    // inverse rejects a broken tree decoration
    Walk w{ry, {0, 0}, {{0, 1}, {0, 1}, {1, -1}, {-1, -1}}};
    SpanningTreeMap m = ry_forward(w);
    m.tree_edges.clear();
    EXPECT_THROW(ry_inverse(m), Error);
}

// ------------------------------------------------------------- Lukasiewicz

TEST(Lukasiewicz, QuarticCounts) {
    auto quartic = StepAlphabet::family("quartic");
    EXPECT_EQ(enumerate_walks(quartic, 3, {0, 0}, {0, 0}).size(), 1u);
    EXPECT_EQ(enumerate_walks(quartic, 6, {0, 0}, {0, 0}).size(), 6u);
}

TEST(Lukasiewicz, UniqueQuarticWalk) {
    auto quartic = StepAlphabet::family("quartic");
    auto walks = enumerate_walks(quartic, 3, {0, 0}, {0, 0});
    ASSERT_EQ(walks.size(), 1u);
    EXPECT_EQ(walks[0].steps, (std::vector<Step>{{0, 2}, {1, -1}, {-1, -1}}));
    SpanningTreeMap m = lukasiewicz_forward(walks[0]);
    EXPECT_EQ(m.map.vertex_count(), 1);
    EXPECT_EQ(m.map.degree_of_vertex(0), 4);
    EXPECT_EQ(lukasiewicz_inverse(m, quartic).steps, walks[0].steps);
}

TEST(Lukasiewicz, DegreeLawWithZeroSteps) {
    auto luk = StepAlphabet::family("lukasiewicz", 3);
    for (int len = 1; len <= 5; ++len) {
        for (const Walk& w : enumerate_walks(luk, len, {0, 0}, {0, 0})) {
            SpanningTreeMap m = lukasiewicz_forward(w);
            std::multiset<int> want, got;
            for (const Step& s : w.steps)
                if (s.dx == 0) want.insert(s.dy + 2);
            for (int v = 0; v < m.map.vertex_count(); ++v) got.insert(m.map.degree_of_vertex(v));
            EXPECT_EQ(want, got) << format_walk_text(w);
            EXPECT_EQ(lukasiewicz_inverse(m, luk).steps, w.steps);
        }
    }
}

// ------------------------------------------------------------------ Mullin

TEST(Mullin, LengthTwoImages) {
    auto straight = StepAlphabet::family("straight");
    auto walks = enumerate_walks(straight, 2, {0, 0}, {0, 0});
    ASSERT_EQ(walks.size(), 2u);
    std::set<std::string> images;
    for (const Walk& w : walks) {
        DecoratedMap dm = mullin_map(w);
        ASSERT_TRUE(dm.hamiltonian.has_value());
        EXPECT_TRUE(validate_hamiltonian(dm.map, *dm.hamiltonian));
        EXPECT_EQ(mullin_walk(dm).steps, w.steps);
        images.insert(canonical_decorated_string(dm));
    }
    EXPECT_EQ(images.size(), 2u);
}

TEST(Mullin, RoundTripLengthFour) {
    auto straight = StepAlphabet::family("straight");
    for (const Walk& w : enumerate_walks(straight, 4, {0, 0}, {0, 0})) {
        DecoratedMap dm = mullin_map(w);
        EXPECT_EQ(dm.map.face_count(), 4); // walk length = number of faces
        EXPECT_EQ(mullin_walk(dm).steps, w.steps);
    }
}

TEST(Mullin, Errors) {
    auto straight = StepAlphabet::family("straight");
    Walk open{straight, {0, 0}, {{1, 0}}};
    EXPECT_THROW(mullin_map(open), Error);
    Walk w{straight, {0, 0}, {{1, 0}, {-1, 0}}};
    DecoratedMap dm = mullin_map(w);
    dm.hamiltonian.reset();
    EXPECT_THROW(mullin_walk(dm), Error);
}

// ---------------------------------------------------------------- Kreweras

TEST(Kreweras, PaperWalk) {
    Walk w = parse_walk_text("aabbccbac", StepAlphabet::family("kreweras"));
    KrewerasResult r = kreweras_forward(w);
    EXPECT_TRUE(is_loopless(r.mated.map));
    EXPECT_EQ(r.dual_tree.size(), 5u); // 2n-1 with n = 3
    EXPECT_TRUE(validate_spanning_tree(r.mated.map.dual(), r.dual_tree));
    EXPECT_EQ(r.cubic_canonical(), bernardi_grow(w).canonical());
}

TEST(Kreweras, LengthThreeImages) {
    auto kre = StepAlphabet::family("kreweras");
    auto walks = enumerate_walks(kre, 3, {0, 0}, {0, 0});
    ASSERT_EQ(walks.size(), 2u);
    std::set<std::string> codes;
    for (const Walk& w : walks) codes.insert(kreweras_forward(w).cubic_canonical());
    EXPECT_EQ(codes.size(), 2u);
}

TEST(Kreweras, BernardiEquivalenceLengthSix) {
    auto kre = StepAlphabet::family("kreweras");
    for (const Walk& w : enumerate_walks(kre, 6, {0, 0}, {0, 0})) {
        EXPECT_EQ(kreweras_forward(w).cubic_canonical(), bernardi_grow(w).canonical())
            << w.letter_word();
        EXPECT_TRUE(is_loopless(kreweras_forward(w).mated.map));
    }
}

TEST(Kreweras, Errors) {
    auto kre = StepAlphabet::family("kreweras");
    EXPECT_THROW(kreweras_forward(parse_walk_text("ab", kre)), Error);  // length not 3n
    EXPECT_THROW(kreweras_forward(parse_walk_text("cba", kre)), Error); // leaves the quadrant
    EXPECT_THROW(bernardi_grow(parse_walk_text("cba", kre)), Error);
}

// ------------------------------------------------------------------ Tandem

TEST(Tandem, PrographAbc) {
    Walk w = parse_walk_text("abc", StepAlphabet::family("tandem"));
    Prograph p = tandem_to_prograph(w);
    EXPECT_EQ(p.map.vertex_count(), 2);
    int coproducts = 0, products = 0;
    for (char t : p.vertex_type) (t == 'c' ? coproducts : products)++;
    EXPECT_EQ(coproducts, 1);
    EXPECT_EQ(products, 1);
    EXPECT_TRUE(validate_prograph(p));
    EXPECT_EQ(prograph_to_tandem(p).steps, w.steps);
}

TEST(Tandem, PrographAbacbc) {
    Walk w = parse_walk_text("abacbc", StepAlphabet::family("tandem"));
    Prograph p = tandem_to_prograph(w);
    int coproducts = 0, products = 0;
    for (char t : p.vertex_type) (t == 'c' ? coproducts : products)++;
    EXPECT_EQ(coproducts, 2);
    EXPECT_EQ(products, 2);
    EXPECT_EQ(prograph_to_tandem(p).steps, w.steps);
}

TEST(Tandem, SytPaperExample) {
    Walk w = parse_walk_text("abacbc", StepAlphabet::family("tandem"));
    YoungTableau3 t = tandem_to_syt(w);
    EXPECT_EQ(t.rows[0], (std::vector<int>{1, 3}));
    EXPECT_EQ(t.rows[1], (std::vector<int>{2, 5}));
    EXPECT_EQ(t.rows[2], (std::vector<int>{4, 6}));
    EXPECT_TRUE(t.valid());
    EXPECT_EQ(syt_to_tandem(t).steps, w.steps);
}

TEST(Tandem, SytSmallest) {
    Walk w = parse_walk_text("abc", StepAlphabet::family("tandem"));
    YoungTableau3 t = tandem_to_syt(w);
    EXPECT_EQ(t.rows[0], (std::vector<int>{1}));
    EXPECT_EQ(t.rows[1], (std::vector<int>{2}));
    EXPECT_EQ(t.rows[2], (std::vector<int>{3}));
}

TEST(Tandem, SytRejectsBadTableau) {
    YoungTableau3 bad{{std::vector<int>{2, 3}, {1, 5}, {4, 6}}}; // column 1 not increasing
    EXPECT_FALSE(bad.valid());
    EXPECT_THROW(syt_to_tandem(bad), Error);
    YoungTableau3 ragged{{std::vector<int>{1, 2}, {3}, {4}}};
    EXPECT_FALSE(ragged.valid());
}

TEST(Tandem, TableauTextRoundTrip) {
    Walk w = parse_walk_text("abacbc", StepAlphabet::family("tandem"));
    YoungTableau3 t = tandem_to_syt(w);
    EXPECT_EQ(YoungTableau3::parse(t.to_string()), t);
}

TEST(Tandem, RyCompatibility) {
    // replacing c = (-1,0) by (0,1),(-1,-1) gives an rY-walk with the same
    // mated map
    auto tan = StepAlphabet::family("tandem");
    auto ry = StepAlphabet::family("rY");
    for (int len : {3, 6, 9}) {
        for (const Walk& w : enumerate_walks(tan, len, {0, 0}, {0, 0})) {
            std::vector<Step> expanded;
            for (const Step& s : w.steps) {
                if (s == Step{-1, 0}) {
                    expanded.push_back({0, 1});
                    expanded.push_back({-1, -1});
                } else {
                    expanded.push_back(s);
                }
            }
            Walk rw{ry, {0, 0}, expanded};
            MatedMap a = mate(w, ContractionRule::identify_uz(), {});
            MatedMap b = mate(rw, ContractionRule::identify_uz(), {});
            EXPECT_EQ(a.map.canonical_code(), b.map.canonical_code()) << w.letter_word();
        }
    }
}

// -------------------------------------------------------------------- KMSW

TEST(Kmsw, SingleStep) {
    auto kmsw = StepAlphabet::family("kmsw", 3);
    Walk w = parse_walk_text("(1,-1) @ (0,1)", kmsw);
    BipolarMap b = kmsw_to_bipolar(w);
    EXPECT_TRUE(validate_bipolar(b).ok());
    EXPECT_TRUE(internal_face_degrees(b).empty());
}

TEST(Kmsw, QuadFaceForMinusOnePlusOne) {
    auto kmsw = StepAlphabet::family("kmsw", 3);
    Walk w = parse_walk_text("(0,1);(1,-1);(-1,1);(1,-1)", kmsw);
    ASSERT_TRUE(is_confined(w));
    ASSERT_EQ(w.end(), (Point{1, 0}));
    BipolarMap b = kmsw_to_bipolar(w);
    EXPECT_TRUE(validate_bipolar(b).ok());
    EXPECT_EQ(internal_face_degrees(b), (std::vector<int>{3, 4}));
}

TEST(Kmsw, RejectsBadSteps) {
    auto small = StepAlphabet::family("small");
    Walk w{small, {0, 1}, {{1, 1}}};
    EXPECT_THROW(kmsw_to_bipolar(w), Error);
    Walk bad_start{small, {1, 1}, {{1, -1}}};
    EXPECT_THROW(kmsw_to_bipolar(bad_start), Error);
}

// ---------------------------------------------------------------- Schnyder

TEST(Schnyder, SmallestWord) {
    Walk w = parse_walk_text("a", StepAlphabet::family("schnyder"));
    SchnyderWood wood = tandem_to_schnyder(w);
    std::string why;
    EXPECT_TRUE(validate_schnyder(wood, &why)) << why;
    EXPECT_EQ(schnyder_to_tandem(wood).steps, w.steps);
}

TEST(Schnyder, LetterBalance) {
    auto sch = StepAlphabet::family("schnyder");
    for (int len : {4, 7}) {
        for (const Walk& w : enumerate_walks(sch, len, {0, 0}, {1, 0})) {
            std::string word = w.letter_word();
            long a = std::count(word.begin(), word.end(), 'a');
            long b = std::count(word.begin(), word.end(), 'b');
            long c = std::count(word.begin(), word.end(), 'c');
            EXPECT_EQ(a, b + 1);
            EXPECT_EQ(b, c);
        }
    }
}

TEST(Schnyder, PaperWordRoundTrip) {
    Walk w = parse_walk_text("aabbacabaccabacbbaacbbbacccc", StepAlphabet::family("schnyder"));
    SchnyderWood wood = tandem_to_schnyder(w);
    std::string why;
    EXPECT_TRUE(validate_schnyder(wood, &why)) << why;
    EXPECT_EQ(schnyder_to_tandem(wood).letter_word(), "aabbacabaccabacbbaacbbbacccc");
}

TEST(Schnyder, Errors) {
    auto sch = StepAlphabet::family("schnyder");
    Walk wrong_end{sch, {0, 0}, {{1, 0}, {1, 0}}};
    EXPECT_THROW(tandem_to_schnyder(wrong_end), Error);
    // bc pattern never enumerates, but hand-built walks are rejected too
    Walk bc{sch, {0, 0}, {{1, 0}, {1, 0}, {-1, 1}, {0, -1}}};
    EXPECT_THROW(tandem_to_schnyder(bc), Error);
}

TEST(Schnyder, WoodSerializationRoundTrip) {
    Walk w = parse_walk_text("abac", StepAlphabet::family("schnyder"));
    SchnyderWood wood = tandem_to_schnyder(w);
    DecoratedMap dm = wood.decorated();
    DecoratedMap back = parse_map(serialize_map(dm));
    SchnyderWood wood2{back.map, back.colors, back.orientation};
    std::string why;
    EXPECT_TRUE(validate_schnyder(wood2, &why)) << why;
    EXPECT_EQ(schnyder_to_tandem(wood2).steps, w.steps);
}
