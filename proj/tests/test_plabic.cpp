#include <doctest.h>

#include <algorithm>
#include <random>

#include "postnikov/plabic.hpp"

using namespace postnikov;
using Color = PlabicGraph::Color;
constexpr Color B = Color::Black;
constexpr Color W = Color::White;

namespace {

// The second worked (3,6) diagram, window [4,6,5,7,8,9]: ten trivalent
// internal vertices a..j with clockwise rotations read off the drawing.
PlabicGraph example_36() {
    // indices: a0 b1 c2 d3 e4 f5 g6 h7 i8 j9
    return PlabicGraph::from_neighbors(
        6, {W, B, W, B, B, W, B, W, B, W},
        {
            {-1, 1, 4},   // a: boundary1, b, e
            {-2, 5, 0},   // b: boundary2, f, a
            {-3, 3, 6},   // c: boundary3, d, g
            {-4, 7, 2},   // d: boundary4, h, c
            {0, 5, 9},    // e: a, f, j
            {1, 6, 4},    // f: b, g, e
            {2, 7, 5},    // g: c, h, f
            {6, 3, 8},    // h: g, d, i
            {-5, 9, 7},   // i: boundary5, j, h
            {-6, 4, 8},   // j: boundary6, e, i
        });
}

// The rigid example: nine boundary points, three internal hexagonal faces.
PlabicGraph example_rigid() {
    // indices: 1v..9v = 0..8, a=9, b=10, c=11, d=12
    return PlabicGraph::from_neighbors(
        9, {B, W, B, B, W, B, B, W, B, W, W, W, B},
        {
            {-1, 1, 11},  // 1v
            {-2, 2, 0},   // 2v
            {-3, 9, 1},   // 3v
            {-4, 4, 9},   // 4v
            {-5, 5, 3},   // 5v
            {-6, 10, 4},  // 6v
            {-7, 7, 10},  // 7v
            {-8, 8, 6},   // 8v
            {-9, 11, 7},  // 9v
            {2, 3, 12},   // a
            {5, 6, 12},   // b
            {8, 0, 12},   // c
            {9, 10, 11},  // d
        });
}

std::set<int> label_of(const PlabicGraph& g, const std::string& id) {
    for (const auto& f : g.faces())
        if (f.id == id) return f.label;
    FAIL("no face ", id);
    return {};
}

std::vector<std::pair<std::string, std::string>> arrow_pairs(const IceQuiver& q) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& a : q.arrows())
        for (int rep = 0; rep < a.mult; ++rep) out.emplace_back(a.from, a.to);
    return out;
}

}  // namespace

TEST_CASE("lollipops") {
    const auto white = PlabicGraph::lollipop(W);
    white.check_valid();
    const auto t = white.trip(1);
    CHECK(t.end == 1);
    CHECK(t.lollipop == W);
    CHECK(white.trip_permutation().window() == std::vector<int>{1});
    const auto fs = white.faces();
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].boundary);
    CHECK(fs[0].label.empty());

    const auto black = PlabicGraph::lollipop(B);
    CHECK(black.trip_permutation().window() == std::vector<int>{2});
    REQUIRE(black.faces().size() == 1);
    CHECK(black.faces()[0].label == std::set<int>{1});
}

TEST_CASE("type (1,2) bridge graph") {
    const auto g = PlabicGraph::from_neighbors(2, {W, B}, {{-1, 1}, {0, -2}});
    CHECK(g.trip_permutation().window() == std::vector<int>{2, 3});
    const auto fs = g.faces();
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].label.size() == 1);
    CHECK(fs[1].label.size() == 1);
    CHECK(fs[0].label != fs[1].label);
}

TEST_CASE("worked (3,6) diagram: trips") {
    const auto g = example_36();
    g.check_valid();
    CHECK(g.trip(1).end == 4);
    CHECK(g.trip(2).end == 6);
    CHECK(g.trip(3).end == 5);
    CHECK(g.trip(4).end == 1);
    CHECK(g.trip(5).end == 2);
    CHECK(g.trip(6).end == 3);
    const auto w = g.trip_permutation(3);
    CHECK(w.window() == std::vector<int>{4, 6, 5, 7, 8, 9});
    CHECK_THROWS_AS(g.trip_permutation(2), InconsistentLift);
}

TEST_CASE("worked (3,6) diagram: faces and labels") {
    const auto g = example_36();
    const auto fs = g.faces();
    REQUIRE(fs.size() == 9);
    int boundary = 0;
    for (const auto& f : fs) boundary += f.boundary;
    CHECK(boundary == 6);

    CHECK(label_of(g, "B1") == std::set<int>{2, 3, 4});
    CHECK(label_of(g, "B2") == std::set<int>{3, 4, 6});
    CHECK(label_of(g, "B3") == std::set<int>{4, 5, 6});
    CHECK(label_of(g, "B4") == std::set<int>{1, 5, 6});
    CHECK(label_of(g, "B5") == std::set<int>{1, 2, 6});
    CHECK(label_of(g, "B6") == std::set<int>{1, 2, 3});
    CHECK(label_of(g, "M1_3_4") == std::set<int>{1, 3, 4});
    CHECK(label_of(g, "M1_3_6") == std::set<int>{1, 3, 6});
    CHECK(label_of(g, "M3_5_6") == std::set<int>{3, 5, 6});

    // Source convention relabels the same sides by strand sources.
    const auto src = g.face_labels(LabelConvention::Source);
    REQUIRE(src.size() == 9);
    for (const auto& s : src) CHECK(s.size() == 3);
    // B1 carries target labels {2,3,4}; their sources are {5,6,1}.
    CHECK(src[0] == std::set<int>{1, 5, 6});
}

TEST_CASE("worked (3,6) diagram: ice quiver matches the drawing") {
    const auto q = example_36().to_ice_quiver();
    CHECK(q.size() == 9);
    CHECK(q.frozen_count() == 6);
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"B2", "M1_3_4"}, {"B2", "M3_5_6"},    {"B4", "M3_5_6"},
        {"B5", "M1_3_6"}, {"B6", "M1_3_4"},    {"M1_3_4", "B1"},
        {"M1_3_4", "M1_3_6"}, {"M1_3_6", "B2"}, {"M1_3_6", "B4"},
        {"M1_3_6", "B6"}, {"M3_5_6", "B3"},    {"M3_5_6", "M1_3_6"},
    };
    auto got = arrow_pairs(q);
    std::sort(got.begin(), got.end());
    auto want = expected;
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    // Mutable part: exactly M1 -> M2 <- M3.
    const auto m = q.mutable_part();
    CHECK(m.size() == 3);
    CHECK(arrow_pairs(m) ==
          std::vector<std::pair<std::string, std::string>>{{"M1_3_4", "M1_3_6"},
                                                           {"M3_5_6", "M1_3_6"}});
}

TEST_CASE("rigid diagram: trips, faces, quiver") {
    const auto g = example_rigid();
    g.check_valid();
    const auto w = g.trip_permutation();
    CHECK(w.window() == std::vector<int>{3, 8, 7, 6, 11, 10, 9, 14, 13});
    CHECK(w.k() == 4);

    const auto fs = g.faces();
    CHECK(fs.size() == 12);
    int internal = 0;
    for (const auto& f : fs) internal += !f.boundary;
    CHECK(internal == 3);
    for (const auto& f : fs) CHECK(f.label.size() == 4);

    // The mutable part is a directed 3-cycle and nothing is square-movable.
    const auto m = g.to_ice_quiver().mutable_part();
    CHECK(m.size() == 3);
    CHECK_FALSE(m.is_acyclic());
    for (const auto& a : m.arrows()) CHECK(a.mult == 1);
    CHECK(m.arrows().size() == 3);
    CHECK(g.square_movable_faces().empty());
}

TEST_CASE("face count equals k(n-k) - length + 1 on the worked diagrams") {
    const auto g36 = example_36();
    const auto w36 = g36.trip_permutation();
    CHECK(static_cast<int>(g36.faces().size()) ==
          w36.k() * (w36.n() - w36.k()) - w36.length() + 1);
    const auto gr = example_rigid();
    const auto wr = gr.trip_permutation();
    CHECK(static_cast<int>(gr.faces().size()) ==
          wr.k() * (wr.n() - wr.k()) - wr.length() + 1);
}

TEST_CASE("square moves on the (3,6) diagram") {
    const auto g = example_36();
    const auto movable = g.square_movable_faces();
    CHECK(movable == std::vector<std::string>{"M1_3_4", "M3_5_6"});

    const auto q = g.to_ice_quiver();
    for (const auto& face : movable) {
        const auto moved = g.square_move(face);
        moved.check_valid();
        CHECK(moved.trip_permutation().window() == g.trip_permutation().window());
        CHECK(is_isomorphic(moved.to_ice_quiver(), q.mutate(face)));
        // The moved face takes the label of the exchanged cluster variable;
        // moving there again restores the original graph.
        std::set<std::string> old_ids;
        for (const auto& f : g.faces()) old_ids.insert(f.id);
        std::string fresh;
        for (const auto& f : moved.faces())
            if (!old_ids.count(f.id)) fresh = f.id;
        REQUIRE(!fresh.empty());
        const auto back = moved.square_move(fresh);
        CHECK(back.canonical_string() == g.cleanup_moves().canonical_string());
        CHECK(back.to_ice_quiver() == q);
    }
    // The exchange at M1_3_4 replaces the label by the short Plucker relation
    // partner: 134 -> 236.
    std::set<std::string> after;
    for (const auto& f : g.square_move("M1_3_4").faces()) after.insert(f.id);
    CHECK(after.count("M2_3_6") == 1);
    CHECK(after.count("M1_3_4") == 0);

    CHECK_THROWS_AS(g.square_move("M1_3_6"), NotSquareMovable);
    CHECK_THROWS_AS(g.square_move("B1"), NotSquareMovable);
}

TEST_CASE("cleanup normalizes random subdivisions without changing trips") {
    std::mt19937 rng(5);
    const auto base = example_36();
    const std::string canon = base.cleanup_moves().canonical_string();
    for (int trial = 0; trial < 100; ++trial) {
        PlabicGraph g = base;
        for (int step = 0; step < 1 + trial % 5; ++step) {
            const auto edges = g.edge_ids();
            const int e = edges[rng() % edges.size()];
            g = g.subdivide_edge(e, rng() % 2 ? B : W);
        }
        g.check_valid();
        CHECK(g.trip_permutation().window() == base.trip_permutation().window());
        const auto cleaned = g.cleanup_moves();
        CHECK(cleaned.canonical_string() == canon);
    }
}

TEST_CASE("bridges compose the trip permutation with a simple reflection") {
    const auto g = example_36();
    // The raw surgery is already a valid rotation system.
    g.add_bridge(2, true).check_valid();
    g.add_lollipop(1, B).check_valid();
    // White at leg i: values i, i+1 swap (left multiplication).
    const auto left = g.add_bridge(2, true).cleanup_moves();
    CHECK(left.trip_permutation().window() == std::vector<int>{4, 6, 5, 7, 9, 8});
    // Black at leg i: positions i, i+1 swap (right multiplication).
    const auto right = g.add_bridge(2, false).cleanup_moves();
    CHECK(right.trip_permutation().window() == std::vector<int>{4, 5, 6, 7, 8, 9});
    // Wrapping bridge at i = n.
    const auto wrap = g.add_bridge(6, false).cleanup_moves();
    wrap.check_valid();
    CHECK(wrap.trip_permutation().window() == multiply_right(g.trip_permutation(), {6}));
}

TEST_CASE("add_lollipop shifts the boundary and fixes the new point") {
    const auto g = example_36();
    const auto g2 = g.add_lollipop(3, W);
    g2.check_valid();
    const auto w2 = g2.trip_permutation();
    CHECK(w2.n() == 7);
    CHECK(w2.apply(3) == 3);
    // Removing it again recovers the original window.
    const auto [back, color] = remove_lollipop(w2, 3);
    CHECK(color == LollipopColor::White);
    CHECK(back.window() == g.trip_permutation().window());
}
