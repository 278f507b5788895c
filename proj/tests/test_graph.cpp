#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "domfind/graph.hpp"
#include "test_helpers.hpp"

using namespace domfind;
using test::from_text;
using test::make;

TEST_CASE("parse: chain in file order") {
    FlowGraph g = from_text("p 3 2 1\na 1 2\na 2 3\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.start() == 1);
    CHECK(g.arcs() == std::vector<Arc>{{1, 2}, {2, 3}});
}

TEST_CASE("parse: smallest legal graph") {
    FlowGraph g = from_text("p 2 1 1\na 1 2\n");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
}

TEST_CASE("parse: comments, CRLF, trailing blanks") {
    FlowGraph g = from_text("# a comment\r\np 2 1 1 \r\n# another\na 1 2  \n\n");
    CHECK(g.m() == 1);
}

TEST_CASE("parse: vertex id out of range") {
    CHECK_THROWS_AS(from_text("p 2 1 1\na 1 3\n"), ParseError);
}

TEST_CASE("parse: arc count mismatch") {
    CHECK_THROWS_AS(from_text("p 2 2 1\na 1 2\n"), ParseError);
    CHECK_THROWS_AS(from_text("p 2 0 1\na 1 2\n"), ParseError);
}

TEST_CASE("parse: syntax errors carry line numbers") {
    try {
        from_text("p 2 1 1\nb 1 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("validate: canonical diamond is clean") {
    CHECK(validate(test::diamond()).empty());
}

TEST_CASE("validate: arc into start") {
    FlowGraph g = make(2, {{1, 2}, {2, 1}});
    auto v = validate(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::ArcIntoStart);
}

TEST_CASE("validate: unreachable vertex") {
    FlowGraph g = make(3, {{1, 2}});
    auto v = validate(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::UnreachableVertex);
    CHECK(v[0].vertex == 3);
}

TEST_CASE("validate: loop and duplicate arcs") {
    FlowGraph g = make(2, {{1, 2}, {1, 2}, {2, 2}});
    auto v = validate(g);
    REQUIRE(v.size() == 2);
    CHECK(v[0].kind == ViolationKind::DuplicateArc);
    CHECK(v[1].kind == ViolationKind::LoopArc);
    CHECK(validate(g, /*allow_duplicate_arcs=*/true).size() == 1);
}

TEST_CASE("validate: too few vertices") {
    FlowGraph g(1, 1, {});
    auto v = validate(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::TooFewVertices);
}

TEST_CASE("normalize: drops arc into start") {
    FlowGraph g = make(3, {{1, 2}, {2, 3}, {3, 1}});
    NormalizeResult r = normalize(g);
    CHECK(r.graph.arcs() == std::vector<Arc>{{1, 2}, {2, 3}});
    CHECK(r.old_to_new == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("normalize: deduplicates keeping first occurrence") {
    FlowGraph g = make(2, {{1, 2}, {1, 2}});
    CHECK(normalize(g).graph.arcs() == std::vector<Arc>{{1, 2}});
}

TEST_CASE("normalize: compacts unreachable ids") {
    FlowGraph g = make(5, {{1, 2}, {2, 4}, {5, 4}});
    NormalizeResult r = normalize(g);
    CHECK(r.graph.n() == 3);
    CHECK(r.old_to_new[4] == 3);
    CHECK(r.old_to_new[3] == 0);
    CHECK(r.old_to_new[5] == 0);
    CHECK(r.graph.arcs() == std::vector<Arc>{{1, 2}, {2, 3}});
    CHECK(validate(r.graph).empty());
}

TEST_CASE("normalize: degenerate result throws") {
    FlowGraph g = make(3, {{2, 3}}, /*start=*/1);
    CHECK_THROWS_AS(normalize(g), std::runtime_error);
}

TEST_CASE("serialize then parse is the identity on validated graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        FlowGraph g = test::random_graph(seed);
        REQUIRE(validate(g).empty());
        std::ostringstream out;
        serialize_graph(g, out);
        FlowGraph back = from_text(out.str());
        CHECK(back.n() == g.n());
        CHECK(back.start() == g.start());
        CHECK(back.arcs() == g.arcs());
    }
}

TEST_CASE("normalize is idempotent and validates clean") {
    SplitMix64 rng(77);
    for (int i = 0; i < 25; ++i) {
        // Random graph plus junk: loops, duplicates, arcs into start.
        FlowGraph base = test::random_graph(rng.next());
        std::vector<Arc> arcs = base.arcs();
        int extra = 1 + static_cast<int>(rng.next_below(4));
        for (int k = 0; k < extra; ++k) {
            int v = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(base.n())));
            switch (rng.next_below(3)) {
                case 0: arcs.push_back({v, v}); break;
                case 1: arcs.push_back({v, base.start()}); break;
                default:
                    if (!arcs.empty()) arcs.push_back(arcs[0]);
                    break;
            }
        }
        FlowGraph messy(base.n(), base.start(), arcs);
        NormalizeResult once = normalize(messy);
        CHECK(validate(once.graph).empty());
        NormalizeResult twice = normalize(once.graph);
        CHECK(twice.graph.n() == once.graph.n());
        CHECK(twice.graph.arcs() == once.graph.arcs());
    }
}
