#include <doctest.h>

#include <set>

#include "domfind/general_dominators.hpp"
#include "domfind/loops.hpp"
#include "domfind/oracle.hpp"
#include "test_helpers.hpp"

using namespace domfind;

namespace {

// Restricted reachability: vertices of u's subtree with a path to u that
// stays inside the subtree.  This is the defining property the forest must
// reproduce.
std::set<int> loop_by_definition(const FlowGraph& g, const DfsInfo& info, int u) {
    std::vector<char> reaches(static_cast<size_t>(g.n()) + 1, 0);
    reaches[static_cast<size_t>(u)] = 1;
    std::vector<int> stack{u};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : g.in_arcs(v)) {
            int x = g.arc(a).tail;
            if (!reaches[static_cast<size_t>(x)] && info.is_ancestor(u, x)) {
                reaches[static_cast<size_t>(x)] = 1;
                stack.push_back(x);
            }
        }
    }
    std::set<int> out;
    for (int v = 1; v <= g.n(); ++v)
        if (reaches[static_cast<size_t>(v)]) out.insert(v);
    return out;
}

std::set<int> loop_from_forest(const LoopForest& forest, int u) {
    std::set<int> out{u};
    std::vector<int> stack{u};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : forest.children[static_cast<size_t>(v)]) {
            out.insert(c);
            stack.push_back(c);
        }
    }
    return out;
}

bool nested_or_disjoint(const std::set<int>& a, const std::set<int>& b) {
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) return true;
    return std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
           std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("loop forest: simple loop") {
    FlowGraph g = test::simple_loop();
    DfsInfo info = run_dfs(g);
    LoopForest forest = build_loop_forest(g, info);
    CHECK(forest.h[3] == 2);
    CHECK(forest.h[2] == 0);
    CHECK(forest.h[4] == 0);
    CHECK(forest.heads() == std::vector<int>{2});
    REQUIRE(forest.exit_arc[3] >= 0);
    CHECK(g.arc(forest.exit_arc[3]) == Arc{3, 2});
    CHECK(forest.unites == 1);
}

TEST_CASE("loop forest: acyclic graphs have no loops") {
    FlowGraph g = test::diamond();
    LoopForest forest = build_loop_forest(g, run_dfs(g));
    CHECK(forest.h_arcs.empty());
    CHECK(forest.heads().empty());
    CHECK(forest.unites == 0);
}

TEST_CASE("loop forest: nested loops") {
    FlowGraph g = test::nested_loops_graph();
    LoopForest forest = build_loop_forest(g, run_dfs(g));
    CHECK(forest.h[3] == 2);
    CHECK(forest.h[4] == 3);
    CHECK(forest.heads() == std::vector<int>{2, 3});
}

TEST_CASE("hd: fixtures") {
    HdResult loop = compute_hd(test::simple_loop());
    CHECK(test::idom_map(loop.tree.idom) == std::map<int, int>{{2, 1}, {3, 2}, {4, 3}});
    CHECK(loop.forest.h[3] == 2);

    HdResult tri = compute_hd(test::irreducible_triangle());
    CHECK(test::idom_map(tri.tree.idom) == std::map<int, int>{{2, 1}, {3, 1}});
    CHECK(tri.forest.h[3] == 2);

    HdResult chain = compute_hd(test::chain3());
    CHECK(test::idom_map(chain.tree.idom) == std::map<int, int>{{2, 1}, {3, 2}});
    CHECK(chain.forest.h_arcs.empty());
}

TEST_CASE("hd: oracle agreement, gd agreement, unite accounting") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        FlowGraph g = test::random_graph(seed);
        HdStats stats;
        HdResult r = compute_hd(g, &stats);
        TreeComparison cmp = trees_equal(r.tree, brute_idom(g));
        INFO("seed ", seed, " first difference at ", cmp.first_difference);
        CHECK(cmp.equal);
        CHECK(trees_equal(r.tree, compute_gd(g).tree).equal);
        CHECK(stats.d_unites == g.n() - 1);
        CHECK(stats.h_unites == static_cast<int>(r.forest.h_arcs.size()));
    }
}

TEST_CASE("loop forest: h is a proper tree ancestor; loops match the definition; laminar") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        FlowGraph g = test::random_graph(seed, 30);
        DfsInfo info = run_dfs(g);
        LoopForest forest = build_loop_forest(g, info);

        for (int v = 1; v <= g.n(); ++v)
            if (forest.h[static_cast<size_t>(v)] != 0) {
                CHECK(forest.h[static_cast<size_t>(v)] != v);
                CHECK(info.is_ancestor(forest.h[static_cast<size_t>(v)], v));
            }

        std::vector<std::set<int>> loops;
        for (int u = 1; u <= g.n(); ++u) {
            std::set<int> expected = loop_by_definition(g, info, u);
            if (forest.is_head(u)) {
                CHECK(loop_from_forest(forest, u) == expected);
                loops.push_back(expected);
            } else {
                // Non-heads must have trivial loops.
                CHECK(expected == std::set<int>{u});
            }
        }
        for (size_t i = 0; i < loops.size(); ++i)
            for (size_t j = i + 1; j < loops.size(); ++j)
                CHECK(nested_or_disjoint(loops[i], loops[j]));
    }
}

TEST_CASE("classify: irreducible triangle") {
    FlowGraph g = test::irreducible_triangle();
    DfsInfo info = run_dfs(g);
    LoopForest forest = build_loop_forest(g, info);
    LoopClassification cls = classify_loops(g, info, forest);
    CHECK(cls.irreducible_heads() == std::vector<int>{2});
    CHECK_FALSE(cls.reducible());
    REQUIRE(cls.non_head_entries.size() == 1);
    CHECK(g.arc(cls.non_head_entries[0].first) == Arc{1, 3});
    CHECK(cls.non_head_entries[0].second == 2);
}

TEST_CASE("classify: simple loop and acyclic graphs are reducible") {
    FlowGraph g = test::simple_loop();
    DfsInfo info = run_dfs(g);
    LoopClassification cls = classify_loops(g, info, build_loop_forest(g, info));
    CHECK(cls.reducible());
    CHECK(cls.non_head_entries.empty());

    FlowGraph d = test::diamond();
    DfsInfo dinfo = run_dfs(d);
    LoopClassification dcls = classify_loops(d, dinfo, build_loop_forest(d, dinfo));
    CHECK(dcls.reducible());
    CHECK(dcls.irreducible_heads().empty());
}

TEST_CASE("classify: reducible graphs keep their dominators when back arcs go") {
    int reducible_seen = 0;
    for (std::uint64_t seed = 1; seed <= 120 || reducible_seen < 20; ++seed) {
        REQUIRE(seed <= 4000);
        FlowGraph g = test::random_graph(seed, 25);
        DfsInfo info = run_dfs(g);
        LoopForest forest = build_loop_forest(g, info);
        if (!classify_loops(g, info, forest).reducible()) continue;
        ++reducible_seen;
        std::vector<Arc> arcs;
        for (const Arc& a : g.arcs())
            if (classify_arc(info, a) != ArcClass::Back) arcs.push_back(a);
        FlowGraph stripped(g.n(), g.start(), std::move(arcs));
        CHECK(trees_equal(brute_idom(stripped), brute_idom(g)).equal);
    }
}

TEST_CASE("classify: common entries demand a head whose parent loop shares the entry") {
    // Two nested loops entered from outside through the inner body: the arc
    // (1, 4) bypasses both heads 2 and 3.
    FlowGraph g = test::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 3}, {5, 2}, {1, 4}});
    DfsInfo info = run_dfs(g);
    LoopForest forest = build_loop_forest(g, info);
    LoopClassification cls = classify_loops(g, info, forest);
    // loop(3) = {3,4} nests in loop(2) = {2,3,4,5}; (1,4) enters both as a
    // non-head entry, so the inner head carries the common-entry flag.
    CHECK(forest.h[3] == 2);
    CHECK(cls.irreducible_heads() == std::vector<int>{2, 3});
    CHECK(cls.common_entry_head[3] != 0);
    CHECK(cls.common_entry_head[2] == 0);
}
