#include <doctest.h>

#include <algorithm>
#include <set>

#include "domfind/dfs.hpp"
#include "test_helpers.hpp"

using namespace domfind;

namespace {

// Ancestor check by walking the parent chain.
bool naive_ancestor(const DfsInfo& info, int u, int v) {
    while (true) {
        if (u == v) return true;
        if (v == info.start) return false;
        v = info.parent[static_cast<size_t>(v)];
    }
}

ArcClass naive_classify(const DfsInfo& info, const Arc& a) {
    if (info.parent[static_cast<size_t>(a.head)] == a.tail) return ArcClass::Tree;
    if (naive_ancestor(info, a.tail, a.head)) return ArcClass::Forward;
    if (naive_ancestor(info, a.head, a.tail)) return ArcClass::Back;
    return ArcClass::Cross;
}

}  // namespace

TEST_CASE("dfs: chain") {
    DfsInfo info = run_dfs(test::chain3());
    CHECK(info.parent[2] == 1);
    CHECK(info.parent[3] == 2);
    CHECK(info.reverse_preorder == std::vector<int>{3, 2, 1});
}

TEST_CASE("dfs: diamond follows adjacency order") {
    DfsInfo info = run_dfs(test::diamond());
    // Visits 1, 2, 4, then 3.
    CHECK(info.parent[2] == 1);
    CHECK(info.parent[4] == 2);
    CHECK(info.parent[3] == 1);
    CHECK(info.pre[1] == 1);
    CHECK(info.pre[2] == 2);
    CHECK(info.pre[4] == 3);
    CHECK(info.pre[3] == 4);
}

TEST_CASE("dfs: irreducible triangle") {
    DfsInfo info = run_dfs(test::irreducible_triangle());
    CHECK(info.parent[2] == 1);
    CHECK(info.parent[3] == 2);
}

TEST_CASE("classify: named examples") {
    DfsInfo diamond_info = run_dfs(test::diamond());
    CHECK(classify_arc(diamond_info, {3, 4}) == ArcClass::Cross);
    CHECK(classify_arc(diamond_info, {1, 2}) == ArcClass::Tree);

    DfsInfo tri_info = run_dfs(test::irreducible_triangle());
    CHECK(classify_arc(tri_info, {3, 2}) == ArcClass::Back);
    CHECK(classify_arc(tri_info, {1, 3}) == ArcClass::Forward);
}

TEST_CASE("classify: loop arc is rejected") {
    DfsInfo info = run_dfs(test::chain3());
    CHECK_THROWS_AS(classify_arc(info, {2, 2}), std::invalid_argument);
}

TEST_CASE("is_ancestor: root, reflexivity, siblings") {
    DfsInfo info = run_dfs(test::diamond());
    for (int v = 1; v <= 4; ++v) {
        CHECK(info.is_ancestor(1, v));
        CHECK(info.is_ancestor(v, v));
    }
    CHECK_FALSE(info.is_ancestor(2, 3));
    CHECK_FALSE(info.is_ancestor(3, 2));
}

TEST_CASE("dfs: orders are bijections and reverse_preorder is bottom-up") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        FlowGraph g = test::random_graph(seed);
        DfsInfo info = run_dfs(g);
        std::set<int> pres, posts;
        for (int v = 1; v <= g.n(); ++v) {
            pres.insert(info.pre[static_cast<size_t>(v)]);
            posts.insert(info.post[static_cast<size_t>(v)]);
        }
        CHECK(static_cast<int>(pres.size()) == g.n());
        CHECK(*pres.begin() == 1);
        CHECK(*pres.rbegin() == g.n());
        CHECK(static_cast<int>(posts.size()) == g.n());

        // Every vertex precedes its parent in reverse preorder.
        std::vector<int> position(static_cast<size_t>(g.n()) + 1, 0);
        for (int i = 0; i < g.n(); ++i)
            position[static_cast<size_t>(info.reverse_preorder[static_cast<size_t>(i)])] = i;
        for (int v = 1; v <= g.n(); ++v)
            if (v != g.start())
                CHECK(position[static_cast<size_t>(v)] <
                      position[static_cast<size_t>(info.parent[static_cast<size_t>(v)])]);

        // Ascending postorder is bottom-up over the same tree.
        for (int v = 1; v <= g.n(); ++v)
            if (v != g.start())
                CHECK(info.post[static_cast<size_t>(v)] <
                      info.post[static_cast<size_t>(info.parent[static_cast<size_t>(v)])]);
    }
}

TEST_CASE("classify: agrees with ancestor-walk reference; back iff postorder rises") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        FlowGraph g = test::random_graph(seed);
        DfsInfo info = run_dfs(g);
        for (const Arc& a : g.arcs()) {
            ArcClass c = classify_arc(info, a);
            CHECK(c == naive_classify(info, a));
            CHECK((c == ArcClass::Back) ==
                  (info.post[static_cast<size_t>(a.tail)] < info.post[static_cast<size_t>(a.head)]));
        }
    }
}

TEST_CASE("dfs: ancestor intervals agree with parent walks") {
    for (std::uint64_t seed = 50; seed <= 60; ++seed) {
        FlowGraph g = test::random_graph(seed, 15);
        DfsInfo info = run_dfs(g);
        for (int u = 1; u <= g.n(); ++u)
            for (int v = 1; v <= g.n(); ++v)
                CHECK(info.is_ancestor(u, v) == naive_ancestor(info, u, v));
    }
}

TEST_CASE("dfs: deep path does not overflow the stack") {
    const int n = 300000;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) - 1);
    for (int v = 1; v < n; ++v) arcs.push_back({v, v + 1});
    DfsInfo info = run_dfs(FlowGraph(n, 1, std::move(arcs)));
    CHECK(info.pre[n] == n);
    CHECK(info.post[n] == 1);
}

TEST_CASE("dfs: rejects graphs with unreachable vertices") {
    CHECK_THROWS_AS(run_dfs(test::make(3, {{1, 2}})), std::invalid_argument);
}
