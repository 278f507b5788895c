#include "domfind/loops.hpp"

#include <cassert>

#include "domfind/dsu.hpp"
#include "list_pool.hpp"

namespace domfind {

std::vector<int> LoopForest::heads() const {
    std::vector<int> out;
    for (int u = 1; u <= n; ++u)
        if (is_head(u)) out.push_back(u);
    return out;
}

// The search that finds loop(u): pull an arc (z, y) whose head currently
// contracts to u; the representative of z is in the loop, as is everything
// on the tree path from it up to u.  Contracting each such vertex into its
// parent moves its pending in-arcs to the surviving representative, so
// nested loops are traversed once.  Processing vertices in postorder means
// every arc examined at u joins endpoints inside u's subtree, which is what
// lets the arc scan be replayed per vertex instead of interleaved with an
// actual search.
LoopForest build_loop_forest(const FlowGraph& g, const DfsInfo& info) {
    const int n = g.n();

    LoopForest forest;
    forest.n = n;
    forest.h.assign(static_cast<size_t>(n) + 1, 0);
    forest.exit_arc.assign(static_cast<size_t>(n) + 1, -1);
    forest.children.assign(static_cast<size_t>(n) + 1, {});

    NamedDsu dsu(n);
    for (int v = 1; v <= n; ++v) dsu.make_set(v);
    detail::ListPool in_arcs(n + 1, g.m());

    std::vector<int> postorder(static_cast<size_t>(n), 0);
    for (int v = 1; v <= n; ++v)
        postorder[static_cast<size_t>(info.post[static_cast<size_t>(v)]) - 1] = v;

    for (int u : postorder) {
        for (int a : g.out_arcs(u)) in_arcs.push(dsu.find(g.arc(a).head), a);

        while (!in_arcs.empty(u)) {
            int a = in_arcs.pop_front(u);
            int v = dsu.find(g.arc(a).tail);
            while (v != u) {
                assert(info.is_ancestor(u, v) && v != u);
                forest.h[static_cast<size_t>(v)] = u;
                forest.h_arcs.emplace_back(u, v);
                forest.children[static_cast<size_t>(u)].push_back(v);
                forest.exit_arc[static_cast<size_t>(v)] = a;
                int x = dsu.find(info.parent[static_cast<size_t>(v)]);
                dsu.unite(info.parent[static_cast<size_t>(v)], v);
                in_arcs.splice(x, v);
                v = x;
            }
        }
    }

    forest.unites = dsu.unite_count();
    if (forest.unites != static_cast<int>(forest.h_arcs.size()))
        throw std::logic_error("build_loop_forest: contraction count disagrees with h-arcs");
    return forest;
}

namespace {

// Preorder intervals over the loop nesting forest, for O(1) membership.
struct ForestIntervals {
    std::vector<int> pre;
    std::vector<int> size;

    // v in loop(u)?
    bool in_loop(int u, int v) const {
        return pre[static_cast<size_t>(u)] <= pre[static_cast<size_t>(v)] &&
               pre[static_cast<size_t>(v)] <
                   pre[static_cast<size_t>(u)] + size[static_cast<size_t>(u)];
    }
};

ForestIntervals forest_intervals(const LoopForest& forest) {
    const int n = forest.n;
    ForestIntervals iv;
    iv.pre.assign(static_cast<size_t>(n) + 1, 0);
    iv.size.assign(static_cast<size_t>(n) + 1, 1);

    int counter = 0;
    std::vector<std::pair<int, size_t>> stack;
    for (int root = 1; root <= n; ++root) {
        if (forest.h[static_cast<size_t>(root)] != 0) continue;
        stack.push_back({root, 0});
        iv.pre[static_cast<size_t>(root)] = ++counter;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const std::vector<int>& kids = forest.children[static_cast<size_t>(v)];
            if (next < kids.size()) {
                int c = kids[next++];
                iv.pre[static_cast<size_t>(c)] = ++counter;
                stack.push_back({c, 0});
            } else {
                int done = v;
                stack.pop_back();
                if (!stack.empty())
                    iv.size[static_cast<size_t>(stack.back().first)] +=
                        iv.size[static_cast<size_t>(done)];
            }
        }
    }
    return iv;
}

}  // namespace

bool LoopClassification::reducible() const {
    for (int u = 1; u <= n; ++u)
        if (irreducible_head[static_cast<size_t>(u)]) return false;
    return true;
}

std::vector<int> LoopClassification::irreducible_heads() const {
    std::vector<int> out;
    for (int u = 1; u <= n; ++u)
        if (irreducible_head[static_cast<size_t>(u)]) out.push_back(u);
    return out;
}

LoopClassification classify_loops(const FlowGraph& g, const DfsInfo& info,
                                  const LoopForest& forest) {
    (void)info;
    const int n = g.n();
    LoopClassification cls;
    cls.n = n;
    cls.irreducible_head.assign(static_cast<size_t>(n) + 1, 0);
    cls.common_entry_head.assign(static_cast<size_t>(n) + 1, 0);

    ForestIntervals iv = forest_intervals(forest);

    for (int a = 0; a < g.m(); ++a) {
        const Arc& arc = g.arc(a);
        if (arc.tail == arc.head) continue;
        int largest = 0;
        int previous = 0;
        for (int u = forest.h[static_cast<size_t>(arc.head)];
             u != 0 && !iv.in_loop(u, arc.tail); u = forest.h[static_cast<size_t>(u)]) {
            // (tail, head) enters loop(u) and head != u, so u is irreducible.
            cls.irreducible_head[static_cast<size_t>(u)] = 1;
            if (previous != 0) cls.common_entry_head[static_cast<size_t>(previous)] = 1;
            largest = u;
            previous = u;
        }
        if (largest != 0) cls.non_head_entries.emplace_back(a, largest);
    }
    return cls;
}

// The dominator pass.  Same contraction engine as the acyclic algorithm,
// except that arc heads must be resolved through the disjoint-set structure
// and the forest's (u, v) pairs drive the contraction of loop bodies.  A
// popped arc whose head already contracts to u is a loop arc of the
// contracted graph and is deleted by decrementing u's own count; draining
// the bag again after the loop walks flushes everything the walks merged in.
static DominatorTree run_d_pass(const FlowGraph& g, const DfsInfo& info,
                                const LoopForest& forest, int* unites_out) {
    const int n = g.n();
    const int s = g.start();

    NamedDsu dsu(n);
    for (int v = 1; v <= n; ++v) dsu.make_set(v);

    std::vector<int> total(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) total[static_cast<size_t>(v)] = g.in_degree(v);

    detail::ListPool out(n + 1, g.m());
    detail::ListPool same(n + 1, n + 1);
    for (int v = 1; v <= n; ++v) same.push(v, v);

    DominatorTree tree;
    tree.n = n;
    tree.start = s;
    tree.idom.assign(static_cast<size_t>(n) + 1, 0);

    for (int u : info.reverse_preorder) {
        for (int a : g.in_arcs(u)) out.push(dsu.find(g.arc(a).tail), a);

        auto drain = [&]() {
            while (!out.empty(u)) {
                int y = g.arc(out.pop_front(u)).head;
                int v = dsu.find(y);
                if (v == u) {
                    // Loop arc of the contracted graph; delete it here.
                    if (--total[static_cast<size_t>(u)] < 0)
                        throw std::logic_error("dominator pass: arc accounting went negative");
                    continue;
                }
                if (--total[static_cast<size_t>(v)] < 0)
                    throw std::logic_error("dominator pass: arc accounting went negative");
                if (total[static_cast<size_t>(v)] == 0) {
                    int x = dsu.find(info.parent[static_cast<size_t>(v)]);
                    if (x == u) {
                        same.for_each(v, [&](int w) {
                            assert(tree.idom[static_cast<size_t>(w)] == 0);
                            tree.idom[static_cast<size_t>(w)] = u;
                        });
                    } else {
                        same.splice(x, v);
                    }
                    dsu.unite(info.parent[static_cast<size_t>(v)], v);
                    out.splice(x, v);
                }
            }
        };

        drain();
        for (int z : forest.children[static_cast<size_t>(u)]) {
            int v = dsu.find(z);
            while (v != u) {
                assert(info.is_ancestor(u, v));
                same.splice(u, v);
                int x = dsu.find(info.parent[static_cast<size_t>(v)]);
                dsu.unite(info.parent[static_cast<size_t>(v)], v);
                out.splice(x, v);
                total[static_cast<size_t>(x)] += total[static_cast<size_t>(v)];
                v = x;
            }
        }
        drain();
    }

    if (dsu.unite_count() != n - 1)
        throw std::logic_error("dominator pass: contraction count is not n - 1");
#ifndef NDEBUG
    for (int v = 1; v <= n; ++v) assert(dsu.find(v) == s);
    for (int v = 1; v <= n; ++v)
        if (v != s) {
            assert(tree.idom[static_cast<size_t>(v)] != 0);
            assert(info.is_ancestor(tree.idom[static_cast<size_t>(v)], v));
        }
#endif
    if (unites_out) *unites_out = dsu.unite_count();
    return tree;
}

HdResult compute_hd(const FlowGraph& g, HdStats* stats) {
    HdResult result;
    result.info = run_dfs(g);
    result.forest = build_loop_forest(g, result.info);
    int d_unites = 0;
    result.tree = run_d_pass(g, result.info, result.forest, &d_unites);
    if (stats) {
        stats->h_unites = result.forest.unites;
        stats->d_unites = d_unites;
    }
    return result;
}

}  // namespace domfind
