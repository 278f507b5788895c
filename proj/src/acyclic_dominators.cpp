#include "domfind/acyclic_dominators.hpp"

#include <cassert>

#include "domfind/dsu.hpp"
#include "list_pool.hpp"

// Vertices are processed in reverse preorder, which is a bottom-up order of
// the DFS tree.  Arcs into the current vertex u are handed to the bag of
// their tail's contracted representative; the bag of u then holds exactly
// the heads of the surviving tree and forward arcs out of u.  Draining the
// bag deletes those arcs; a vertex whose incoming-arc count hits zero is
// contracted into its current parent.  Vertices whose immediate dominator is
// not yet known travel in same-sets and get assigned in one batch.

namespace domfind {

bool check_acyclic(const FlowGraph& g, const DfsInfo& info) {
    for (const Arc& a : g.arcs()) {
        if (a.tail == a.head) continue;
        if (classify_arc(info, a) == ArcClass::Back) return false;
    }
    return true;
}

DominatorTree compute_ad(const FlowGraph& g, const DfsInfo& info, AdStats* stats) {
    if (!check_acyclic(g, info))
        throw std::invalid_argument("compute_ad: input contains a back arc");

    const int n = g.n();
    const int s = g.start();

    NamedDsu dsu(n);
    for (int v = 1; v <= n; ++v) dsu.make_set(v);

    std::vector<int> total(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) total[static_cast<size_t>(v)] = g.in_degree(v);

    // One bag node per arc; a popped node names the arc's head.
    detail::ListPool out(n + 1, g.m());
    detail::ListPool same(n + 1, n + 1);
    for (int v = 1; v <= n; ++v) same.push(v, v);

    DominatorTree tree;
    tree.n = n;
    tree.start = s;
    tree.idom.assign(static_cast<size_t>(n) + 1, 0);

    for (int u : info.reverse_preorder) {
        for (int a : g.in_arcs(u)) out.push(dsu.find(g.arc(a).tail), a);

        while (!out.empty(u)) {
            int v = g.arc(out.pop_front(u)).head;
            if (--total[static_cast<size_t>(v)] < 0)
                throw std::logic_error("compute_ad: incoming-arc count went negative");
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
    }

    if (dsu.unite_count() != n - 1)
        throw std::logic_error("compute_ad: contraction count is not n - 1");
#ifndef NDEBUG
    for (int v = 1; v <= n; ++v) assert(dsu.find(v) == s);
    for (int v = 1; v <= n; ++v)
        if (v != s) {
            assert(tree.idom[static_cast<size_t>(v)] != 0);
            assert(info.is_ancestor(tree.idom[static_cast<size_t>(v)], v));
        }
#endif
    if (stats) stats->unites = dsu.unite_count();
    return tree;
}

}  // namespace domfind
