#include "domfind/general_dominators.hpp"

#include <cassert>

#include "domfind/dsu.hpp"
#include "list_pool.hpp"

// The search retreats from vertices in postorder, which is a bottom-up
// order, and runs one contraction round per retreat.  An arc is buffered at
// the nearest common ancestor of its endpoints, found with the streamlined
// Hopcroft-Ullman scheme on the second disjoint-set structure: n_makeset on
// first visit, n_unite(parent, child) when retreating along a tree arc, so
// n_find of any visited vertex names its nca with the current vertex.
//
// A retreat round first drains the out-bag of u (deleting tree and forward
// arcs out of u, contracting vertices that lose their last arc), then walks
// the in-bag of u (each entry witnesses a back arc into u, and the whole
// tree path from the witness up to u is contracted into u).  Arcs that have
// turned into loop arcs of the contracted graph are deleted lazily: the
// added counters track how many buffered-but-undeleted arcs currently enter
// each representative, and the closing adjustment writes them off.

namespace domfind {

namespace {

#ifndef NDEBUG
// Reference nca by parent climbing; preorder numbers say which side is
// deeper.  Only for small-graph assertions.
int naive_nca(const DfsInfo& info, int x, int y) {
    while (x != y) {
        if (info.pre[static_cast<size_t>(x)] < info.pre[static_cast<size_t>(y)])
            y = info.parent[static_cast<size_t>(y)];
        else
            x = info.parent[static_cast<size_t>(x)];
    }
    return x;
}
#endif

}  // namespace

GdResult compute_gd(const FlowGraph& g, GdStats* stats) {
    const int n = g.n();
    const int s = g.start();
    const int m = g.m();

    GdResult result;
    DfsInfo& info = result.info;
    info.n = n;
    info.start = s;
    info.parent.assign(static_cast<size_t>(n) + 1, 0);
    info.pre.assign(static_cast<size_t>(n) + 1, 0);
    info.post.assign(static_cast<size_t>(n) + 1, 0);
    info.subtree_size.assign(static_cast<size_t>(n) + 1, 1);
    info.reverse_preorder.assign(static_cast<size_t>(n), 0);

    DominatorTree& tree = result.tree;
    tree.n = n;
    tree.start = s;
    tree.idom.assign(static_cast<size_t>(n) + 1, 0);

    NamedDsu dsu(n);  // contractions; sets created at retreat time
    NamedDsu nca(n);  // nearest common ancestors; sets created at visit time

    // Undeleted arcs into each vertex: the full in-degree up front, kept per
    // contracted representative afterwards.
    std::vector<int> total(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) total[static_cast<size_t>(v)] = g.in_degree(v);
    std::vector<int> added(static_cast<size_t>(n) + 1, 0);

    detail::ListPool arcs_at(n + 1, m);   // arcs buffered at their nca
    detail::ListPool out_bag(n + 1, m);   // node a = arc a, names its head
    detail::ListPool in_bag(n + 1, m);    // node a = arc a, names its tail
    detail::ListPool same(n + 1, n + 1);
    for (int v = 1; v <= n; ++v) same.push(v, v);

    int pre_counter = 0;
    int post_counter = 0;

    auto previsit = [&](int u) {
        info.pre[static_cast<size_t>(u)] = ++pre_counter;
        nca.make_set(u);
    };

    auto postvisit = [&](int u) {
        info.post[static_cast<size_t>(u)] = ++post_counter;
        dsu.make_set(u);

        for (int a; !arcs_at.empty(u);) {
            a = arcs_at.pop_front(u);
            const Arc& arc = g.arc(a);
            out_bag.push(dsu.find(arc.tail), a);
            int fy = dsu.find(arc.head);
            in_bag.push(fy, a);
            ++added[static_cast<size_t>(fy)];
        }

        while (!out_bag.empty(u)) {
            int y = g.arc(out_bag.pop_front(u)).head;
            int v = dsu.find(y);
            if (v == u) continue;  // already a loop arc; written off at the close
            if (--total[static_cast<size_t>(v)] < 0 || --added[static_cast<size_t>(v)] < 0)
                throw std::logic_error("compute_gd: arc accounting went negative");
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
                out_bag.splice(x, v);
            }
        }

        while (!in_bag.empty(u)) {
            int z = g.arc(in_bag.pop_front(u)).tail;
            int v = dsu.find(z);
            while (v != u) {
                assert(info.is_ancestor(u, v));
                same.splice(u, v);
                int x = dsu.find(info.parent[static_cast<size_t>(v)]);
                dsu.unite(info.parent[static_cast<size_t>(v)], v);
                in_bag.splice(x, v);
                out_bag.splice(x, v);
                total[static_cast<size_t>(x)] += total[static_cast<size_t>(v)];
                added[static_cast<size_t>(x)] += added[static_cast<size_t>(v)];
                v = x;
            }
        }

        total[static_cast<size_t>(u)] -= added[static_cast<size_t>(u)];
        added[static_cast<size_t>(u)] = 0;
        if (total[static_cast<size_t>(u)] < 0)
            throw std::logic_error("compute_gd: arc accounting went negative");
    };

    struct Frame {
        int u;
        size_t next;
        int pending_arc;  // arc whose child subtree is being explored, or -1
    };
    std::vector<Frame> stack;
    stack.reserve(static_cast<size_t>(n));
    previsit(s);
    stack.push_back({s, 0, -1});

    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.pending_arc >= 0) {
            // Retreat along a tree arc.
            int a = f.pending_arc;
            f.pending_arc = -1;
            int v = g.arc(a).head;
            nca.unite(f.u, v);
            int bucket = nca.find(v);
            assert(bucket == f.u);
#ifndef NDEBUG
            if (n <= 5000) assert(bucket == naive_nca(info, f.u, v));
#endif
            arcs_at.push(bucket, a);
            ++f.next;
            continue;
        }
        const std::vector<int>& out = g.out_arcs(f.u);
        if (f.next < out.size()) {
            int a = out[f.next];
            int v = g.arc(a).head;
            if (info.pre[static_cast<size_t>(v)] == 0) {
                info.parent[static_cast<size_t>(v)] = f.u;
                f.pending_arc = a;
                previsit(v);
                stack.push_back({v, 0, -1});
            } else {
                int bucket = nca.find(v);
#ifndef NDEBUG
                if (n <= 5000) assert(bucket == naive_nca(info, f.u, v));
#endif
                arcs_at.push(bucket, a);
                ++f.next;
            }
        } else {
            int u = f.u;
            postvisit(u);
            stack.pop_back();
            if (!stack.empty())
                info.subtree_size[static_cast<size_t>(stack.back().u)] +=
                    info.subtree_size[static_cast<size_t>(u)];
        }
    }

    if (pre_counter != n)
        throw std::invalid_argument("compute_gd: graph has vertices unreachable from start");
    for (int v = 1; v <= n; ++v)
        info.reverse_preorder[static_cast<size_t>(n - info.pre[static_cast<size_t>(v)])] = v;

    if (dsu.unite_count() != n - 1)
        throw std::logic_error("compute_gd: contraction count is not n - 1");
    if (nca.unite_count() != n - 1)
        throw std::logic_error("compute_gd: nca union count is not n - 1");
#ifndef NDEBUG
    for (int v = 1; v <= n; ++v) assert(dsu.find(v) == s);
    for (int v = 1; v <= n; ++v)
        if (v != s) {
            assert(tree.idom[static_cast<size_t>(v)] != 0);
            assert(info.is_ancestor(tree.idom[static_cast<size_t>(v)], v));
        }
#endif
    if (stats) {
        stats->contraction_unites = dsu.unite_count();
        stats->nca_unites = nca.unite_count();
    }
    return result;
}

}  // namespace domfind
