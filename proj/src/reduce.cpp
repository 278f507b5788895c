#include "domfind/reduce.hpp"

#include <stdexcept>

#include "domfind/acyclic_dominators.hpp"

namespace domfind {

ReducedGraph reduce(const FlowGraph& g, const DfsInfo& info, const LoopForest& forest,
                    const LoopClassification& cls) {
    const int n = g.n();

    std::vector<Arc> arcs;
    std::vector<ReducedArcInfo> prov;
    arcs.reserve(static_cast<size_t>(g.m()) * 2);
    prov.reserve(arcs.capacity());

    // (i) keep everything except back arcs.
    for (int a = 0; a < g.m(); ++a) {
        const Arc& arc = g.arc(a);
        if (arc.tail != arc.head && classify_arc(info, arc) == ArcClass::Back) continue;
        arcs.push_back(arc);
        prov.push_back({ArcProvenance::Original, 0, -1});
    }

    // (ii) when loop(u) and loop(h(u)) share a non-head entry, an arc from
    // the parent of the outer head restores the paths the dropped back arcs
    // provided between the two loops.
    int rule2 = 0;
    for (int u = 1; u <= n; ++u) {
        if (!cls.common_entry_head[static_cast<size_t>(u)]) continue;
        int outer = forest.h[static_cast<size_t>(u)];
        arcs.push_back(Arc{info.parent[static_cast<size_t>(outer)], u});
        prov.push_back({ArcProvenance::Rule2, u, -1});
        ++rule2;
    }

    // (iii) each non-head entry also enters the head of the largest loop it
    // enters.
    int rule3 = 0;
    for (const auto& [entry_arc, head] : cls.non_head_entries) {
        arcs.push_back(Arc{g.arc(entry_arc).tail, head});
        prov.push_back({ArcProvenance::Rule3, head, entry_arc});
        ++rule3;
    }

    if (rule2 > n - 2)
        throw std::logic_error("reduce: rule (ii) added more than n - 2 arcs");
    if (rule3 > g.m())
        throw std::logic_error("reduce: rule (iii) added more than m arcs");

    ReducedGraph out{FlowGraph(n, g.start(), std::move(arcs)), std::move(prov), rule2, rule3};

    DfsInfo fresh = run_dfs(out.graph);
    if (!check_acyclic(out.graph, fresh))
        throw std::logic_error("reduce: result is not acyclic");
    return out;
}

DominatorTree dominators_via_reduction(const FlowGraph& g) {
    DfsInfo info = run_dfs(g);
    LoopForest forest = build_loop_forest(g, info);
    LoopClassification cls = classify_loops(g, info, forest);
    ReducedGraph reduced = reduce(g, info, forest, cls);
    DfsInfo acyclic_info = run_dfs(reduced.graph);
    return compute_ad(reduced.graph, acyclic_info);
}

}  // namespace domfind
