#pragma once

#include <vector>

#include "domfind/dominator_tree.hpp"
#include "domfind/graph.hpp"
#include "domfind/loops.hpp"

namespace domfind {

enum class ArcProvenance { Original, Rule2, Rule3 };

struct ReducedArcInfo {
    ArcProvenance provenance = ArcProvenance::Original;
    int loop_head = 0;   // generating head (rules 2 and 3)
    int entry_arc = -1;  // original entry arc index (rule 3)
};

// An acyclic graph with the same dominators as the input: back arcs dropped,
// a compensating arc per loop pair sharing a non-head entry, and one arc per
// non-head entry aimed at the largest loop it enters.  May contain duplicate
// arcs.
struct ReducedGraph {
    FlowGraph graph;
    std::vector<ReducedArcInfo> provenance;  // parallel to graph.arcs()
    int rule2_added = 0;
    int rule3_added = 0;
};

ReducedGraph reduce(const FlowGraph& g, const DfsInfo& info, const LoopForest& forest,
                    const LoopClassification& cls);

// Full pipeline: loop forest, classification, reduction, then the acyclic
// dominator algorithm on the reduced graph.
DominatorTree dominators_via_reduction(const FlowGraph& g);

}  // namespace domfind
