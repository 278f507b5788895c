#pragma once

#include "domfind/dfs.hpp"
#include "domfind/dominator_tree.hpp"
#include "domfind/graph.hpp"

namespace domfind {

struct GdStats {
    int contraction_unites = 0;  // always n - 1 on success
    int nca_unites = 0;          // always n - 1 on success
};

struct GdResult {
    DominatorTree tree;
    DfsInfo info;  // the spanning tree the run built
};

// Dominators of a general flow graph in a single depth-first search.  One
// disjoint-set structure tracks contractions, a second one answers nearest-
// common-ancestor queries online so each arc can be buffered until the
// iteration where it can only be a tree, forward, back, or loop arc of the
// contracted graph.
GdResult compute_gd(const FlowGraph& g, GdStats* stats = nullptr);

}  // namespace domfind
