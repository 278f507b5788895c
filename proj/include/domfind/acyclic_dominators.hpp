#pragma once

#include "domfind/dfs.hpp"
#include "domfind/dominator_tree.hpp"
#include "domfind/graph.hpp"

namespace domfind {

// True iff no arc of g is a back arc of the spanning tree in info.
bool check_acyclic(const FlowGraph& g, const DfsInfo& info);

struct AdStats {
    int unites = 0;  // always n - 1 on success
};

// Dominators of an acyclic flow graph by contracting each vertex into its
// spanning-tree parent once its last incoming arc is accounted for.  Works
// on graphs with duplicate arcs (the acyclic reduction produces them).
// Throws std::invalid_argument if g has a back arc.
DominatorTree compute_ad(const FlowGraph& g, const DfsInfo& info, AdStats* stats = nullptr);

}  // namespace domfind
