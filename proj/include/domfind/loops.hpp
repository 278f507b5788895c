#pragma once

#include <utility>
#include <vector>

#include "domfind/dfs.hpp"
#include "domfind/dominator_tree.hpp"
#include "domfind/graph.hpp"

namespace domfind {

// Loop nesting forest of a flow graph with respect to the DFS tree: h[v] is
// the nearest proper tree ancestor whose loop contains v (0 when none), and
// loop(u) is u plus its descendants in the forest.
struct LoopForest {
    int n = 0;
    std::vector<int> h;                        // parent in the forest, 0 = root
    std::vector<int> exit_arc;                 // arc that triggered v's contraction, -1 if none
    std::vector<std::pair<int, int>> h_arcs;   // (u, v) pairs in emission order
    std::vector<std::vector<int>> children;    // children[u], emission order
    int unites = 0;                            // contractions done; equals h_arcs.size()

    bool is_head(int u) const { return !children[static_cast<size_t>(u)].empty(); }
    std::vector<int> heads() const;
};

// One backward search per vertex in postorder, over in-arc sets that merge
// as found loops contract into their heads.
LoopForest build_loop_forest(const FlowGraph& g, const DfsInfo& info);

struct LoopClassification {
    int n = 0;
    std::vector<char> irreducible_head;   // head with an entry that misses it
    std::vector<char> common_entry_head;  // u: loop(u), loop(h(u)) share a non-head entry
    // (arc index, head of the largest loop that arc enters as a non-head entry)
    std::vector<std::pair<int, int>> non_head_entries;

    bool reducible() const;
    std::vector<int> irreducible_heads() const;
};

// Walks each arc's h-chain upward from its head while the candidate loop
// excludes the tail; every loop passed has the arc as a non-head entry.
LoopClassification classify_loops(const FlowGraph& g, const DfsInfo& info,
                                  const LoopForest& forest);

struct HdStats {
    int h_unites = 0;  // equals the number of h-arcs
    int d_unites = 0;  // always n - 1 on success
};

struct HdResult {
    DominatorTree tree;
    LoopForest forest;
    DfsInfo info;
};

// Loop forest first, then dominators: the forest's (u, v) pairs stand in for
// the back-arc handling, so the dominator pass needs neither in-bags nor an
// nca structure.
HdResult compute_hd(const FlowGraph& g, HdStats* stats = nullptr);

}  // namespace domfind
