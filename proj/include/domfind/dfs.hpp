#pragma once

#include <vector>

#include "domfind/graph.hpp"

namespace domfind {

enum class ArcClass { Tree, Forward, Back, Cross };

const char* to_string(ArcClass c);

// Depth-first spanning tree of a flow graph, with the orders and interval
// data every algorithm here runs on.  Children are explored in adjacency
// (= input arc) order, so the tree is a pure function of the input.
struct DfsInfo {
    int n = 0;
    int start = 0;
    std::vector<int> parent;            // parent[v] in the tree; parent[start] = 0
    std::vector<int> pre;               // preorder number, 1..n
    std::vector<int> post;              // postorder number, 1..n
    std::vector<int> subtree_size;      // vertices in v's subtree, including v
    std::vector<int> reverse_preorder;  // vertex sequence, deepest-last first

    // u = v counts as ancestor.
    bool is_ancestor(int u, int v) const {
        return pre[static_cast<size_t>(u)] <= pre[static_cast<size_t>(v)] &&
               pre[static_cast<size_t>(v)] <
                   pre[static_cast<size_t>(u)] + subtree_size[static_cast<size_t>(u)];
    }
};

// Iterative DFS from the start vertex.  Requires a validated graph (every
// vertex reachable); throws std::invalid_argument otherwise.
DfsInfo run_dfs(const FlowGraph& g);

// Classification of a non-loop arc against the spanning tree.  Back arcs are
// recognized by the postorder test post(tail) < post(head); tree and forward
// arcs by ancestor intervals.  Throws std::invalid_argument on a loop arc.
ArcClass classify_arc(const DfsInfo& info, const Arc& a);

}  // namespace domfind
