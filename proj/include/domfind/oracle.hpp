#pragma once

#include <vector>

#include "domfind/dominator_tree.hpp"
#include "domfind/graph.hpp"

namespace domfind {

// Full dominator sets computed from the definition by deleting one vertex at
// a time and redoing reachability.  O(n(n+m)); test-scale only.
struct DominatorSets {
    int n = 0;
    int start = 0;
    // in_dom[w][u] != 0 iff u dominates w.
    std::vector<std::vector<char>> in_dom;

    bool dominates(int u, int w) const {
        return in_dom[static_cast<size_t>(w)][static_cast<size_t>(u)] != 0;
    }
    std::vector<int> dom_of(int w) const;
};

DominatorSets brute_dominators(const FlowGraph& g);

// Immediate dominators read off the brute-force sets: idom(v) is the proper
// dominator of v dominated by every other proper dominator of v.  Throws if
// the proper dominators of some vertex are not totally ordered, which on a
// valid flow graph would mean the oracle itself is broken.
DominatorTree brute_idom(const FlowGraph& g);

struct TreeComparison {
    bool equal = false;
    int first_difference = 0;  // smallest differing vertex id when not equal
};

// Exact comparison of two parent maps over the same vertex set.
TreeComparison trees_equal(const DominatorTree& a, const DominatorTree& b);

}  // namespace domfind
