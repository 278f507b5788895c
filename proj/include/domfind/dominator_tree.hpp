#pragma once

#include <vector>

namespace domfind {

// Immediate dominators: idom[v] is the parent of v in the dominator tree,
// idom[start] = 0.
struct DominatorTree {
    int n = 0;
    int start = 0;
    std::vector<int> idom;  // size n + 1, slot 0 unused

    int operator[](int v) const { return idom[static_cast<size_t>(v)]; }
};

}  // namespace domfind
