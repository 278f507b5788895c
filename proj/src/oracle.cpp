#include "domfind/oracle.hpp"

#include <algorithm>
#include <stdexcept>

// The oracle sticks to the definition: u dominates w iff removing u from the
// graph makes w unreachable from the start.  It shares no machinery with the
// contraction algorithms it is used to check.

namespace domfind {

std::vector<int> DominatorSets::dom_of(int w) const {
    std::vector<int> out;
    for (int u = 1; u <= n; ++u)
        if (in_dom[static_cast<size_t>(w)][static_cast<size_t>(u)]) out.push_back(u);
    return out;
}

namespace {

// Reachability from s with one vertex removed (0 = nothing removed).
void reach_without(const FlowGraph& g, int removed, std::vector<char>& seen,
                   std::vector<int>& stack) {
    seen.assign(static_cast<size_t>(g.n()) + 1, 0);
    if (g.start() == removed) return;
    stack.clear();
    stack.push_back(g.start());
    seen[static_cast<size_t>(g.start())] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : g.out_arcs(v)) {
            int w = g.arc(a).head;
            if (w != removed && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
}

}  // namespace

DominatorSets brute_dominators(const FlowGraph& g) {
    const int n = g.n();
    DominatorSets sets;
    sets.n = n;
    sets.start = g.start();
    sets.in_dom.assign(static_cast<size_t>(n) + 1,
                       std::vector<char>(static_cast<size_t>(n) + 1, 0));

    for (int w = 1; w <= n; ++w) {
        sets.in_dom[static_cast<size_t>(w)][static_cast<size_t>(w)] = 1;
        sets.in_dom[static_cast<size_t>(w)][static_cast<size_t>(g.start())] = 1;
    }

    std::vector<char> seen;
    std::vector<int> stack;
    for (int removed = 1; removed <= n; ++removed) {
        if (removed == g.start()) continue;
        reach_without(g, removed, seen, stack);
        for (int w = 1; w <= n; ++w)
            if (!seen[static_cast<size_t>(w)])
                sets.in_dom[static_cast<size_t>(w)][static_cast<size_t>(removed)] = 1;
    }
    return sets;
}

DominatorTree brute_idom(const FlowGraph& g) {
    DominatorSets sets = brute_dominators(g);
    const int n = g.n();
    DominatorTree tree;
    tree.n = n;
    tree.start = g.start();
    tree.idom.assign(static_cast<size_t>(n) + 1, 0);

    // |dom(u)| grows strictly along a chain of the dominance order, so the
    // proper dominators of v sorted by set size must form a chain under
    // containment, and the immediate dominator is the deepest of them.
    std::vector<int> dom_count(static_cast<size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u) {
        int count = 0;
        for (int w = 1; w <= n; ++w)
            if (sets.dominates(u, w)) ++count;
        dom_count[static_cast<size_t>(u)] = count;
    }

    std::vector<int> chain;
    for (int v = 1; v <= n; ++v) {
        if (v == g.start()) continue;
        chain.clear();
        for (int u = 1; u <= n; ++u)
            if (u != v && sets.dominates(u, v)) chain.push_back(u);
        if (chain.empty())
            throw std::logic_error("brute_idom: no immediate dominator found");
        // Sorted by how many vertices each one dominates: the start vertex
        // first, the immediate dominator last.
        std::sort(chain.begin(), chain.end(), [&](int a, int b) {
            return dom_count[static_cast<size_t>(a)] > dom_count[static_cast<size_t>(b)];
        });
        for (size_t i = 0; i + 1 < chain.size(); ++i)
            if (!sets.dominates(chain[i], chain[i + 1]))
                throw std::logic_error("brute_idom: proper dominators not totally ordered");
        tree.idom[static_cast<size_t>(v)] = chain.back();
    }
    return tree;
}

TreeComparison trees_equal(const DominatorTree& a, const DominatorTree& b) {
    if (a.n != b.n || a.start != b.start)
        throw std::invalid_argument("trees_equal: vertex sets differ");
    for (int v = 1; v <= a.n; ++v)
        if (a.idom[static_cast<size_t>(v)] != b.idom[static_cast<size_t>(v)])
            return {false, v};
    return {true, 0};
}

}  // namespace domfind
