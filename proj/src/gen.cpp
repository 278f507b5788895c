#include "domfind/gen.hpp"

#include <stdexcept>
#include <unordered_set>

namespace domfind {

const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::Random: return "random";
        case GenKind::Dag: return "dag";
        case GenKind::NestedLoops: return "nested_loops";
        case GenKind::Ladder: return "ladder";
        case GenKind::CompleteDag: return "complete_dag";
    }
    return "?";
}

bool gen_kind_from_string(const std::string& name, GenKind& out) {
    if (name == "random") out = GenKind::Random;
    else if (name == "dag") out = GenKind::Dag;
    else if (name == "nested_loops") out = GenKind::NestedLoops;
    else if (name == "ladder") out = GenKind::Ladder;
    else if (name == "complete_dag") out = GenKind::CompleteDag;
    else return false;
    return true;
}

namespace {

std::uint64_t arc_key(int tail, int head) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tail)) << 32) |
           static_cast<std::uint32_t>(head);
}

// Random spanning tree rooted at 1: each vertex gets a parent with a smaller
// id, which also fixes a topological order for the dag kind.
std::vector<Arc> spanning_tree(int n, SplitMix64& rng, std::unordered_set<std::uint64_t>& keys) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) - 1);
    for (int v = 2; v <= n; ++v) {
        int parent = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v - 1)));
        arcs.push_back(Arc{parent, v});
        keys.insert(arc_key(parent, v));
    }
    return arcs;
}

FlowGraph gen_random(const GenSpec& spec) {
    const int n = spec.n;
    long long max_arcs = static_cast<long long>(n - 1) * (n - 1);
    long long m = spec.m == 0 ? n - 1 : spec.m;
    if (m < n - 1 || m > max_arcs)
        throw std::invalid_argument("random: arc count must be in [n-1, (n-1)^2]");

    SplitMix64 rng(spec.seed);
    std::unordered_set<std::uint64_t> keys;
    std::vector<Arc> arcs = spanning_tree(n, rng, keys);
    while (static_cast<long long>(arcs.size()) < m) {
        int tail = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int head = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        if (tail == head) continue;
        if (!keys.insert(arc_key(tail, head)).second) continue;
        arcs.push_back(Arc{tail, head});
    }
    return FlowGraph(n, 1, std::move(arcs));
}

FlowGraph gen_dag(const GenSpec& spec) {
    const int n = spec.n;
    long long max_arcs = static_cast<long long>(n) * (n - 1) / 2;
    long long m = spec.m == 0 ? n - 1 : spec.m;
    if (m < n - 1 || m > max_arcs)
        throw std::invalid_argument("dag: arc count must be in [n-1, n(n-1)/2]");

    SplitMix64 rng(spec.seed);
    std::unordered_set<std::uint64_t> keys;
    std::vector<Arc> arcs = spanning_tree(n, rng, keys);
    while (static_cast<long long>(arcs.size()) < m) {
        int tail = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        int head = tail + 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - tail)));
        if (!keys.insert(arc_key(tail, head)).second) continue;
        arcs.push_back(Arc{tail, head});
    }
    return FlowGraph(n, 1, std::move(arcs));
}

// Chain 1 -> 2 -> ... -> n with depth nested loops: loop k (0-based) has
// head 2+k and body up to n-k, closed by the back arc (n-k, 2+k).  Extra
// forward arcs are sampled so that any arc entering a loop from outside
// enters at its head, keeping every loop reducible.
FlowGraph gen_nested_loops(const GenSpec& spec) {
    const int n = spec.n;
    const int depth = spec.depth;
    if (depth < 1) throw std::invalid_argument("nested_loops: depth must be >= 1");
    if (n < 2 * depth + 1)
        throw std::invalid_argument("nested_loops: need n >= 2*depth + 1");

    std::unordered_set<std::uint64_t> keys;
    std::vector<Arc> arcs;
    for (int v = 2; v <= n; ++v) {
        arcs.push_back(Arc{v - 1, v});
        keys.insert(arc_key(v - 1, v));
    }
    for (int k = 0; k < depth; ++k) {
        arcs.push_back(Arc{n - k, 2 + k});
        keys.insert(arc_key(n - k, 2 + k));
    }

    // Deepest loop properly containing j as a non-head member decides the
    // smallest legal tail for an extra arc into j.
    std::vector<int> min_tail(static_cast<size_t>(n) + 1, 1);
    for (int j = 2; j <= n; ++j)
        for (int k = 0; k < depth; ++k)
            if (2 + k < j && j <= n - k) min_tail[static_cast<size_t>(j)] = 2 + k;

    long long base = static_cast<long long>(arcs.size());
    long long forward_capacity = 0;  // all legal (i, j) with i < j
    for (int j = 2; j <= n; ++j) forward_capacity += j - min_tail[static_cast<size_t>(j)];
    long long m = spec.m == 0 ? base : spec.m;
    if (m < base || m > forward_capacity + depth)
        throw std::invalid_argument("nested_loops: arc count out of range for this shape");

    SplitMix64 rng(spec.seed);
    while (static_cast<long long>(arcs.size()) < m) {
        int head = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        int lo = min_tail[static_cast<size_t>(head)];
        int tail = lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(head - lo)));
        if (!keys.insert(arc_key(tail, head)).second) continue;
        arcs.push_back(Arc{tail, head});
    }
    return FlowGraph(n, 1, std::move(arcs));
}

// Two-successor chain: i -> i+1 and i -> i+2.  Every vertex from 3 on is a
// join point, which is the classic stress shape for dominator computations.
FlowGraph gen_ladder(const GenSpec& spec) {
    const int n = spec.n;
    long long derived = static_cast<long long>(n - 1) + (n >= 3 ? n - 2 : 0);
    if (spec.m != 0 && spec.m != derived)
        throw std::invalid_argument("ladder: arc count is derived from n");
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) {
        arcs.push_back(Arc{i, i + 1});
        if (i + 2 <= n) arcs.push_back(Arc{i, i + 2});
    }
    return FlowGraph(n, 1, std::move(arcs));
}

FlowGraph gen_complete_dag(const GenSpec& spec) {
    const int n = spec.n;
    long long m = static_cast<long long>(n) * (n - 1) / 2;
    if (spec.m != 0 && spec.m != m)
        throw std::invalid_argument("complete_dag: arc count is derived from n");
    if (m > 100'000'000LL) throw std::invalid_argument("complete_dag: too many arcs");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) arcs.push_back(Arc{i, j});
    return FlowGraph(n, 1, std::move(arcs));
}

}  // namespace

FlowGraph generate(const GenSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("generate: need n >= 2");
    switch (spec.kind) {
        case GenKind::Random: return gen_random(spec);
        case GenKind::Dag: return gen_dag(spec);
        case GenKind::NestedLoops: return gen_nested_loops(spec);
        case GenKind::Ladder: return gen_ladder(spec);
        case GenKind::CompleteDag: return gen_complete_dag(spec);
    }
    throw std::invalid_argument("generate: unknown kind");
}

std::vector<FlowGraph> enumerate_small(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("enumerate_small: supported for 2 <= n <= 4");

    std::vector<Arc> candidates;
    for (int tail = 1; tail <= n; ++tail)
        for (int head = 2; head <= n; ++head)
            if (tail != head) candidates.push_back(Arc{tail, head});

    std::vector<FlowGraph> out;
    const std::uint32_t subsets = 1u << candidates.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::vector<Arc> arcs;
        for (size_t i = 0; i < candidates.size(); ++i)
            if (mask & (1u << i)) arcs.push_back(candidates[i]);

        // Keep only subsets that reach every vertex from 1.
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Arc& a : arcs)
                if (a.tail == v && !seen[static_cast<size_t>(a.head)]) {
                    seen[static_cast<size_t>(a.head)] = 1;
                    ++count;
                    stack.push_back(a.head);
                }
        }
        if (count == n) out.emplace_back(n, 1, std::move(arcs));
    }
    return out;
}

}  // namespace domfind
