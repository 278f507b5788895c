#include "domfind/dfs.hpp"

namespace domfind {

const char* to_string(ArcClass c) {
    switch (c) {
        case ArcClass::Tree: return "tree";
        case ArcClass::Forward: return "forward";
        case ArcClass::Back: return "back";
        case ArcClass::Cross: return "cross";
    }
    return "?";
}

DfsInfo run_dfs(const FlowGraph& g) {
    const int n = g.n();
    DfsInfo info;
    info.n = n;
    info.start = g.start();
    info.parent.assign(static_cast<size_t>(n) + 1, 0);
    info.pre.assign(static_cast<size_t>(n) + 1, 0);
    info.post.assign(static_cast<size_t>(n) + 1, 0);
    info.subtree_size.assign(static_cast<size_t>(n) + 1, 1);
    info.reverse_preorder.assign(static_cast<size_t>(n), 0);

    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> stack;
    stack.reserve(static_cast<size_t>(n));

    int pre_counter = 0;
    int post_counter = 0;
    info.pre[static_cast<size_t>(g.start())] = ++pre_counter;
    stack.push_back({g.start(), 0});

    while (!stack.empty()) {
        Frame& f = stack.back();
        const std::vector<int>& out = g.out_arcs(f.v);
        if (f.next < out.size()) {
            int w = g.arc(out[f.next]).head;
            ++f.next;
            if (info.pre[static_cast<size_t>(w)] == 0) {
                info.pre[static_cast<size_t>(w)] = ++pre_counter;
                info.parent[static_cast<size_t>(w)] = f.v;
                stack.push_back({w, 0});
            }
        } else {
            int v = f.v;
            info.post[static_cast<size_t>(v)] = ++post_counter;
            stack.pop_back();
            if (!stack.empty())
                info.subtree_size[static_cast<size_t>(stack.back().v)] +=
                    info.subtree_size[static_cast<size_t>(v)];
        }
    }

    if (pre_counter != n)
        throw std::invalid_argument("run_dfs: graph has vertices unreachable from start");
    for (int v = 1; v <= n; ++v)
        info.reverse_preorder[static_cast<size_t>(n - info.pre[static_cast<size_t>(v)])] = v;
    return info;
}

ArcClass classify_arc(const DfsInfo& info, const Arc& a) {
    if (a.tail == a.head)
        throw std::invalid_argument("classify_arc: loop arc has no class");
    if (info.parent[static_cast<size_t>(a.head)] == a.tail) return ArcClass::Tree;
    if (info.is_ancestor(a.tail, a.head)) return ArcClass::Forward;
    if (info.post[static_cast<size_t>(a.tail)] < info.post[static_cast<size_t>(a.head)])
        return ArcClass::Back;
    return ArcClass::Cross;
}

}  // namespace domfind
