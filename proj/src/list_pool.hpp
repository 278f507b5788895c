#pragma once

#include <cassert>
#include <vector>

namespace domfind::detail {

// Singly-linked lists over a fixed arena of integer node ids, one list per
// owner.  push is append, pop takes the front, splice concatenates in O(1)
// and empties the source.  Every node may be pushed at most once over the
// pool's lifetime, which is exactly the discipline the contraction
// algorithms need (one node per arc, one node per vertex).
class ListPool {
public:
    ListPool(int owner_count, int node_count)
        : next_(static_cast<size_t>(node_count), -1),
          head_(static_cast<size_t>(owner_count), -1),
          tail_(static_cast<size_t>(owner_count), -1) {}

    bool empty(int owner) const { return head_[static_cast<size_t>(owner)] < 0; }

    void push(int owner, int node) {
        assert(next_[static_cast<size_t>(node)] == -1);
        size_t o = static_cast<size_t>(owner);
        if (head_[o] < 0) {
            head_[o] = tail_[o] = node;
        } else {
            next_[static_cast<size_t>(tail_[o])] = node;
            tail_[o] = node;
        }
    }

    int pop_front(int owner) {
        size_t o = static_cast<size_t>(owner);
        int node = head_[o];
        assert(node >= 0);
        head_[o] = next_[static_cast<size_t>(node)];
        if (head_[o] < 0) tail_[o] = -1;
        return node;
    }

    // Appends src's list to dst's and empties src.
    void splice(int dst, int src) {
        if (dst == src) return;
        size_t d = static_cast<size_t>(dst);
        size_t s = static_cast<size_t>(src);
        if (head_[s] < 0) return;
        if (head_[d] < 0) {
            head_[d] = head_[s];
            tail_[d] = tail_[s];
        } else {
            next_[static_cast<size_t>(tail_[d])] = head_[s];
            tail_[d] = tail_[s];
        }
        head_[s] = tail_[s] = -1;
    }

    template <class F>
    void for_each(int owner, F f) const {
        for (int node = head_[static_cast<size_t>(owner)]; node >= 0;
             node = next_[static_cast<size_t>(node)])
            f(node);
    }

private:
    std::vector<int> next_;
    std::vector<int> head_;
    std::vector<int> tail_;
};

}  // namespace domfind::detail
