#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace domfind {

// Disjoint sets over vertex ids with named sets.  unite(x, y) gives the
// merged set the name of the set that contained x, regardless of which root
// wins the rank comparison, so the name is stored at the structural root
// separately from the root id itself.  Union by rank plus full path
// compression.
class NamedDsu {
public:
    explicit NamedDsu(int capacity)
        : parent_(static_cast<size_t>(capacity) + 1, 0),
          rank_(static_cast<size_t>(capacity) + 1, 0),
          name_(static_cast<size_t>(capacity) + 1, 0),
          present_(static_cast<size_t>(capacity) + 1, 0) {}

    bool contains(int x) const {
        return x >= 1 && x < static_cast<int>(present_.size()) && present_[static_cast<size_t>(x)];
    }

    void make_set(int x) {
        check_range(x);
        if (present_[static_cast<size_t>(x)])
            throw std::logic_error("make_set: element " + std::to_string(x) + " already present");
        present_[static_cast<size_t>(x)] = 1;
        parent_[static_cast<size_t>(x)] = x;
        rank_[static_cast<size_t>(x)] = 0;
        name_[static_cast<size_t>(x)] = x;
    }

    // Returns the name of x's set.
    int find(int x) {
        return name_[static_cast<size_t>(root_of(x))];
    }

    // Merges the two sets; the result keeps the name of x's set.  Uniting a
    // set with itself is a no-op.
    void unite(int x, int y) {
        int rx = root_of(x);
        int ry = root_of(y);
        if (rx == ry) return;
        int kept_name = name_[static_cast<size_t>(rx)];
        if (rank_[static_cast<size_t>(rx)] < rank_[static_cast<size_t>(ry)]) std::swap(rx, ry);
        parent_[static_cast<size_t>(ry)] = rx;
        if (rank_[static_cast<size_t>(rx)] == rank_[static_cast<size_t>(ry)])
            ++rank_[static_cast<size_t>(rx)];
        name_[static_cast<size_t>(rx)] = kept_name;
        ++unite_count_;
    }

    int unite_count() const { return unite_count_; }

private:
    void check_range(int x) const {
        if (x < 1 || x >= static_cast<int>(parent_.size()))
            throw std::logic_error("disjoint-set element " + std::to_string(x) + " out of range");
    }

    int root_of(int x) {
        check_range(x);
        if (!present_[static_cast<size_t>(x)])
            throw std::logic_error("disjoint-set element " + std::to_string(x) + " was never created");
        int root = x;
        while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
        while (parent_[static_cast<size_t>(x)] != root) {
            int next = parent_[static_cast<size_t>(x)];
            parent_[static_cast<size_t>(x)] = root;
            x = next;
        }
        return root;
    }

    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<int> name_;
    std::vector<char> present_;
    int unite_count_ = 0;
};

}  // namespace domfind
