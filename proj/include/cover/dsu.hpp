#pragma once

#include <numeric>
#include <vector>

namespace cover {

// Union-find with path compression; union keeps the smaller root id.
class Dsu {
public:
    explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // returns false if already in the same set
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

    bool same(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace cover
