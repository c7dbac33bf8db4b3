#pragma once

#include <numeric>
#include <vector>

namespace kbst {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // false when a and b were already in the same set
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace kbst
