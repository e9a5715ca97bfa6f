// Undirected graph on a fixed vertex set, stored as adjacency bitsets.

#pragma once

#include <stdexcept>
#include <vector>

#include "gosset/bitset.hpp"

namespace gosset {

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, Bitset(n)) {}

    int vertexCount() const { return n_; }

    void addEdge(int a, int b) {
        if (a == b) throw std::invalid_argument("loops not allowed");
        rows_[a].set(b);
        rows_[b].set(a);
    }
    bool adjacent(int a, int b) const { return rows_[a].test(b); }
    const Bitset& neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    long long edgeCount() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    bool isRegular(int d) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != d) return false;
        return true;
    }

    Graph complement() const {
        Graph g(n_);
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (!adjacent(a, b)) g.addEdge(a, b);
        return g;
    }

    // Induced subgraph; `mapBack[i]` gives the original id of new vertex i.
    Graph induced(const Bitset& keep, std::vector<int>* mapBack = nullptr) const {
        std::vector<int> verts;
        keep.forEach([&](int v) { verts.push_back(v); });
        Graph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) g.addEdge(static_cast<int>(i), static_cast<int>(j));
        if (mapBack) *mapBack = std::move(verts);
        return g;
    }

    // Maximum independent set size, via max clique on the complement with a
    // greedy-colouring bound.
    int maxIndependentSetSize() const;

private:
    int n_ = 0;
    std::vector<Bitset> rows_;
};

// Tomita-style branch and bound max clique.
int maxCliqueSize(const Graph& g);

} // namespace gosset
