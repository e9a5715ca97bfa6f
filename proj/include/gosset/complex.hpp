// Flag complexes presented by their 1-skeleton: simplices are the cliques.
// Induced subcomplexes are full, so everything is determined by the graph
// and a vertex selection.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gosset/bitset.hpp"
#include "gosset/graph.hpp"

namespace gosset {

struct FlagComplex {
    const Graph* graph = nullptr;
    int vertexCount() const { return graph->vertexCount(); }
};

struct InducedSubcomplex {
    const FlagComplex* parent = nullptr;
    Bitset selected;

    static InducedSubcomplex whole(const FlagComplex& c) {
        InducedSubcomplex s{&c, Bitset(c.vertexCount())};
        for (int v = 0; v < c.vertexCount(); ++v) s.selected.set(v);
        return s;
    }
};

// Simplices are encoded in a 64-bit key: ascending vertices v0 < ... < vd
// stored as bytes (v+1), low byte first. Requires vertex ids < 255 and
// dimension <= 7, which covers every complex in this project.
using SimplexKey = std::uint64_t;

inline SimplexKey packSimplex(std::span<const int> verts) {
    SimplexKey k = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        k |= static_cast<SimplexKey>(verts[i] + 1) << (8 * i);
    return k;
}
inline int unpackSimplex(SimplexKey k, int* out) {
    int d = 0;
    while (k) {
        out[d++] = static_cast<int>(k & 0xff) - 1;
        k >>= 8;
    }
    return d; // number of vertices
}
// Key with the i-th vertex removed (i <= 7).
inline SimplexKey dropVertex(SimplexKey k, int i) {
    SimplexKey low = k & ((SimplexKey{1} << (8 * i)) - 1);
    if (i >= 7) return low;
    SimplexKey high = k >> (8 * (i + 1));
    return low | (high << (8 * i));
}

// All simplices of dimension <= maxDim, grouped by dimension, each list in
// ascending packed-key order.
struct SimplexTable {
    std::vector<std::vector<SimplexKey>> byDim; // byDim[d]: d-simplices

    int maxDim() const { return static_cast<int>(byDim.size()) - 1; }
    long long count(int d) const {
        return d < 0 || d > maxDim() ? 0 : static_cast<long long>(byDim[d].size());
    }
    long long eulerCharacteristic() const {
        long long chi = 0;
        for (int d = 0; d <= maxDim(); ++d) chi += (d % 2 == 0) ? count(d) : -count(d);
        return chi;
    }
};

// maxDim < 0 means "all dimensions".
SimplexTable cliquesByDimension(const InducedSubcomplex& c, int maxDim = -1);

// Clique counts by size (index s = cliques with s vertices), s <= maxSize.
std::vector<long long> cliqueCounts(const Graph& g, int maxSize);

// Connectivity of the induced subcomplex; the empty complex is not connected.
bool isConnected(const InducedSubcomplex& c);

} // namespace gosset
