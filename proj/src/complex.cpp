#include "gosset/complex.hpp"

namespace gosset {

namespace {

// Drops all candidate ids <= v, so cliques are produced in ascending order.
void restrictAbove(Bitset& cand, int v) {
    int w = v >> 6;
    for (int i = 0; i < w; ++i) cand.data()[i] = 0;
    cand.data()[w] &= ~((std::uint64_t{2} << (v & 63)) - 1);
}

void extendCliques(const Graph& g, const Bitset& cand, std::vector<int>& stack,
                   int maxVerts, SimplexTable& out) {
    int d = static_cast<int>(stack.size()) - 1;
    if (d >= static_cast<int>(out.byDim.size())) out.byDim.resize(d + 1);
    out.byDim[d].push_back(packSimplex(stack));
    if (static_cast<int>(stack.size()) == maxVerts) return;
    cand.forEach([&](int v) {
        Bitset next = cand & g.neighbours(v);
        restrictAbove(next, v);
        stack.push_back(v);
        extendCliques(g, next, stack, maxVerts, out);
        stack.pop_back();
    });
}

} // namespace

SimplexTable cliquesByDimension(const InducedSubcomplex& c, int maxDim) {
    const Graph& g = *c.parent->graph;
    int maxVerts = maxDim < 0 ? g.vertexCount() : maxDim + 1;
    SimplexTable table;
    if (maxVerts == 0) return table;
    std::vector<int> stack;
    c.selected.forEach([&](int v) {
        Bitset cand = c.selected & g.neighbours(v);
        restrictAbove(cand, v);
        stack.push_back(v);
        extendCliques(g, cand, stack, maxVerts, table);
        stack.pop_back();
    });
    // Ascending key order, so boundary faces can be found by binary search.
    for (auto& level : table.byDim) std::sort(level.begin(), level.end());
    return table;
}

std::vector<long long> cliqueCounts(const Graph& g, int maxSize) {
    FlagComplex c{&g};
    SimplexTable t = cliquesByDimension(InducedSubcomplex::whole(c), maxSize - 1);
    std::vector<long long> counts(maxSize + 1, 0);
    for (int d = 0; d <= t.maxDim(); ++d)
        if (d + 1 <= maxSize) counts[d + 1] = t.count(d);
    return counts;
}

bool isConnected(const InducedSubcomplex& c) {
    const Graph& g = *c.parent->graph;
    int start = c.selected.nextSetBit(0);
    if (start < 0) return false;
    Bitset visited(g.vertexCount());
    visited.set(start);
    std::vector<int> queue{start};
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        Bitset fresh = g.neighbours(v) & c.selected;
        fresh.andNot(visited);
        fresh.forEach([&](int u) {
            visited.set(u);
            queue.push_back(u);
        });
    }
    return visited.count() == c.selected.count();
}

} // namespace gosset
