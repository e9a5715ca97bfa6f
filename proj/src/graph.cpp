#include "gosset/graph.hpp"

#include <algorithm>

namespace gosset {

namespace {

// Greedy colouring of the candidate set; vertices are emitted ordered by
// colour class so the bound current + colour(v) is valid when candidates
// are consumed from the back.
void colourSort(const Graph& g, const std::vector<int>& cand,
                std::vector<int>& ordered, std::vector<int>& bound) {
    ordered.clear();
    bound.clear();
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
        bool placed = false;
        for (auto& cls : classes) {
            bool clash = false;
            for (int u : cls)
                if (g.adjacent(u, v)) { clash = true; break; }
            if (!clash) { cls.push_back(v); placed = true; break; }
        }
        if (!placed) classes.push_back({v});
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) {
            ordered.push_back(v);
            bound.push_back(static_cast<int>(c) + 1);
        }
}

void expand(const Graph& g, std::vector<int>& cand, int size, int& best) {
    std::vector<int> ordered, bound;
    colourSort(g, cand, ordered, bound);
    while (!ordered.empty()) {
        int v = ordered.back();
        int b = bound.back();
        ordered.pop_back();
        bound.pop_back();
        if (size + b <= best) return;
        std::vector<int> next;
        for (int u : ordered)
            if (g.adjacent(u, v)) next.push_back(u);
        if (next.empty()) {
            best = std::max(best, size + 1);
        } else {
            expand(g, next, size + 1, best);
        }
    }
}

} // namespace

int maxCliqueSize(const Graph& g) {
    int n = g.vertexCount();
    if (n == 0) return 0;
    std::vector<int> cand(n);
    // Degeneracy-ish order: ascending degree works well enough here.
    for (int i = 0; i < n; ++i) cand[i] = i;
    std::sort(cand.begin(), cand.end(),
              [&](int a, int b) { return g.degree(a) < g.degree(b); });
    int best = 0;
    expand(g, cand, 0, best);
    return best;
}

int Graph::maxIndependentSetSize() const { return maxCliqueSize(complement()); }

} // namespace gosset
