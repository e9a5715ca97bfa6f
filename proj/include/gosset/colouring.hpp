// Facet colourings of P^n, expressed on the vertices of the dual Gosset
// polytope: adjacent vertices get distinct colours and every colour is used.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gosset/graph.hpp"

#include "json.hpp"

namespace gosset {

struct Colouring {
    int colourCount = 0;
    std::vector<int> of; // facet index -> colour in 0..colourCount-1

    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> cls(colourCount);
        for (int v = 0; v < static_cast<int>(of.size()); ++v) cls[of[v]].push_back(v);
        return cls;
    }
};

// First adjacent same-coloured pair, if any; also rejects unused colours and
// out-of-range values via the second member.
struct ColouringIssue {
    enum Kind { AdjacentSameColour, UnusedColour, OutOfRange, SizeMismatch } kind;
    int a = -1, b = -1;
};
std::optional<ColouringIssue> validateColouring(const Graph& g, const Colouring& col);

// All partitions of the vertex set into non-adjacent pairs (perfect
// matchings of the non-adjacency graph), as colourings with classes ordered
// by smallest member. Deterministic order.
std::vector<Colouring> enumeratePairColourings(const Graph& g);

// JSON wire format: {"n": ..., "colours": {"vertexIndex": colour1based}}.
nlohmann::json colouringToJson(int n, const Colouring& col);
Colouring colouringFromJson(const nlohmann::json& j, int expectedFacets);

} // namespace gosset
