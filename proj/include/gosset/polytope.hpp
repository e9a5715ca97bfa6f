// Combinatorial models of the Euclidean Gosset polytopes dual to the
// right-angled hyperbolic polytopes P^3..P^8: vertices with exact integer
// coordinates, the edge relation, the simplex facets (dual to real vertices
// of P^n) and the orthoplex facets (dual to ideal vertices).

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gosset/graph.hpp"
#include "gosset/rational.hpp"

#include "json.hpp"

namespace gosset {

struct OrthoplexFacet {
    // The n-1 opposite (non-adjacent) vertex pairs; all other pairs within
    // the facet are adjacent, so the facet induces K_{(n-1)x2}.
    std::vector<std::pair<int, int>> pairs;

    std::vector<int> vertices() const {
        std::vector<int> v;
        for (auto [a, b] : pairs) {
            v.push_back(a);
            v.push_back(b);
        }
        return v;
    }
};

struct GossetPolytope {
    int n = 0;                                  // dimension of P^n, 3..8
    std::string coordUnit;                      // "integer" or "quarter"
    std::vector<std::vector<int>> vertices;     // exact coordinates
    Graph adjacency;
    std::vector<std::vector<int>> simplexFacets;    // n-cliques
    std::vector<OrthoplexFacet> orthoplexFacets;

    int facetCount() const { return adjacency.vertexCount(); } // facets of P^n
};

struct PolytopeCounts {
    int facets, ideal, finite, degree;
};
PolytopeCounts expectedCounts(int n);

// Vertices and adjacency only.
GossetPolytope buildGossetPolytope(int n);

// All maximal cliques have exactly n vertices (flagness); returns them.
// Throws if a larger clique exists.
std::vector<std::vector<int>> enumerateSimplexFacets(const GossetPolytope& q);

// Per-dimension construction rules; every facet is validated to induce
// K_{(n-1)x2}. Throws on any structural failure.
std::vector<OrthoplexFacet> enumerateOrthoplexFacets(const GossetPolytope& q);

// Vertices, adjacency, both facet families, validated against the known
// facet / ideal / finite counts and degree.
GossetPolytope buildComplete(int n);

// Face vector (f_0, ..., f_n) of P^n: f_i counts the (n-1-i)-dimensional
// simplices of the nerve for i < n, and f_n = 1.
std::vector<long long> faceVector(const GossetPolytope& q);

// Orbifold Euler characteristic of P^n: sum (-1)^i f_i / 2^(n-i).
Frac eulerCharacteristicP(const GossetPolytope& q);

nlohmann::json polytopeToJson(const GossetPolytope& q);
GossetPolytope polytopeFromJson(const nlohmann::json& j); // revalidates

} // namespace gosset
