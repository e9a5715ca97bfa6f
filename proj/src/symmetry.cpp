#include "gosset/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gosset/octonion.hpp"

namespace gosset {

namespace {

// vertexPerm must be a bijection; returns the induced colour permutation if
// the map preserves adjacency and permutes colour classes, else empty.
std::vector<int> inducedColourPerm(const GossetPolytope& q, const Colouring& col,
                                   const std::vector<int>& vertexPerm) {
    int n = q.facetCount();
    std::vector<int> colourPerm(col.colourCount, -1);
    for (int v = 0; v < n; ++v) {
        int from = col.of[v], to = col.of[vertexPerm[v]];
        if (colourPerm[from] == -1) colourPerm[from] = to;
        else if (colourPerm[from] != to) return {};
    }
    std::vector<char> hit(col.colourCount, 0);
    for (int c : colourPerm) {
        if (c < 0 || hit[c]) return {};
        hit[c] = 1;
    }
    for (int a = 0; a < n; ++a) {
        Bitset nb = q.adjacency.neighbours(a);
        bool ok = true;
        nb.forEach([&](int b) {
            if (!q.adjacency.adjacent(vertexPerm[a], vertexPerm[b])) ok = false;
        });
        if (!ok) return {};
    }
    return colourPerm;
}

void tryCandidate(const GossetPolytope& q, const Colouring& col, std::vector<int> vertexPerm,
                  std::vector<ColourSymmetry>& out) {
    std::vector<char> seen(q.facetCount(), 0);
    for (int v : vertexPerm) {
        if (v < 0 || v >= q.facetCount() || seen[v]) return;
        seen[v] = 1;
    }
    std::vector<int> cp = inducedColourPerm(q, col, vertexPerm);
    if (cp.empty()) return;
    out.push_back({std::move(vertexPerm), std::move(cp)});
}

// Vertex permutation induced by a coordinate map on exact coordinates.
std::vector<int> permFromCoordinateMap(const GossetPolytope& q,
                                       const std::vector<std::vector<int>>& mappedCoords) {
    std::map<std::vector<int>, int> index;
    for (int v = 0; v < q.facetCount(); ++v) index[q.vertices[v]] = v;
    std::vector<int> perm;
    perm.reserve(q.facetCount());
    for (const auto& coords : mappedCoords) {
        auto it = index.find(coords);
        if (it == index.end()) return {};
        perm.push_back(it->second);
    }
    return perm;
}

std::vector<ColourSymmetry> schlafliSymmetries(const GossetPolytope& q, const Colouring& col) {
    std::vector<ColourSymmetry> out;
    std::vector<int> axes{0, 1, 2, 3, 4, 5};
    do {
        std::vector<std::vector<int>> mapped(q.facetCount());
        for (int v = 0; v < q.facetCount(); ++v) {
            std::vector<int> w(7);
            for (int i = 0; i < 6; ++i) w[axes[i]] = q.vertices[v][i];
            w[6] = q.vertices[v][6];
            mapped[v] = std::move(w);
        }
        std::vector<int> perm = permFromCoordinateMap(q, mapped);
        if (!perm.empty()) tryCandidate(q, col, std::move(perm), out);
    } while (std::next_permutation(axes.begin(), axes.end()));
    return out;
}

bool isFanoLinePreserving(const std::array<int, 7>& pointMap) {
    const auto& fano = FanoPlane::instance();
    std::set<std::set<int>> lines;
    for (const auto& l : fano.lines) lines.insert({l[0], l[1], l[2]});
    for (const auto& l : fano.lines) {
        std::set<int> image{pointMap[l[0] - 1], pointMap[l[1] - 1], pointMap[l[2] - 1]};
        if (!lines.count(image)) return false;
    }
    return true;
}

std::vector<ColourSymmetry> octonionSymmetries(const GossetPolytope& q, const Colouring& col) {
    std::vector<ColourSymmetry> out;

    std::vector<std::array<int, 7>> collineations;
    std::array<int, 7> pointMap{1, 2, 3, 4, 5, 6, 7};
    std::sort(pointMap.begin(), pointMap.end());
    do {
        if (isFanoLinePreserving(pointMap)) collineations.push_back(pointMap);
    } while (std::next_permutation(pointMap.begin(), pointMap.end()));

    // Generating family: every collineation with untouched signs, plus
    // adjacent-coordinate sign-pair flips with the identity collineation.
    // Pair flips generate all even sign patterns under closure.
    std::vector<int> signPatterns{0};
    for (int i = 0; i < 7; ++i) signPatterns.push_back((1 << i) | (1 << (i + 1)));

    auto addCandidate = [&](const std::array<int, 7>& sigma, int signs) {
        std::vector<std::vector<int>> mapped(q.facetCount());
        for (int v = 0; v < q.facetCount(); ++v) {
            std::vector<int> w(8, 0);
            int s0 = (signs & 1) ? -1 : 1;
            w[0] = s0 * q.vertices[v][0];
            for (int i = 1; i <= 7; ++i) {
                int s = (signs & (1 << i)) ? -1 : 1;
                w[sigma[i - 1]] = s * q.vertices[v][i];
            }
            mapped[v] = std::move(w);
        }
        std::vector<int> perm = permFromCoordinateMap(q, mapped);
        if (!perm.empty()) tryCandidate(q, col, std::move(perm), out);
    };

    const std::array<int, 7> identity{1, 2, 3, 4, 5, 6, 7};
    for (const auto& sigma : collineations) addCandidate(sigma, 0);
    for (int signs : signPatterns)
        if (signs != 0) addCandidate(identity, signs);
    return out;
}

} // namespace

std::vector<ColourSymmetry> colourSymmetries(const GossetPolytope& q, const Colouring& col) {
    switch (q.n) {
        case 6: return schlafliSymmetries(q, col);
        case 7:
        case 8: return octonionSymmetries(q, col);
        default: return {};
    }
}

std::vector<std::vector<int>> colourPerms(const std::vector<ColourSymmetry>& syms) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    for (const auto& s : syms) {
        bool identity = true;
        for (std::size_t i = 0; i < s.colourPerm.size(); ++i)
            if (s.colourPerm[i] != static_cast<int>(i)) { identity = false; break; }
        if (identity) continue;
        if (seen.insert(s.colourPerm).second) out.push_back(s.colourPerm);
    }
    return out;
}

} // namespace gosset
