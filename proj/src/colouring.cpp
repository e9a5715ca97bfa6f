#include "gosset/colouring.hpp"

#include <algorithm>
#include <stdexcept>

namespace gosset {

std::optional<ColouringIssue> validateColouring(const Graph& g, const Colouring& col) {
    if (static_cast<int>(col.of.size()) != g.vertexCount())
        return ColouringIssue{ColouringIssue::SizeMismatch, -1, -1};
    std::vector<char> used(col.colourCount, 0);
    for (int v = 0; v < g.vertexCount(); ++v) {
        if (col.of[v] < 0 || col.of[v] >= col.colourCount)
            return ColouringIssue{ColouringIssue::OutOfRange, v, -1};
        used[col.of[v]] = 1;
    }
    for (int c = 0; c < col.colourCount; ++c)
        if (!used[c]) return ColouringIssue{ColouringIssue::UnusedColour, c, -1};
    for (int a = 0; a < g.vertexCount(); ++a)
        for (int b = a + 1; b < g.vertexCount(); ++b)
            if (g.adjacent(a, b) && col.of[a] == col.of[b])
                return ColouringIssue{ColouringIssue::AdjacentSameColour, a, b};
    return std::nullopt;
}

namespace {

void matchingSearch(const Graph& g, std::vector<int>& partner,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
    int n = g.vertexCount();
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (partner[v] < 0) { u = v; break; }
    if (u < 0) {
        std::vector<std::pair<int, int>> pairs;
        for (int v = 0; v < n; ++v)
            if (partner[v] > v) pairs.emplace_back(v, partner[v]);
        out.push_back(std::move(pairs));
        return;
    }
    for (int w = u + 1; w < n; ++w) {
        if (partner[w] >= 0 || g.adjacent(u, w)) continue; // pair only disjoint facets
        partner[u] = w;
        partner[w] = u;
        matchingSearch(g, partner, out);
        partner[u] = -1;
        partner[w] = -1;
    }
}

} // namespace

std::vector<Colouring> enumeratePairColourings(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<int> partner(g.vertexCount(), -1);
    if (g.vertexCount() % 2 == 0) matchingSearch(g, partner, matchings);
    std::vector<Colouring> out;
    for (const auto& pairs : matchings) {
        Colouring col;
        col.colourCount = static_cast<int>(pairs.size());
        col.of.assign(g.vertexCount(), -1);
        // Pairs are already ordered by smallest member.
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            col.of[pairs[c].first] = static_cast<int>(c);
            col.of[pairs[c].second] = static_cast<int>(c);
        }
        out.push_back(std::move(col));
    }
    return out;
}

nlohmann::json colouringToJson(int n, const Colouring& col) {
    nlohmann::json colours = nlohmann::json::object();
    for (int v = 0; v < static_cast<int>(col.of.size()); ++v)
        colours[std::to_string(v)] = col.of[v] + 1;
    return nlohmann::json{{"n", n}, {"colours", colours}};
}

Colouring colouringFromJson(const nlohmann::json& j, int expectedFacets) {
    const auto& colours = j.at("colours");
    Colouring col;
    col.of.assign(expectedFacets, -1);
    int maxColour = 0;
    for (auto it = colours.begin(); it != colours.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= expectedFacets) throw std::runtime_error("facet index out of range");
        int c = it.value().get<int>();
        if (c < 1) throw std::runtime_error("colours are 1-based positive integers");
        col.of[v] = c - 1;
        maxColour = std::max(maxColour, c);
    }
    for (int v = 0; v < expectedFacets; ++v)
        if (col.of[v] < 0) throw std::runtime_error("missing colour for a facet");
    col.colourCount = maxColour;
    return col;
}

} // namespace gosset
