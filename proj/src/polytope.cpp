#include "gosset/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gosset/complex.hpp"
#include "gosset/octonion.hpp"

namespace gosset {

PolytopeCounts expectedCounts(int n) {
    switch (n) {
        case 3: return {6, 3, 2, 3};
        case 4: return {10, 5, 5, 6};
        case 5: return {16, 10, 16, 10};
        case 6: return {27, 27, 72, 16};
        case 7: return {56, 126, 576, 27};
        case 8: return {240, 2160, 17280, 56};
        default: throw std::invalid_argument("n must be in 3..8");
    }
}

namespace {

int diffCount(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

long long lorentz7(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (int i = 0; i < 6; ++i) s += static_cast<long long>(a[i]) * b[i];
    return s - static_cast<long long>(a[6]) * b[6];
}

long long scalarProduct(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

GossetPolytope buildPrism() {
    GossetPolytope q;
    q.n = 3;
    q.coordUnit = "integer";
    // Vertices 0,1,2: one triangle; 3,4,5: the other; i joined to i+3.
    q.vertices = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                  {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    q.adjacency = Graph(6);
    for (int i = 0; i < 3; ++i) {
        q.adjacency.addEdge(i, (i + 1) % 3);
        q.adjacency.addEdge(3 + i, 3 + (i + 1) % 3);
        q.adjacency.addEdge(i, 3 + i);
    }
    return q;
}

GossetPolytope buildRectifiedSimplex() {
    GossetPolytope q;
    q.n = 4;
    q.coordUnit = "integer";
    std::vector<int> base = {0, 0, 0, 1, 1};
    std::sort(base.begin(), base.end());
    do {
        q.vertices.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(q.vertices.begin(), q.vertices.end());
    q.adjacency = Graph(static_cast<int>(q.vertices.size()));
    for (std::size_t a = 0; a < q.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < q.vertices.size(); ++b)
            if (diffCount(q.vertices[a], q.vertices[b]) == 2)
                q.adjacency.addEdge(static_cast<int>(a), static_cast<int>(b));
    return q;
}

GossetPolytope buildDemipenteract() {
    GossetPolytope q;
    q.n = 5;
    q.coordUnit = "integer";
    for (int m = 0; m < 32; ++m) {
        if (__builtin_popcount(m) % 2 == 0) continue; // odd number of -1s
        std::vector<int> v(5);
        for (int i = 0; i < 5; ++i) v[i] = (m & (1 << i)) ? -1 : 1;
        q.vertices.push_back(v);
    }
    std::sort(q.vertices.begin(), q.vertices.end());
    q.adjacency = Graph(16);
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            if (diffCount(q.vertices[a], q.vertices[b]) == 2) q.adjacency.addEdge(a, b);
    return q;
}

GossetPolytope buildSchlafli() {
    GossetPolytope q;
    q.n = 6;
    q.coordUnit = "integer";
    std::set<std::vector<int>> verts;
    std::vector<std::vector<int>> generators = {
        {-1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 1}, {0, 1, 1, 1, 1, 1, 2}};
    for (const auto& g : generators) {
        std::vector<int> head(g.begin(), g.begin() + 6);
        std::sort(head.begin(), head.end());
        do {
            std::vector<int> v = head;
            v.push_back(g[6]);
            verts.insert(v);
        } while (std::next_permutation(head.begin(), head.end()));
    }
    q.vertices.assign(verts.begin(), verts.end());
    if (q.vertices.size() != 27) throw std::logic_error("2_21 vertex count mismatch");
    q.adjacency = Graph(27);
    for (int a = 0; a < 27; ++a)
        for (int b = a + 1; b < 27; ++b)
            if (lorentz7(q.vertices[a], q.vertices[b]) == 0) q.adjacency.addEdge(a, b);
    return q;
}

GossetPolytope buildFromOctonions(int n) {
    GossetPolytope q;
    q.n = n;
    q.coordUnit = "quarter";
    const auto& verts = n == 8 ? gosset421Vertices() : gosset321Vertices();
    for (const Octonion& v : verts)
        q.vertices.emplace_back(v.q.begin(), v.q.end());
    int m = static_cast<int>(verts.size());
    q.adjacency = Graph(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (scalar16(verts[a], verts[b]) == 8) q.adjacency.addEdge(a, b);
    return q;
}

// Splits a candidate orthoplex vertex set into its opposite pairs: every
// vertex must be non-adjacent to exactly one other, all other pairs
// adjacent. Throws if the set is not a K_{kx2}.
OrthoplexFacet pairUpOrthoplex(const Graph& g, const std::vector<int>& verts, int k) {
    if (static_cast<int>(verts.size()) != 2 * k)
        throw std::logic_error("orthoplex facet has wrong vertex count");
    OrthoplexFacet facet;
    std::vector<int> partner(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int opposite = -1;
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (i == j) continue;
            if (!g.adjacent(verts[i], verts[j])) {
                if (opposite >= 0) throw std::logic_error("facet does not induce K_{kx2}");
                opposite = static_cast<int>(j);
            }
        }
        if (opposite < 0) throw std::logic_error("facet does not induce K_{kx2}");
        partner[i] = opposite;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::size_t j = partner[i];
        if (partner[j] != static_cast<int>(i)) throw std::logic_error("pairing inconsistent");
        if (i < j) facet.pairs.emplace_back(std::min(verts[i], verts[j]),
                                            std::max(verts[i], verts[j]));
    }
    std::sort(facet.pairs.begin(), facet.pairs.end());
    return facet;
}

} // namespace

GossetPolytope buildGossetPolytope(int n) {
    switch (n) {
        case 3: return buildPrism();
        case 4: return buildRectifiedSimplex();
        case 5: return buildDemipenteract();
        case 6: return buildSchlafli();
        case 7:
        case 8: return buildFromOctonions(n);
        default: throw std::invalid_argument("n must be in 3..8");
    }
}

std::vector<std::vector<int>> enumerateSimplexFacets(const GossetPolytope& q) {
    FlagComplex c{&q.adjacency};
    SimplexTable t = cliquesByDimension(InducedSubcomplex::whole(c), q.n);
    if (t.count(q.n) != 0)
        throw std::logic_error("clique of size n+1 found; flagness violated");
    std::vector<std::vector<int>> facets;
    int buf[9];
    for (SimplexKey key : t.byDim[q.n - 1]) {
        int m = unpackSimplex(key, buf);
        facets.emplace_back(buf, buf + m);
    }
    return facets;
}

std::vector<OrthoplexFacet> enumerateOrthoplexFacets(const GossetPolytope& q) {
    const Graph& g = q.adjacency;
    int k = q.n - 1;
    std::vector<OrthoplexFacet> out;

    auto fromVertexSet = [&](const std::vector<int>& verts) {
        out.push_back(pairUpOrthoplex(g, verts, k));
    };

    switch (q.n) {
        case 3: {
            // The three lateral squares of the prism.
            for (int i = 0; i < 3; ++i) {
                int j = (i + 1) % 3;
                fromVertexSet({i, j, 3 + i, 3 + j});
            }
            break;
        }
        case 4: {
            // One octahedron per coordinate hyperplane x_i = 0.
            for (int i = 0; i < 5; ++i) {
                std::vector<int> verts;
                for (int v = 0; v < g.vertexCount(); ++v)
                    if (q.vertices[v][i] == 0) verts.push_back(v);
                fromVertexSet(verts);
            }
            break;
        }
        case 5: {
            // One 4-orthoplex per hyperplane x_i = +-1.
            for (int i = 0; i < 5; ++i)
                for (int s : {1, -1}) {
                    std::vector<int> verts;
                    for (int v = 0; v < g.vertexCount(); ++v)
                        if (q.vertices[v][i] == s) verts.push_back(v);
                    fromVertexSet(verts);
                }
            break;
        }
        case 6: {
            // The 5-orthoplex opposite a vertex v consists of its
            // non-neighbours.
            for (int v = 0; v < g.vertexCount(); ++v) {
                std::vector<int> verts;
                for (int u = 0; u < g.vertexCount(); ++u)
                    if (u != v && !g.adjacent(u, v)) verts.push_back(u);
                fromVertexSet(verts);
            }
            break;
        }
        case 7:
        case 8: {
            // Seed from zero-scalar-product pairs: the facet through (u, w)
            // is {u, w} plus their common neighbours.
            auto isZeroPair = [&](int a, int b) {
                return scalarProduct(q.vertices[a], q.vertices[b]) == 0;
            };
            std::set<std::vector<int>> seen;
            long long zeroPairs = 0;
            std::map<std::pair<int, int>, int> pairUse;
            for (int u = 0; u < g.vertexCount(); ++u)
                for (int w = u + 1; w < g.vertexCount(); ++w) {
                    if (!isZeroPair(u, w)) continue;
                    ++zeroPairs;
                    std::vector<int> verts{u, w};
                    Bitset common = g.neighbours(u) & g.neighbours(w);
                    common.forEach([&](int x) { verts.push_back(x); });
                    std::sort(verts.begin(), verts.end());
                    if (!seen.insert(verts).second) continue;
                    fromVertexSet(verts);
                }
            // Every zero pair must be an opposite pair of exactly one facet.
            for (const auto& f : out)
                for (auto pr : f.pairs) {
                    if (!isZeroPair(pr.first, pr.second))
                        throw std::logic_error("opposite pair with nonzero product");
                    ++pairUse[pr];
                }
            long long used = 0;
            for (const auto& [pr, cnt] : pairUse) {
                if (cnt != 1) throw std::logic_error("zero pair shared by facets");
                ++used;
            }
            if (used != zeroPairs || used != static_cast<long long>(out.size()) * k)
                throw std::logic_error("zero pairs not evenly partitioned among facets");
            break;
        }
        default: throw std::invalid_argument("n must be in 3..8");
    }
    return out;
}

GossetPolytope buildComplete(int n) {
    GossetPolytope q = buildGossetPolytope(n);
    q.simplexFacets = enumerateSimplexFacets(q);
    q.orthoplexFacets = enumerateOrthoplexFacets(q);
    PolytopeCounts want = expectedCounts(n);
    if (q.facetCount() != want.facets) throw std::logic_error("facet count mismatch");
    if (static_cast<int>(q.simplexFacets.size()) != want.finite)
        throw std::logic_error("simplex facet count mismatch");
    if (static_cast<int>(q.orthoplexFacets.size()) != want.ideal)
        throw std::logic_error("orthoplex facet count mismatch");
    if (!q.adjacency.isRegular(want.degree)) throw std::logic_error("degree mismatch");
    return q;
}

std::vector<long long> faceVector(const GossetPolytope& q) {
    std::vector<long long> counts = cliqueCounts(q.adjacency, q.n + 1);
    if (counts[q.n + 1] != 0) throw std::logic_error("flagness violated");
    std::vector<long long> f(q.n + 1);
    for (int i = 0; i < q.n; ++i) f[i] = counts[q.n - i];
    f[q.n] = 1;
    return f;
}

Frac eulerCharacteristicP(const GossetPolytope& q) {
    std::vector<long long> f = faceVector(q);
    Frac chi;
    for (int i = 0; i <= q.n; ++i) {
        Frac term(f[i], 1LL << (q.n - i));
        chi = (i % 2 == 0) ? chi + term : chi - term;
    }
    return chi;
}

nlohmann::json polytopeToJson(const GossetPolytope& q) {
    nlohmann::json j;
    j["schema"] = "gosset-polytope";
    j["version"] = 1;
    j["n"] = q.n;
    j["coordUnit"] = q.coordUnit;
    j["vertices"] = q.vertices;
    std::vector<std::vector<int>> adj(q.facetCount());
    for (int v = 0; v < q.facetCount(); ++v)
        q.adjacency.neighbours(v).forEach([&](int u) { adj[v].push_back(u); });
    j["adjacency"] = adj;
    j["simplexFacets"] = q.simplexFacets;
    std::vector<std::vector<std::vector<int>>> ortho;
    for (const auto& f : q.orthoplexFacets) {
        std::vector<std::vector<int>> pairs;
        for (auto [a, b] : f.pairs) pairs.push_back({a, b});
        ortho.push_back(std::move(pairs));
    }
    j["orthoplexFacets"] = ortho;
    return j;
}

GossetPolytope polytopeFromJson(const nlohmann::json& j) {
    if (j.at("schema") != "gosset-polytope" || j.at("version") != 1)
        throw std::runtime_error("unsupported polytope document");
    GossetPolytope q;
    q.n = j.at("n").get<int>();
    q.coordUnit = j.at("coordUnit").get<std::string>();
    q.vertices = j.at("vertices").get<std::vector<std::vector<int>>>();
    auto adj = j.at("adjacency").get<std::vector<std::vector<int>>>();
    q.adjacency = Graph(static_cast<int>(adj.size()));
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        for (int u : adj[v])
            if (u > v) q.adjacency.addEdge(v, u);
    q.simplexFacets = j.at("simplexFacets").get<std::vector<std::vector<int>>>();
    for (const auto& pairs : j.at("orthoplexFacets")) {
        OrthoplexFacet f;
        for (const auto& p : pairs) f.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        q.orthoplexFacets.push_back(std::move(f));
    }
    // Cached documents are revalidated against the known counts.
    PolytopeCounts want = expectedCounts(q.n);
    if (q.facetCount() != want.facets ||
        static_cast<int>(q.simplexFacets.size()) != want.finite ||
        static_cast<int>(q.orthoplexFacets.size()) != want.ideal ||
        !q.adjacency.isRegular(want.degree))
        throw std::runtime_error("cached polytope fails validation");
    return q;
}

} // namespace gosset
