#include "doctest.h"

#include <set>

#include "gosset/complex.hpp"
#include "gosset/octonion.hpp"
#include "gosset/polytope.hpp"

using namespace gosset;

TEST_CASE("rejects out-of-range dimension") {
    CHECK_THROWS(buildGossetPolytope(2));
    CHECK_THROWS(buildGossetPolytope(9));
}

TEST_CASE("vertex and degree data for n=3..6") {
    struct Row { int n, verts, degree; };
    for (Row r : {Row{3, 6, 3}, Row{4, 10, 6}, Row{5, 16, 10}, Row{6, 27, 16}}) {
        GossetPolytope q = buildGossetPolytope(r.n);
        CHECK(static_cast<int>(q.vertices.size()) == r.verts);
        CHECK(q.adjacency.isRegular(r.degree));
    }
}

TEST_CASE("4_21 has 240 vertices of degree 56") {
    GossetPolytope q = buildGossetPolytope(8);
    CHECK(q.vertices.size() == 240);
    CHECK(q.adjacency.isRegular(56));
}

TEST_CASE("3_21 has 56 vertices of degree 27") {
    GossetPolytope q = buildGossetPolytope(7);
    CHECK(q.vertices.size() == 56);
    CHECK(q.adjacency.isRegular(27));
}

TEST_CASE("2_21: each vertex non-adjacent to exactly 10 others") {
    GossetPolytope q = buildGossetPolytope(6);
    for (int v = 0; v < 27; ++v) CHECK(26 - q.adjacency.degree(v) == 10);
}

TEST_CASE("facet families match the known counts") {
    for (int n = 3; n <= 8; ++n) {
        GossetPolytope q = buildComplete(n);
        PolytopeCounts want = expectedCounts(n);
        CHECK(static_cast<int>(q.simplexFacets.size()) == want.finite);
        CHECK(static_cast<int>(q.orthoplexFacets.size()) == want.ideal);
        for (const auto& f : q.orthoplexFacets)
            CHECK(static_cast<int>(f.pairs.size()) == n - 1);
        // Simplex facets are cliques.
        for (const auto& s : q.simplexFacets)
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    CHECK(q.adjacency.adjacent(s[i], s[j]));
    }
}

TEST_CASE("4_21 zero-product pair census") {
    GossetPolytope q = buildComplete(8);
    // Per vertex: 240 = 1 + 56 + 126 + 56 + 1 over products 1, 1/2, 0, -1/2, -1.
    const auto& verts = gosset421Vertices();
    for (int v : {0, 17, 133}) {
        int byProduct[5] = {0, 0, 0, 0, 0};
        for (int u = 0; u < 240; ++u) {
            long long s = scalar16(verts[v], verts[u]);
            int slot = s == 16 ? 0 : s == 8 ? 1 : s == 0 ? 2 : s == -8 ? 3 : 4;
            ++byProduct[slot];
        }
        CHECK(byProduct[0] == 1);
        CHECK(byProduct[1] == 56);
        CHECK(byProduct[2] == 126);
        CHECK(byProduct[3] == 56);
        CHECK(byProduct[4] == 1);
    }
    // 2160 facets x 7 pairs = 15120 = all zero-product pairs.
    long long pairs = 0;
    for (const auto& f : q.orthoplexFacets) pairs += static_cast<long long>(f.pairs.size());
    CHECK(pairs == 15120);
}

TEST_CASE("vertex figure incidences tie 3_21 to 4_21") {
    GossetPolytope q8 = buildComplete(8);
    // Simplex facets through a fixed vertex: 17280 * 8 / 240 = 576.
    long long throughV = 0;
    for (const auto& s : q8.simplexFacets)
        for (int v : s)
            if (v == 0) ++throughV;
    CHECK(throughV == 576);
    long long orthoThroughV = 0;
    for (const auto& f : q8.orthoplexFacets)
        for (int v : f.vertices())
            if (v == 0) ++orthoThroughV;
    CHECK(orthoThroughV == 126);
}

TEST_CASE("face vectors and Euler characteristics") {
    GossetPolytope q3 = buildComplete(3);
    auto f3 = faceVector(q3);
    CHECK(f3[0] == 2);
    CHECK(f3[2] == 6);
    CHECK(eulerCharacteristicP(q3) == Frac(0));

    GossetPolytope q4 = buildComplete(4);
    auto f4 = faceVector(q4);
    CHECK(f4[0] == 5);
    CHECK(eulerCharacteristicP(q4) == Frac(1, 16));

    GossetPolytope q5 = buildComplete(5);
    CHECK(eulerCharacteristicP(q5) == Frac(0));

    GossetPolytope q6 = buildComplete(6);
    CHECK(eulerCharacteristicP(q6) == Frac(-1, 8));

    GossetPolytope q7 = buildComplete(7);
    CHECK(eulerCharacteristicP(q7) == Frac(0));

    GossetPolytope q8 = buildComplete(8);
    auto f8 = faceVector(q8);
    CHECK(f8[0] == 17280);
    CHECK(eulerCharacteristicP(q8) == Frac(17, 2));
}

TEST_CASE("json round trip revalidates") {
    GossetPolytope q = buildComplete(5);
    nlohmann::json j = polytopeToJson(q);
    GossetPolytope back = polytopeFromJson(j);
    CHECK(back.vertices == q.vertices);
    CHECK(back.simplexFacets == q.simplexFacets);
    CHECK(back.orthoplexFacets.size() == q.orthoplexFacets.size());

    nlohmann::json bad = j;
    bad["simplexFacets"] = std::vector<std::vector<int>>{};
    CHECK_THROWS(polytopeFromJson(bad));
}
