#include "doctest.h"

#include <map>
#include <set>

#include "gosset/manifold.hpp"
#include "gosset/octonion.hpp"
#include "gosset/polytope.hpp"

using namespace gosset;

namespace {

const GossetPolytope& poly(int n) {
    static std::map<int, GossetPolytope> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, buildComplete(n)).first;
    return it->second;
}

} // namespace

TEST_CASE("builtin colourings have the published class structure") {
    struct Row { int n, colours, classSize; };
    for (Row r : {Row{3, 3, 2}, Row{4, 5, 2}, Row{5, 8, 2}, Row{6, 9, 3}, Row{7, 14, 4},
                  Row{8, 15, 16}}) {
        const GossetPolytope& q = poly(r.n);
        Colouring col = builtinColouring(q);
        CHECK(col.colourCount == r.colours);
        CHECK_FALSE(validateColouring(q.adjacency, col).has_value());
        for (const auto& cls : col.classes())
            CHECK(static_cast<int>(cls.size()) == r.classSize);
    }
}

TEST_CASE("n=8 colour classes are the hextets") {
    const GossetPolytope& q = poly(8);
    Colouring col = builtinColouring(q);
    const auto& hx = hextetIndexSets();
    for (int h = 0; h < 15; ++h)
        for (int v : hx[h]) CHECK(col.of[v] == h);
}

TEST_CASE("n=6 colour-1 class matches the listed triple") {
    const GossetPolytope& q = poly(6);
    Colouring col = builtinColouring(q);
    std::set<std::vector<int>> got;
    for (int v = 0; v < 27; ++v)
        if (col.of[v] == 0) got.insert(q.vertices[v]);
    std::set<std::vector<int>> want = {{-1, 0, 0, 0, 0, 0, 0},
                                       {1, 1, 0, 0, 0, 0, 1},
                                       {1, 0, 1, 1, 1, 1, 2}};
    CHECK(got == want);
}

TEST_CASE("n=3 classes are opposite prism faces") {
    const GossetPolytope& q = poly(3);
    Colouring col = builtinColouring(q);
    for (const auto& cls : col.classes()) {
        REQUIRE(cls.size() == 2);
        CHECK_FALSE(q.adjacency.adjacent(cls[0], cls[1]));
    }
}

TEST_CASE("pair colouring family for n=4 comes from the Petersen graph") {
    const GossetPolytope& q = poly(4);
    // Non-adjacency graph of the rectified simplex is Petersen: 3-regular.
    Graph non = q.adjacency.complement();
    CHECK(non.isRegular(3));
    CHECK(enumeratePairColourings(q.adjacency).size() == 6);
}

TEST_CASE("pair colouring family for n=5") {
    const GossetPolytope& q = poly(5);
    Graph non = q.adjacency.complement();
    CHECK(non.isRegular(5)); // five non-neighbours per vertex
    auto family = enumeratePairColourings(q.adjacency);
    CHECK(!family.empty());
    for (const auto& col : family) {
        CHECK(col.colourCount == 8);
        CHECK_FALSE(validateColouring(q.adjacency, col).has_value());
    }
}

TEST_CASE("Betti numbers for n=3,4,5,6") {
    CHECK(manifoldBetti(poly(3), builtinColouring(poly(3))) ==
          std::vector<long long>{1, 3, 2});
    CHECK(manifoldBetti(poly(4), builtinColouring(poly(4))) ==
          std::vector<long long>{1, 5, 10, 4});
    BettiSumOptions opts;
    opts.threads = 4;
    CHECK(manifoldBetti(poly(5), builtinColouring(poly(5)), opts) ==
          std::vector<long long>{1, 24, 120, 136, 39});
    std::vector<long long> b6 = manifoldBetti(poly(6), builtinColouring(poly(6)), opts);
    CHECK(b6 == std::vector<long long>{1, 18, 183, 411, 207, 26});
    long long alternating = 0;
    for (std::size_t k = 0; k < b6.size(); ++k)
        alternating += (k % 2 == 0) ? b6[k] : -b6[k];
    CHECK(alternating == -64);
}

TEST_CASE("Euler characteristics") {
    EulerPair e4 = eulerCharacteristics(poly(4), 5);
    CHECK(e4.chiP == Frac(1, 16));
    CHECK(e4.chiM == 2);

    EulerPair e6 = eulerCharacteristics(poly(6), 9);
    CHECK(e6.chiP == Frac(-1, 8));
    CHECK(e6.chiM == -64);

    EulerPair e8 = eulerCharacteristics(poly(8), 15);
    CHECK(e8.chiP == Frac(17, 2));
    CHECK(e8.chiM == 278528);

    for (int n : {3, 5, 7}) {
        EulerPair e = eulerCharacteristics(poly(n), 3);
        CHECK(e.chiP == Frac(0));
        CHECK(e.chiM == 0);
    }
}

TEST_CASE("cusp censuses") {
    struct Row { int n; long long total; };
    for (Row r : {Row{3, 3}, Row{4, 5}, Row{5, 40}, Row{6, 27}, Row{7, 4032}, Row{8, 65280}}) {
        const GossetPolytope& q = poly(r.n);
        CuspCensus census = cuspCensus(q, builtinColouring(q));
        CHECK(census.totalCusps == r.total);
    }

    // Breakdown by c' for n=5, 7, 8.
    auto breakdown = [&](int n) {
        std::map<int, int> byType;
        const GossetPolytope& q = poly(n);
        for (const auto& rec : cuspCensus(q, builtinColouring(q)).perVertex)
            ++byType[rec.distinctColours];
        return byType;
    };
    CHECK(breakdown(5) == std::map<int, int>{{4, 2}, {8, 8}});
    CHECK(breakdown(7) == std::map<int, int>{{6, 14}, {12, 112}});
    CHECK(breakdown(8) == std::map<int, int>{{7, 240}, {14, 1920}});

    // n=6: every ideal vertex sees all 9 colours with exactly one repeated
    // opposite pair.
    const GossetPolytope& q6 = poly(6);
    for (const auto& rec : cuspCensus(q6, builtinColouring(q6)).perVertex) {
        CHECK(rec.distinctColours == 9);
        int doubled = 0;
        for (int a : rec.circleMultipliers)
            if (a == 2) ++doubled;
        CHECK(doubled == 1);
    }
}

TEST_CASE("colour classes never beat the disjoint-facet maximum") {
    for (int n = 3; n <= 7; ++n) {
        const GossetPolytope& q = poly(n);
        int mis = maxDisjointFacets(q);
        int expected[] = {2, 2, 2, 3, 4};
        CHECK(mis == expected[n - 3]);
        for (const auto& cls : builtinColouring(q).classes())
            CHECK(static_cast<int>(cls.size()) <= mis);
    }
}

TEST_CASE("volumes to twelve digits") {
    CHECK(volumeP(3).value == doctest::Approx(0.9159655941772190).epsilon(1e-12));
    CHECK(volumeP(5).value == doctest::Approx(7.0 / 8 * 1.2020569031595943).epsilon(1e-12));
    CHECK(volumeP(7).value == doctest::Approx(8 * 0.9889445517411053).epsilon(1e-12));

    CHECK(volumeM(4, 5).value == doctest::Approx(26.318945069571930).epsilon(1e-12));
    CHECK(volumeM(5, 8).value == doctest::Approx(224 * 1.2020569031595943).epsilon(1e-12));
    CHECK(volumeM(7, 14).value == doctest::Approx(131072 * 0.9889445517411053).epsilon(1e-12));
    CHECK(volumeM(6, 9).value == doctest::Approx(512 * 2.0670851120199880).epsilon(1e-9));
    CHECK(volumeM(8, 15).value == doctest::Approx(4456448.0 * 97.409091034002437 / 105).epsilon(1e-9));
}

TEST_CASE("reports serialize with table rows") {
    const GossetPolytope& q = poly(4);
    ManifoldReport r = manifoldReport(q, builtinColouring(q));
    CHECK(manifoldReportCsvRow(r) == "M4,2,5,10,4,0,0,0,0,5");
    nlohmann::json j = manifoldReportToJson(r);
    CHECK(j["chiM"] == 2);
    CHECK(j["betti"] == std::vector<long long>{1, 5, 10, 4});
}
