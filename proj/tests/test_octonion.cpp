#include "doctest.h"

#include <algorithm>
#include <set>

#include "gosset/octonion.hpp"

using namespace gosset;

namespace {

Octonion half(int c0, int i1, int s1, int i2, int s2, int i3, int s3) {
    std::array<int, 8> t{};
    t[0] = c0;
    t[i1] = s1;
    t[i2] = s2;
    t[i3] = s3;
    return Octonion::fromHalves(t);
}

} // namespace

TEST_CASE("fano plane structure") {
    const auto& fano = FanoPlane::instance();
    // Every pair of distinct indices lies on exactly one line.
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            int count = 0;
            for (const auto& l : fano.lines) {
                bool hasI = l[0] == i || l[1] == i || l[2] == i;
                bool hasJ = l[0] == j || l[1] == j || l[2] == j;
                if (hasI && hasJ) ++count;
            }
            CHECK(count == 1);
        }
    // Each line realizes e_n e_{n+1} = e_{n+3}.
    for (int n = 1; n <= 7; ++n) {
        const auto& l = fano.lines[n - 1];
        Octonion p = Octonion::unit(l[0]) * Octonion::unit(l[1]);
        CHECK(p == Octonion::unit(l[2]));
    }
}

TEST_CASE("basis products") {
    CHECK(Octonion::unit(1) * Octonion::unit(2) == Octonion::unit(4));
    CHECK(Octonion::unit(1) * Octonion::unit(1) == Octonion::unit(0, -1));
    CHECK(Octonion::unit(1) * Octonion::unit(6) == Octonion::unit(5, -1));
}

TEST_CASE("half-integer product") {
    Octonion a = half(1, 1, 1, 3, 1, 7, 1);  // (1+e1+e3+e7)/2
    Octonion b = half(1, 1, 1, 2, 1, 4, 1);  // (1+e1+e2+e4)/2
    Octonion expect = half(0, 1, 1, 3, 1, 4, 1) + Octonion::fromHalves([] {
        std::array<int, 8> t{};
        t[6] = 1;
        return t;
    }());
    CHECK(a * b == expect); // (e1+e3+e4+e6)/2
    // That product is not among the 240 vertices.
    CHECK(vertexIndex421(a * b) == -1);
}

TEST_CASE("anti-commutativity of distinct imaginary units") {
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (i == j) continue;
            CHECK(Octonion::unit(i) * Octonion::unit(j) ==
                  -(Octonion::unit(j) * Octonion::unit(i)));
        }
}

TEST_CASE("associator sign over all basis triples") {
    const auto& fano = FanoPlane::instance();
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) {
                Octonion lhs = (Octonion::unit(i) * Octonion::unit(j)) * Octonion::unit(k);
                Octonion rhs = Octonion::unit(i) * (Octonion::unit(j) * Octonion::unit(k));
                bool collinear;
                if (i == j || j == k || i == k) {
                    collinear = true;
                } else {
                    const auto& l = fano.lineThrough(i, j);
                    collinear = l[0] == k || l[1] == k || l[2] == k;
                }
                if (collinear)
                    CHECK(lhs == rhs);
                else
                    CHECK(lhs == -rhs);
            }
}

TEST_CASE("240 vertices, exact norms, no duplicates") {
    const auto& verts = gosset421Vertices();
    REQUIRE(verts.size() == 240);
    std::set<Octonion> distinct(verts.begin(), verts.end());
    CHECK(distinct.size() == 240);
    for (const auto& v : verts) CHECK(v.norm16() == 16);
    CHECK(verts[0] == Octonion::unit(0));
}

TEST_CASE("hextets partition by the parity rule") {
    const auto& sets = hextetIndexSets();
    REQUIRE(sets.size() == 15);
    for (const auto& s : sets) CHECK(s.size() == 16);

    // Hextet of 1 is {+-1, +-e_i}.
    std::set<Octonion> units;
    for (const auto& u : unitOctonions().elements) units.insert(u);
    for (int i : sets[0]) CHECK(units.count(gosset421Vertices()[i]) == 1);

    // Same-hextet scalar products are integers (16ths divisible by 16).
    for (const auto& s : sets)
        for (int a : s)
            for (int b : s)
                CHECK(scalar16(gosset421Vertices()[a], gosset421Vertices()[b]) % 16 == 0);
}

TEST_CASE("left multiplication by S: closure, hextet orbits, free transitivity") {
    const auto& verts = gosset421Vertices();
    const auto& S = unitOctonions().elements;

    // Closure of the 240 set under left multiplication by S.
    for (const auto& u : S)
        for (const auto& v : verts) CHECK(vertexIndex421(u * v) >= 0);

    // Orbit of (1+e1+e2+e4)/2 under S equals its parity hextet, elementwise.
    Octonion x = half(1, 1, 1, 2, 1, 4, 1);
    std::set<int> orbit;
    for (const auto& u : S) orbit.insert(vertexIndex421(u * x));
    const auto& hx = hextetIndexSets()[hextetOf(x)];
    CHECK(orbit == std::set<int>(hx.begin(), hx.end()));

    // Free and transitive within each hextet: 16 distinct products staying
    // in the hextet, for every hextet member.
    for (const auto& s : hextetIndexSets())
        for (int a : s) {
            std::set<int> prods;
            for (const auto& u : S) {
                int id = vertexIndex421(u * verts[a]);
                CHECK(hextetOf(verts[id]) == hextetOf(verts[a]));
                prods.insert(id);
            }
            CHECK(prods.size() == 16);
        }
}

TEST_CASE("norm multiplicativity on all vertex pairs") {
    const auto& verts = gosset421Vertices();
    for (const auto& a : verts)
        for (const auto& b : verts) CHECK((a * b).norm16() == 16);
}

TEST_CASE("quartets of 3_21") {
    const auto& q = quartetIndexSets();
    REQUIRE(q.size() == 14);
    const auto& verts = gosset321Vertices();
    REQUIRE(verts.size() == 56);

    // (1+e1+e2+e4)/2 and (1-e1-e2+e4)/2 share a quartet.
    Octonion a = half(1, 1, 1, 2, 1, 4, 1);
    Octonion b = half(1, 1, -1, 2, -1, 4, 1);
    int qa = -1, qb = -1;
    for (int k = 0; k < 14; ++k)
        for (int i : q[k]) {
            if (verts[i] == a) qa = k;
            if (verts[i] == b) qb = k;
        }
    CHECK(qa >= 0);
    CHECK(qa == qb);

    // Quartets are independent in the 3_21 adjacency (no scalar product 1/2).
    for (const auto& quad : q)
        for (int i : quad)
            for (int j : quad)
                if (i != j) CHECK(scalar16(verts[i], verts[j]) != 8);
}

TEST_CASE("status seed for 4_21") {
    auto seed = stateSeed421();
    REQUIRE(seed.size() == 240);

    CHECK(seed[vertexIndex421(Octonion::unit(0))] == 1); // 1 is O
    CHECK(seed[vertexIndex421(Octonion::unit(3))] == 0); // e3 is I

    int total = 0;
    for (const auto& hx : hextetIndexSets()) {
        int o = 0;
        for (int i : hx) o += seed[i];
        CHECK(o == 8);
        total += o;
    }
    CHECK(total == 120);
}
