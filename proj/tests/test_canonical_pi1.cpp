#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "gosset/canonical.hpp"
#include "gosset/complex.hpp"
#include "gosset/pi1.hpp"
#include "gosset/polytope.hpp"

using namespace gosset;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.vertexCount());
    for (int a = 0; a < g.vertexCount(); ++a)
        for (int b = a + 1; b < g.vertexCount(); ++b)
            if (g.adjacent(a, b)) h.addEdge(perm[a], perm[b]);
    return h;
}

Graph randomGraph(std::mt19937& rng, int n, int pct) {
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (static_cast<int>(rng() % 100) < pct) g.addEdge(a, b);
    return g;
}

bool bruteIsomorphic(const Graph& g, const Graph& h) {
    int n = g.vertexCount();
    if (h.vertexCount() != n) return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n && ok; ++b)
                if (g.adjacent(a, b) != h.adjacent(perm[a], perm[b])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph completeMultipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    std::vector<int> cls;
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (int i = 0; i < parts[c]; ++i) cls.push_back(static_cast<int>(c));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (cls[a] != cls[b]) g.addEdge(a, b);
    return g;
}

} // namespace

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = randomGraph(rng, 12 + static_cast<int>(rng() % 8), 40);
        CanonicalCertificate base = canonicalForm(g);
        for (int shuffleTrial = 0; shuffleTrial < 40; ++shuffleTrial) {
            std::vector<int> perm(g.vertexCount());
            for (int i = 0; i < g.vertexCount(); ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonicalForm(permuted(g, perm)) == base);
        }
    }
}

TEST_CASE("equal certificates exactly for isomorphic graphs") {
    // All graphs on 5 vertices, grouped by certificate, cross-checked with
    // permutation search.
    std::vector<Graph> graphs;
    std::vector<CanonicalCertificate> certs;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        Graph g(5);
        int bit = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b, ++bit)
                if (mask & (1u << bit)) g.addEdge(a, b);
        graphs.push_back(g);
        certs.push_back(canonicalForm(g));
    }
    std::mt19937 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t i = rng() % graphs.size(), j = rng() % graphs.size();
        CHECK((certs[i] == certs[j]) == bruteIsomorphic(graphs[i], graphs[j]));
    }
    // Count of isomorphism classes of graphs on 5 unlabelled vertices.
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& c : certs) distinct.insert(c.adjacencyBits);
    CHECK(distinct.size() == 34);
}

TEST_CASE("canonical form on vertex-transitive graphs with many symmetries") {
    GossetPolytope q = buildGossetPolytope(6);
    CanonicalCertificate base = canonicalForm(q.adjacency);
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        std::vector<int> perm(27);
        for (int i = 0; i < 27; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonicalForm(permuted(q.adjacency, perm)) == base);
    }
}

TEST_CASE("pi1: spheres are simply connected") {
    Graph s3 = completeMultipartite({2, 2, 2, 2});
    FlagComplex c{&s3};
    Pi1Verdict v = pi1Trivial(InducedSubcomplex::whole(c));
    CHECK(v.kind == Pi1Kind::SimplyConnected);

    Graph s2 = completeMultipartite({2, 2, 2});
    FlagComplex c2{&s2};
    CHECK(pi1Trivial(InducedSubcomplex::whole(c2)).kind == Pi1Kind::SimplyConnected);
}

TEST_CASE("pi1: the circle is not simply connected") {
    Graph cyc(8);
    for (int i = 0; i < 8; ++i) cyc.addEdge(i, (i + 1) % 8);
    FlagComplex c{&cyc};
    Pi1Verdict v = pi1Trivial(InducedSubcomplex::whole(c));
    CHECK(v.kind == Pi1Kind::NotSimplyConnected);
    CHECK(v.h1Rank == 1);
}

TEST_CASE("pi1: cones and trees are contractible") {
    Graph tree(6);
    for (int i = 1; i < 6; ++i) tree.addEdge(i - 1, i);
    FlagComplex c{&tree};
    CHECK(pi1Trivial(InducedSubcomplex::whole(c)).kind == Pi1Kind::SimplyConnected);

    // Wheel: cycle plus dominating hub.
    Graph wheel(9);
    for (int i = 0; i < 8; ++i) {
        wheel.addEdge(i, (i + 1) % 8);
        wheel.addEdge(i, 8);
    }
    FlagComplex cw{&wheel};
    CHECK(pi1Trivial(InducedSubcomplex::whole(cw)).kind == Pi1Kind::SimplyConnected);
}

TEST_CASE("pi1 rejects disconnected input") {
    Graph g(2);
    FlagComplex c{&g};
    InducedSubcomplex both = InducedSubcomplex::whole(c);
    CHECK_THROWS(pi1Trivial(both));
}

TEST_CASE("pi1 on the full nerve of small polytopes") {
    // The nerve is the boundary sphere with orthoplex interiors removed;
    // for n=4 it stays simply connected (dimension 3, removed cells are
    // 3-dimensional), and pi1 must certify it.
    GossetPolytope q4 = buildGossetPolytope(4);
    FlagComplex c4{&q4.adjacency};
    CHECK(pi1Trivial(InducedSubcomplex::whole(c4)).kind == Pi1Kind::SimplyConnected);

    GossetPolytope q5 = buildGossetPolytope(5);
    FlagComplex c5{&q5.adjacency};
    CHECK(pi1Trivial(InducedSubcomplex::whole(c5)).kind == Pi1Kind::SimplyConnected);
}
