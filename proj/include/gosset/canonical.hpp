// Canonical forms for induced subcomplexes. A flag complex is determined by
// its 1-skeleton, so the certificate is a canonical adjacency matrix of the
// induced graph, computed by individualization-refinement with automorphism
// pruning. Two subcomplexes get equal certificates exactly when their
// induced graphs are isomorphic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gosset/complex.hpp"
#include "gosset/graph.hpp"

namespace gosset {

struct CanonicalCertificate {
    std::uint32_t vertexCount = 0;
    std::vector<std::uint64_t> adjacencyBits; // row-major upper triangle

    friend bool operator==(const CanonicalCertificate& a, const CanonicalCertificate& b) {
        return a.vertexCount == b.vertexCount && a.adjacencyBits == b.adjacencyBits;
    }
    friend bool operator<(const CanonicalCertificate& a, const CanonicalCertificate& b) {
        if (a.vertexCount != b.vertexCount) return a.vertexCount < b.vertexCount;
        return a.adjacencyBits < b.adjacencyBits;
    }

    std::size_t hash() const;
    std::string hexDigest() const; // short stable digest for reports
};

struct CanonicalCertificateHash {
    std::size_t operator()(const CanonicalCertificate& c) const { return c.hash(); }
};

CanonicalCertificate canonicalForm(const Graph& g);
CanonicalCertificate canonicalForm(const InducedSubcomplex& c);

} // namespace gosset
