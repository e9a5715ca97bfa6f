// Exact octonion arithmetic over half-integers, the Fano multiplication
// rule, and the derived vertex sets of the Gosset polytopes 4_21 and 3_21:
// hextets, quartets, and the quaternion-generated status seed.
//
// Coordinates are stored in quarters (value = q[i]/4) along the basis
// (1, e1, ..., e7), so every product of half-integer octonions is exact.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gosset {

struct Octonion {
    std::array<int, 8> q{}; // quarters: coefficient i equals q[i]/4

    static Octonion zero() { return Octonion{}; }
    static Octonion unit(int i, int sign = 1) {
        Octonion o;
        o.q[i] = 4 * sign;
        return o;
    }
    // From doubled coefficients (coefficient i equals twice[i]/2).
    static Octonion fromHalves(const std::array<int, 8>& twice) {
        Octonion o;
        for (int i = 0; i < 8; ++i) o.q[i] = 2 * twice[i];
        return o;
    }

    bool isHalfInteger() const {
        for (int v : q)
            if (v & 1) return false;
        return true;
    }

    // 16 * |x|^2, always an exact integer.
    long long norm16() const {
        long long s = 0;
        for (int v : q) s += static_cast<long long>(v) * v;
        return s;
    }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.q[i] = a.q[i] + b.q[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.q[i] = a.q[i] - b.q[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.q[i] = -a.q[i];
        return r;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.q == b.q; }
    friend auto operator<=>(const Octonion& a, const Octonion& b) = default;

    std::string str() const;
};

// 16 * <a,b> (Euclidean scalar product of coefficient vectors).
long long scalar16(const Octonion& a, const Octonion& b);

// Fano-rule product: e_i^2 = -1 and e_n e_{n+1} = e_{n+3} with subscripts
// mod 7, sign by cyclic orientation of the line.
Octonion operator*(const Octonion& a, const Octonion& b);

struct FanoPlane {
    // Seven cyclically ordered triples {n, n+1, n+3}, indices in 1..7.
    std::array<std::array<int, 3>, 7> lines;

    static const FanoPlane& instance();
    // The unique line through two distinct points of 1..7.
    const std::array<int, 3>& lineThrough(int i, int j) const;
    // e_i * e_j = sign * e_k for distinct i, j in 1..7.
    std::pair<int, int> basisProduct(int i, int j) const; // (k, sign)
};

enum class UnitSetKind { S, UnitQuaternionSet, Hextet, Quartet, Octet };

struct UnitSet {
    UnitSetKind kind;
    std::vector<Octonion> elements;
};

// The 16 octonions {+-1, +-e_i}.
const UnitSet& unitOctonions();
// The quaternion set Q = {+-1, +-e1, +-e2, +-e4}.
const UnitSet& unitQuaternions();

// The 240 vertices of 4_21, in hextet-major order: the hextet of 1 first,
// then for each Fano line n = 1..7 the even-parity hextet followed by the
// odd-parity one; within a hextet, descending coordinate order. Vertex 0 is
// the octonion 1.
const std::vector<Octonion>& gosset421Vertices();

// Hextet index (0..14) of a 4_21 vertex, by the parity rule.
int hextetOf(const Octonion& v);

// The 15 hextets, as index sets into gosset421Vertices().
const std::vector<std::vector<int>>& hextetIndexSets();
std::vector<UnitSet> hextets();

// Index of a vertex in gosset421Vertices(), or -1.
int vertexIndex421(const Octonion& v);

// The 56 vertices of 3_21: the neighbours of 1 in 4_21 (scalar product 1/2),
// in the order inherited from gosset421Vertices().
const std::vector<Octonion>& gosset321Vertices();

// The 14 quartets partitioning the 56 vertices of 3_21, as index quadruples
// into gosset321Vertices(). Quartet 2*(n-1)+p holds the vertices
// (1 +- e_n +- e_{n+1} +- e_{n+3})/2 with minus-sign parity p.
const std::vector<std::array<int, 4>>& quartetIndexSets();
std::vector<UnitSet> quartets();

// Status seed for 4_21: in each hextet the 8 left-multiples of the base
// element by the quaternion set get status O (flag 1), the other 8 get I
// (flag 0). Base elements: 1 and (+-1 + e_n + e_{n+1} + e_{n+3})/2.
std::vector<std::uint8_t> stateSeed421();

} // namespace gosset
