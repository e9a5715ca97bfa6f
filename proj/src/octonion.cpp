#include "gosset/octonion.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace gosset {

std::string Octonion::str() const {
    static const char* names[8] = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
    std::string s;
    for (int i = 0; i < 8; ++i) {
        if (q[i] == 0) continue;
        if (!s.empty()) s += q[i] > 0 ? "+" : "-";
        else if (q[i] < 0) s += "-";
        int a = q[i] > 0 ? q[i] : -q[i];
        if (a != 4) s += std::to_string(a) + "/4*";
        s += names[i];
    }
    return s.empty() ? "0" : s;
}

long long scalar16(const Octonion& a, const Octonion& b) {
    long long s = 0;
    for (int i = 0; i < 8; ++i) s += static_cast<long long>(a.q[i]) * b.q[i];
    return s;
}

const FanoPlane& FanoPlane::instance() {
    static const FanoPlane fp = [] {
        FanoPlane f;
        auto wrap = [](int x) { return (x - 1) % 7 + 1; };
        for (int n = 1; n <= 7; ++n)
            f.lines[n - 1] = {n, wrap(n + 1), wrap(n + 3)};
        return f;
    }();
    return fp;
}

const std::array<int, 3>& FanoPlane::lineThrough(int i, int j) const {
    for (const auto& l : lines) {
        bool hasI = l[0] == i || l[1] == i || l[2] == i;
        bool hasJ = l[0] == j || l[1] == j || l[2] == j;
        if (hasI && hasJ) return l;
    }
    throw std::logic_error("no Fano line through pair");
}

std::pair<int, int> FanoPlane::basisProduct(int i, int j) const {
    const auto& l = lineThrough(i, j);
    // Cyclic successors within the line: l0 -> l1 -> l2 -> l0.
    for (int t = 0; t < 3; ++t) {
        int a = l[t], b = l[(t + 1) % 3], c = l[(t + 2) % 3];
        if (a == i && b == j) return {c, +1};
        if (a == j && b == i) return {c, -1};
    }
    throw std::logic_error("bad Fano line");
}

namespace {

struct BasisTable {
    // product e_i e_j = sign[i][j] * e_{idx[i][j]}, with e_0 = 1.
    int idx[8][8];
    int sign[8][8];
    BasisTable() {
        const auto& fano = FanoPlane::instance();
        for (int i = 0; i < 8; ++i) {
            idx[0][i] = i;
            sign[0][i] = 1;
            idx[i][0] = i;
            sign[i][0] = 1;
        }
        for (int i = 1; i < 8; ++i) {
            idx[i][i] = 0;
            sign[i][i] = -1;
        }
        for (int i = 1; i < 8; ++i)
            for (int j = 1; j < 8; ++j) {
                if (i == j) continue;
                auto [k, s] = fano.basisProduct(i, j);
                idx[i][j] = k;
                sign[i][j] = s;
            }
    }
};

const BasisTable& basisTable() {
    static const BasisTable t;
    return t;
}

} // namespace

Octonion operator*(const Octonion& a, const Octonion& b) {
    const BasisTable& t = basisTable();
    std::array<long long, 8> acc{};
    for (int i = 0; i < 8; ++i) {
        if (a.q[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (b.q[j] == 0) continue;
            acc[t.idx[i][j]] +=
                static_cast<long long>(t.sign[i][j]) * a.q[i] * b.q[j];
        }
    }
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        // 16ths; exact in quarters whenever both factors are half-integer.
        if (acc[i] % 4 != 0) throw std::domain_error("product leaves the quarter lattice");
        r.q[i] = static_cast<int>(acc[i] / 4);
    }
    return r;
}

const UnitSet& unitOctonions() {
    static const UnitSet s = [] {
        UnitSet u{UnitSetKind::S, {}};
        for (int i = 0; i < 8; ++i)
            for (int sg : {+1, -1}) u.elements.push_back(Octonion::unit(i, sg));
        return u;
    }();
    return s;
}

const UnitSet& unitQuaternions() {
    static const UnitSet s = [] {
        UnitSet u{UnitSetKind::UnitQuaternionSet, {}};
        for (int i : {0, 1, 2, 4})
            for (int sg : {+1, -1}) u.elements.push_back(Octonion::unit(i, sg));
        return u;
    }();
    return s;
}

namespace {

// -1 for a non-vertex; otherwise 0..14 in the canonical hextet order.
int hextetOfOrMinus1(const Octonion& v) {
    if (v.norm16() != 16 || !v.isHalfInteger()) return -1;
    int support = 0, nonzero = 0, minus = 0;
    for (int i = 0; i < 8; ++i) {
        if (v.q[i] == 0) continue;
        ++nonzero;
        support |= 1 << i;
        if (v.q[i] < 0) ++minus;
    }
    if (nonzero == 1) return 0; // +-1, +-e_i
    if (nonzero != 4) return -1;
    const auto& fano = FanoPlane::instance();
    for (int n = 1; n <= 7; ++n) {
        const auto& l = fano.lines[n - 1];
        int lineMask = (1 << l[0]) | (1 << l[1]) | (1 << l[2]);
        int type1 = 1 | lineMask;          // {1} union line
        int type2 = 0xfe & ~lineMask;      // complement of the line in e1..e7
        if (support == type1 || support == type2)
            return 1 + 2 * (n - 1) + (minus & 1);
    }
    return -1;
}

struct VertexData {
    std::vector<Octonion> vertices;            // 240, hextet-major
    std::vector<std::vector<int>> hextetIdx;   // 15 x 16
    std::map<Octonion, int> index;
};

const VertexData& vertexData() {
    static const VertexData data = [] {
        std::vector<std::vector<Octonion>> byHextet(15);
        auto add = [&](const Octonion& v) {
            int h = hextetOfOrMinus1(v);
            if (h < 0) throw std::logic_error("generated a non-vertex");
            byHextet[h].push_back(v);
        };
        for (const Octonion& u : unitOctonions().elements) add(u);
        const auto& fano = FanoPlane::instance();
        for (int n = 1; n <= 7; ++n) {
            const auto& l = fano.lines[n - 1];
            int comp[4], c = 0;
            for (int i = 1; i <= 7; ++i)
                if (i != l[0] && i != l[1] && i != l[2]) comp[c++] = i;
            for (int signs = 0; signs < 16; ++signs) {
                std::array<int, 8> t1{}, t2{};
                t1[0] = (signs & 1) ? -1 : 1;
                t1[l[0]] = (signs & 2) ? -1 : 1;
                t1[l[1]] = (signs & 4) ? -1 : 1;
                t1[l[2]] = (signs & 8) ? -1 : 1;
                for (int k = 0; k < 4; ++k) t2[comp[k]] = (signs & (1 << k)) ? -1 : 1;
                add(Octonion::fromHalves(t1));
                add(Octonion::fromHalves(t2));
            }
        }
        VertexData d;
        for (auto& hx : byHextet) {
            if (hx.size() != 16) throw std::logic_error("hextet size mismatch");
            std::sort(hx.begin(), hx.end(), [](const Octonion& a, const Octonion& b) { return b < a; });
        }
        for (int h = 0; h < 15; ++h) {
            d.hextetIdx.emplace_back();
            for (const Octonion& v : byHextet[h]) {
                d.hextetIdx.back().push_back(static_cast<int>(d.vertices.size()));
                d.index.emplace(v, static_cast<int>(d.vertices.size()));
                d.vertices.push_back(v);
            }
        }
        if (d.vertices.size() != 240 || d.index.size() != 240)
            throw std::logic_error("vertex count mismatch");
        return d;
    }();
    return data;
}

} // namespace

const std::vector<Octonion>& gosset421Vertices() { return vertexData().vertices; }

int hextetOf(const Octonion& v) {
    int h = hextetOfOrMinus1(v);
    if (h < 0) throw std::invalid_argument("not a vertex of 4_21");
    return h;
}

const std::vector<std::vector<int>>& hextetIndexSets() { return vertexData().hextetIdx; }

std::vector<UnitSet> hextets() {
    std::vector<UnitSet> out;
    for (const auto& idx : hextetIndexSets()) {
        UnitSet u{UnitSetKind::Hextet, {}};
        for (int i : idx) u.elements.push_back(gosset421Vertices()[i]);
        out.push_back(std::move(u));
    }
    return out;
}

int vertexIndex421(const Octonion& v) {
    const auto& ix = vertexData().index;
    auto it = ix.find(v);
    return it == ix.end() ? -1 : it->second;
}

const std::vector<Octonion>& gosset321Vertices() {
    static const std::vector<Octonion> verts = [] {
        std::vector<Octonion> out;
        const Octonion one = Octonion::unit(0);
        for (const Octonion& v : gosset421Vertices())
            if (scalar16(one, v) == 8) out.push_back(v);
        if (out.size() != 56) throw std::logic_error("3_21 vertex count mismatch");
        return out;
    }();
    return verts;
}

const std::vector<std::array<int, 4>>& quartetIndexSets() {
    static const std::vector<std::array<int, 4>> sets = [] {
        const auto& verts = gosset321Vertices();
        std::vector<std::vector<int>> buckets(14);
        for (int i = 0; i < 56; ++i) {
            int h = hextetOf(verts[i]); // 1..14 here; quartet = hextet - 1
            buckets[h - 1].push_back(i);
        }
        std::vector<std::array<int, 4>> out;
        for (const auto& b : buckets) {
            if (b.size() != 4) throw std::logic_error("quartet size mismatch");
            out.push_back({b[0], b[1], b[2], b[3]});
        }
        return out;
    }();
    return sets;
}

std::vector<UnitSet> quartets() {
    std::vector<UnitSet> out;
    for (const auto& idx : quartetIndexSets()) {
        UnitSet u{UnitSetKind::Quartet, {}};
        for (int i : idx) u.elements.push_back(gosset321Vertices()[i]);
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<std::uint8_t> stateSeed421() {
    const auto& verts = gosset421Vertices();
    std::vector<std::uint8_t> out(verts.size(), 0);
    std::vector<Octonion> bases;
    bases.push_back(Octonion::unit(0));
    const auto& fano = FanoPlane::instance();
    for (int n = 1; n <= 7; ++n) {
        const auto& l = fano.lines[n - 1];
        for (int re : {+1, -1}) {
            std::array<int, 8> t{};
            t[0] = re;
            t[l[0]] = t[l[1]] = t[l[2]] = 1;
            bases.push_back(Octonion::fromHalves(t));
        }
    }
    int flagged = 0;
    for (const Octonion& base : bases) {
        int h = hextetOf(base);
        for (const Octonion& u : unitQuaternions().elements) {
            Octonion p = u * base;
            int id = vertexIndex421(p);
            if (id < 0 || hextetOf(p) != h)
                throw std::logic_error("quaternion multiple left its hextet");
            if (!out[id]) { out[id] = 1; ++flagged; }
        }
    }
    if (flagged != 120) throw std::logic_error("status seed is not balanced");
    return out;
}

} // namespace gosset
