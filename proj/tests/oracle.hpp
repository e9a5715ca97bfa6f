// Independent brute-force homology oracle for small complexes. Simplices
// are found by subset enumeration and ranks are computed exactly over the
// rationals with dense fraction-free elimination. Deliberately shares no
// code with the library's homology path.

#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gosset/complex.hpp"
#include "gosset/graph.hpp"
#include "gosset/homology.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;

inline long long denseRank(std::vector<std::vector<Big>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t nr = m.size(), nc = m[0].size();
    long long rank = 0;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < nc && pr < nr; ++pc) {
        std::size_t sel = pr;
        while (sel < nr && m[sel][pc] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(m[sel], m[pr]);
        for (std::size_t r = pr + 1; r < nr; ++r) {
            if (m[r][pc] == 0) continue;
            Big f = m[r][pc], g = m[pr][pc];
            for (std::size_t c = pc; c < nc; ++c) m[r][c] = m[r][c] * g - m[pr][c] * f;
        }
        ++pr;
        ++rank;
    }
    return rank;
}

// All cliques of the graph induced on `keep`, grouped by size, each clique
// an ascending vertex list, lists sorted lexicographically.
inline std::vector<std::vector<std::vector<int>>> cliquesBySize(const gosset::Graph& g,
                                                                const gosset::Bitset& keep) {
    std::vector<int> verts;
    keep.forEach([&](int v) { verts.push_back(v); });
    int m = static_cast<int>(verts.size());
    std::vector<std::vector<std::vector<int>>> out(m + 1);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) subset.push_back(verts[i]);
        bool clique = true;
        for (std::size_t a = 0; a < subset.size() && clique; ++a)
            for (std::size_t b = a + 1; b < subset.size() && clique; ++b)
                if (!g.adjacent(subset[a], subset[b])) clique = false;
        if (clique) out[subset.size()].push_back(subset);
    }
    for (auto& level : out) std::sort(level.begin(), level.end());
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

inline gosset::BettiVector betti(const gosset::Graph& g, const gosset::Bitset& keep,
                                 bool reduced) {
    auto cliques = cliquesBySize(g, keep);
    gosset::BettiVector out;
    out.reduced = reduced;
    int top = static_cast<int>(cliques.size()) - 1; // top size; dimension top-1
    if (top < 1) {
        if (reduced) out.bTildeMinus1 = 1;
        return out;
    }
    // ranks[s] = rank of boundary from cliques of size s to size s-1.
    std::vector<long long> ranks(top + 2, 0);
    for (int s = 2; s <= top; ++s) {
        std::vector<std::vector<Big>> m(cliques[s - 1].size(),
                                        std::vector<Big>(cliques[s].size(), 0));
        for (std::size_t j = 0; j < cliques[s].size(); ++j)
            for (int drop = 0; drop < s; ++drop) {
                std::vector<int> face = cliques[s][j];
                face.erase(face.begin() + drop);
                auto it = std::lower_bound(cliques[s - 1].begin(), cliques[s - 1].end(), face);
                m[it - cliques[s - 1].begin()][j] = (drop % 2 == 0) ? 1 : -1;
            }
        ranks[s] = denseRank(std::move(m));
    }
    long long n0 = static_cast<long long>(cliques[1].size());
    out.b.assign(top, 0);
    out.b[0] = n0 - (reduced ? 1 : 0) - ranks[2];
    for (int k = 1; k < top; ++k)
        out.b[k] = static_cast<long long>(cliques[k + 1].size()) - ranks[k + 1] - ranks[k + 2];
    while (!out.b.empty() && out.b.back() == 0) out.b.pop_back();
    return out;
}

} // namespace oracle
