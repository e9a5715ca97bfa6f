#include "gosset/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "gosset/homology.hpp"

namespace gosset {

const char* pi1KindName(Pi1Kind k) {
    switch (k) {
        case Pi1Kind::SimplyConnected: return "simply-connected";
        case Pi1Kind::NotSimplyConnected: return "not-simply-connected";
        default: return "unknown";
    }
}

namespace {

// Generator aliasing with signs: each class resolves to sign * root, or to
// the identity when killed.
struct AliasTable {
    std::vector<int> parent;
    std::vector<int> sign; // relative to parent
    std::vector<char> dead;

    explicit AliasTable(int n) : parent(n), sign(n, 1), dead(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, int> find(int g) { // (root, sign)
        if (parent[g] == g) return {g, 1};
        auto [r, s] = find(parent[g]);
        parent[g] = r;
        sign[g] *= s;
        return {r, sign[g]};
    }
    bool isDead(int g) { return dead[find(g).first]; }
    void kill(int g) { dead[find(g).first] = 1; }
    // Impose a = rel * b (rel = +-1). A contradiction a = -a is torsion,
    // not an elimination; the offending relator stays in the presentation,
    // so nothing is recorded here.
    bool identify(int a, int b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) return false;
        bool wasDead = dead[ra];
        parent[ra] = rb;
        sign[ra] = sa * rel * sb;
        if (wasDead) dead[rb] = 1;
        return true;
    }
};

using Word = std::vector<int>; // letters +-(gen+1)

void freeReduce(Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter) out.pop_back();
        else out.push_back(letter);
    }
    // Cyclic reduction.
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) { ++lo; --hi; }
    w.assign(out.begin() + lo, out.begin() + hi);
}

struct Presentation {
    int generatorCount = 0;
    std::vector<Word> relators;

    long long resolveAll(AliasTable& alias) {
        long long work = 0;
        for (Word& r : relators) {
            Word out;
            out.reserve(r.size());
            for (int letter : r) {
                int g = std::abs(letter) - 1;
                if (alias.isDead(g)) continue;
                auto [root, sgn] = alias.find(g);
                int mapped = (letter > 0 ? sgn : -sgn) * (root + 1);
                if (!out.empty() && out.back() == -mapped) out.pop_back();
                else out.push_back(mapped);
            }
            work += static_cast<long long>(out.size()) + 1;
            freeReduce(out);
            r = std::move(out);
        }
        relators.erase(std::remove_if(relators.begin(), relators.end(),
                                      [](const Word& w) { return w.empty(); }),
                       relators.end());
        std::sort(relators.begin(), relators.end(), [](const Word& a, const Word& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
        return work;
    }
};

} // namespace

Pi1Verdict pi1Trivial(const InducedSubcomplex& c, long long budget) {
    if (!isConnected(c)) throw std::invalid_argument("pi1Trivial requires a connected complex");

    Pi1Verdict verdict;

    // First Betti number needs only the 2-skeleton; a nonzero value already
    // certifies a nontrivial fundamental group.
    BettiVector b2skel = bettiNumbersFromTable(cliquesByDimension(c, 2), false);
    if (b2skel.at(1) > 0) {
        verdict.kind = Pi1Kind::NotSimplyConnected;
        verdict.h1Rank = b2skel.at(1);
        return verdict;
    }

    const Graph& g = *c.parent->graph;

    // BFS spanning tree over the selected vertices.
    std::vector<char> seen(g.vertexCount(), 0);
    std::unordered_map<std::uint64_t, int> treeEdge; // packed (a<b) -> 1
    int root = c.selected.nextSetBit(0);
    std::queue<int> bfs;
    bfs.push(root);
    seen[root] = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        Bitset nb = g.neighbours(v) & c.selected;
        nb.forEach([&](int u) {
            if (seen[u]) return;
            seen[u] = 1;
            int a = std::min(u, v), b = std::max(u, v);
            treeEdge[(static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b)] = 1;
            bfs.push(u);
        });
    }

    // Generators: non-tree edges.
    std::unordered_map<std::uint64_t, int> genOf;
    Presentation pres;
    std::vector<int> order;
    c.selected.forEach([&](int v) { order.push_back(v); });
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            int a = order[i], b = order[j];
            if (!g.adjacent(a, b)) continue;
            std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
            if (treeEdge.count(key)) continue;
            genOf[key] = pres.generatorCount++;
        }

    auto letterOf = [&](int a, int b) -> int { // 0 when a tree edge
        int lo = std::min(a, b), hi = std::max(a, b);
        std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
        auto it = genOf.find(key);
        if (it == genOf.end()) return 0;
        int letter = it->second + 1;
        return a < b ? letter : -letter;
    };

    // One relator per triangle.
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (!g.adjacent(order[i], order[j])) continue;
            for (std::size_t k = j + 1; k < order.size(); ++k) {
                if (!g.adjacent(order[i], order[k]) || !g.adjacent(order[j], order[k])) continue;
                Word w;
                for (int letter : {letterOf(order[i], order[j]), letterOf(order[j], order[k]),
                                   letterOf(order[k], order[i])})
                    if (letter != 0) w.push_back(letter);
                freeReduce(w);
                if (!w.empty()) pres.relators.push_back(std::move(w));
            }
        }

    AliasTable alias(std::max(pres.generatorCount, 1));
    long long steps = 0;

    auto liveGenerators = [&]() {
        std::vector<char> liveRoot(pres.generatorCount, 0);
        int live = 0;
        for (int gi = 0; gi < pres.generatorCount; ++gi) {
            if (alias.isDead(gi)) continue;
            int r = alias.find(gi).first;
            if (!liveRoot[r]) { liveRoot[r] = 1; ++live; }
        }
        return live;
    };

    while (steps < budget) {
        steps += pres.resolveAll(alias);

        // Cheap moves: relators of length 1 kill a generator, relators of
        // length 2 identify two generators (unless they assert torsion).
        bool moved = false;
        for (const Word& r : pres.relators) {
            if (r.size() == 1) {
                alias.kill(std::abs(r[0]) - 1);
                moved = true;
            } else if (r.size() == 2) {
                int x = r[0], y = r[1];
                int gx = std::abs(x) - 1, gy = std::abs(y) - 1;
                if (gx == gy) continue; // x^2 = 1: torsion, not an elimination
                // x y = 1 resolves to g_x = -(sign pattern) g_y.
                int rel = ((x > 0) == (y > 0)) ? -1 : 1;
                if (alias.identify(gx, gy, rel)) moved = true;
            }
        }
        if (moved) continue;

        // Substitution: eliminate a generator occurring exactly once in some
        // relator, preferring the cheapest (shortest relator, fewest other
        // occurrences).
        std::unordered_map<int, long long> occ;
        for (const Word& r : pres.relators)
            for (int letter : r) ++occ[std::abs(letter) - 1];
        int bestRel = -1, bestPos = -1;
        long long bestCost = -1;
        for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
            const Word& r = pres.relators[ri];
            for (std::size_t pos = 0; pos < r.size(); ++pos) {
                int gi = std::abs(r[pos]) - 1;
                int inThis = 0;
                for (int letter : r)
                    if (std::abs(letter) - 1 == gi) ++inThis;
                if (inThis != 1) continue;
                long long cost = static_cast<long long>(r.size() - 1) * (occ[gi] - 1);
                if (bestCost < 0 || cost < bestCost) {
                    bestCost = cost;
                    bestRel = static_cast<int>(ri);
                    bestPos = static_cast<int>(pos);
                }
            }
        }
        if (bestRel < 0) break; // stuck

        Word r = pres.relators[bestRel];
        pres.relators.erase(pres.relators.begin() + bestRel);
        // Rotate so the eliminated letter leads: r = x w, hence x = w^{-1}.
        std::rotate(r.begin(), r.begin() + bestPos, r.end());
        int x = r[0];
        Word wInv; // the word replacing letter x
        for (std::size_t i = r.size(); i > 1; --i) wInv.push_back(-r[i - 1]);
        int gx = std::abs(x) - 1;
        for (Word& other : pres.relators) {
            Word out;
            for (int letter : other) {
                if (std::abs(letter) - 1 == gx) {
                    bool same = (letter > 0) == (x > 0);
                    if (same)
                        out.insert(out.end(), wInv.begin(), wInv.end());
                    else
                        for (std::size_t i = wInv.size(); i > 0; --i) out.push_back(-wInv[i - 1]);
                } else {
                    out.push_back(letter);
                }
            }
            steps += static_cast<long long>(out.size());
            freeReduce(out);
            other = std::move(out);
        }
        // The generator is gone from every relator; retire it.
        alias.kill(gx);
        if (steps >= budget) break;
    }

    verdict.stepsUsed = steps;
    int live = liveGenerators();
    if (pres.relators.empty()) {
        if (live == 0) {
            verdict.kind = Pi1Kind::SimplyConnected;
        } else {
            // Free of positive rank; b1 over Q equals that rank.
            verdict.kind = Pi1Kind::NotSimplyConnected;
            verdict.h1Rank = live;
        }
        return verdict;
    }
    if (live == 0) {
        verdict.kind = Pi1Kind::SimplyConnected;
        return verdict;
    }
    verdict.kind = Pi1Kind::Unknown;
    return verdict;
}

} // namespace gosset
