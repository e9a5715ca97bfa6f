#include "gosset/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "gosset/octonion.hpp"
#include "gosset/parallel.hpp"

namespace gosset {

namespace {

Bitset colourSelection(const Colouring& col, std::uint32_t mask, int vertexCount) {
    Bitset sel(vertexCount);
    for (int v = 0; v < vertexCount; ++v)
        if (mask & (1u << col.of[v])) sel.set(v);
    return sel;
}

std::vector<long long> bettiTargets(int n) {
    switch (n) {
        case 4: return {1, 5, 10, 4};
        case 5: return {1, 24, 120, 136, 39};
        default: return {};
    }
}

// Multiset of (c', count) the census must reproduce for the reconstructed
// pair colourings.
std::map<int, int> censusTargets(int n) {
    switch (n) {
        case 4: return {{5, 5}};
        case 5: return {{8, 8}, {4, 2}};
        default: return {};
    }
}

Colouring reconstructPairColouring(const GossetPolytope& q) {
    std::vector<Colouring> family = enumeratePairColourings(q.adjacency);
    std::vector<long long> wantBetti = bettiTargets(q.n);
    std::map<int, int> wantCensus = censusTargets(q.n);
    const Colouring* best = nullptr;
    for (const Colouring& col : family) {
        if (validateColouring(q.adjacency, col)) continue;
        std::map<int, int> census;
        for (const CuspRecord& r : cuspCensus(q, col).perVertex) ++census[r.distinctColours];
        if (census != wantCensus) continue;
        if (manifoldBetti(q, col) != wantBetti) continue;
        if (!best || col.of < best->of) best = &col;
    }
    if (!best)
        throw std::runtime_error("no perfect matching reproduces the published invariants");
    return *best;
}

Colouring schlafliColouring(const GossetPolytope& q) {
    auto classes = schlafliColourClassesListed();
    Colouring col;
    col.colourCount = 9;
    col.of.assign(27, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& coords : classes[c]) {
            auto it = std::find(q.vertices.begin(), q.vertices.end(), coords);
            if (it == q.vertices.end()) throw std::logic_error("listed vertex not found");
            int v = static_cast<int>(it - q.vertices.begin());
            if (col.of[v] != -1) throw std::logic_error("listed classes overlap");
            col.of[v] = static_cast<int>(c);
        }
    for (int v = 0; v < 27; ++v)
        if (col.of[v] < 0) throw std::logic_error("listed classes miss a vertex");
    if (validateColouring(q.adjacency, col))
        throw std::logic_error("listed classes are not a proper colouring");
    return col;
}

Octonion octonionOf(const GossetPolytope& q, int v) {
    Octonion o;
    for (int i = 0; i < 8; ++i) o.q[i] = q.vertices[v][i];
    return o;
}

} // namespace

std::vector<std::array<std::vector<int>, 3>> schlafliColourClassesListed() {
    std::vector<std::array<std::vector<int>, 3>> classes;
    std::array<std::vector<int>, 3> base = {
        std::vector<int>{-1, 0, 0, 0, 0, 0, 0},
        std::vector<int>{1, 1, 0, 0, 0, 0, 1},
        std::vector<int>{1, 0, 1, 1, 1, 1, 2}};
    auto shift = [](const std::vector<int>& v) {
        // Cyclic shift of the first six coordinates.
        std::vector<int> w(7);
        for (int i = 0; i < 6; ++i) w[(i + 1) % 6] = v[i];
        w[6] = v[6];
        return w;
    };
    std::array<std::vector<int>, 3> cur = base;
    for (int k = 0; k < 6; ++k) {
        classes.push_back(cur);
        for (auto& m : cur) m = shift(m);
    }
    classes.push_back({std::vector<int>{1, 0, 1, 0, 0, 0, 1}, std::vector<int>{0, 1, 0, 0, 1, 0, 1},
                       std::vector<int>{0, 0, 0, 1, 0, 1, 1}});
    classes.push_back({std::vector<int>{0, 1, 0, 1, 0, 0, 1}, std::vector<int>{0, 0, 1, 0, 0, 1, 1},
                       std::vector<int>{1, 0, 0, 0, 1, 0, 1}});
    classes.push_back({std::vector<int>{0, 0, 1, 0, 1, 0, 1}, std::vector<int>{1, 0, 0, 1, 0, 0, 1},
                       std::vector<int>{0, 1, 0, 0, 0, 1, 1}});
    return classes;
}

Colouring builtinColouring(const GossetPolytope& q) {
    switch (q.n) {
        case 3: {
            auto family = enumeratePairColourings(q.adjacency);
            if (family.empty()) throw std::logic_error("prism has no pair colouring");
            const Colouring* best = &family[0];
            for (const auto& col : family)
                if (col.of < best->of) best = &col;
            return *best;
        }
        case 4:
        case 5: return reconstructPairColouring(q);
        case 6: return schlafliColouring(q);
        case 7:
        case 8: {
            Colouring col;
            col.colourCount = q.n == 8 ? 15 : 14;
            for (int v = 0; v < q.facetCount(); ++v) {
                int h = hextetOf(octonionOf(q, v));
                col.of.push_back(q.n == 8 ? h : h - 1);
            }
            if (validateColouring(q.adjacency, col))
                throw std::logic_error("hextet colouring failed validation");
            return col;
        }
        default: throw std::invalid_argument("n must be in 3..8");
    }
}

std::vector<long long> manifoldBetti(const GossetPolytope& q, const Colouring& col,
                                     const BettiSumOptions& opts) {
    int c = col.colourCount;
    std::uint32_t total = 1u << c;

    // Orbit representatives of the colour-subset action, with multiplicities.
    std::vector<std::pair<std::uint32_t, long long>> reps;
    if (opts.colourSymmetries.empty()) {
        reps.reserve(total);
        for (std::uint32_t m = 0; m < total; ++m) reps.emplace_back(m, 1);
    } else {
        std::vector<char> visited(total, 0);
        std::vector<std::uint32_t> stack;
        for (std::uint32_t m = 0; m < total; ++m) {
            if (visited[m]) continue;
            long long size = 0;
            stack.push_back(m);
            visited[m] = 1;
            while (!stack.empty()) {
                std::uint32_t x = stack.back();
                stack.pop_back();
                ++size;
                for (const auto& perm : opts.colourSymmetries) {
                    std::uint32_t y = 0;
                    for (int b = 0; b < c; ++b)
                        if (x & (1u << b)) y |= 1u << perm[b];
                    if (!visited[y]) {
                        visited[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            reps.emplace_back(m, size);
        }
    }

    // Largest subsets first, so parallel workers finish together.
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        return __builtin_popcount(a.first) > __builtin_popcount(b.first);
    });

    FlagComplex nerve{&q.adjacency};
    int slots = q.n + 2;
    std::vector<std::vector<long long>> perRep(reps.size());
    parallelFor(static_cast<std::int64_t>(reps.size()), opts.threads, [&](std::int64_t i) {
        auto [mask, weight] = reps[static_cast<std::size_t>(i)];
        InducedSubcomplex sub{&nerve, colourSelection(col, mask, q.facetCount())};
        BettiVector bv = bettiNumbersFromTable(cliquesByDimension(sub), true);
        std::vector<long long> acc(slots, 0);
        acc[0] = weight * bv.bTildeMinus1;
        for (int k = 0; k <= bv.topDegree(); ++k) acc[k + 1] = weight * bv.b[k];
        perRep[static_cast<std::size_t>(i)] = std::move(acc);
    });

    std::vector<long long> betti(slots, 0);
    for (const auto& acc : perRep)
        for (int k = 0; k < slots; ++k) betti[k] += acc[k];
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
    return betti;
}

EulerPair eulerCharacteristics(const GossetPolytope& q, int colourCount) {
    Frac chiP = eulerCharacteristicP(q);
    if (q.n % 2 == 1 && !(chiP == Frac(0)))
        throw std::logic_error("odd-dimensional polytope with nonzero Euler characteristic");
    long long num = chiP.num * (1LL << colourCount);
    if (num % chiP.den != 0) throw std::logic_error("2^c chi(P) is not an integer");
    return {chiP, num / chiP.den};
}

CuspCensus cuspCensus(const GossetPolytope& q, const Colouring& col) {
    CuspCensus census;
    for (std::size_t f = 0; f < q.orthoplexFacets.size(); ++f) {
        const OrthoplexFacet& facet = q.orthoplexFacets[f];
        CuspRecord rec;
        rec.idealVertex = static_cast<int>(f);
        std::set<int> colours;
        for (auto [a, b] : facet.pairs) {
            colours.insert(col.of[a]);
            colours.insert(col.of[b]);
            rec.circleMultipliers.push_back(col.of[a] == col.of[b] ? 2 : 4);
        }
        rec.distinctColours = static_cast<int>(colours.size());
        rec.cuspsAbove = 1LL << (col.colourCount - rec.distinctColours);
        census.totalCusps += rec.cuspsAbove;
        census.perVertex.push_back(std::move(rec));
    }
    return census;
}

int maxDisjointFacets(const GossetPolytope& q) { return q.adjacency.maxIndependentSetSize(); }

namespace {

double zeta3() {
    const long long N = 4'000'000;
    long double s = 0;
    for (long long k = N - 1; k >= 1; --k) {
        long double x = static_cast<long double>(k);
        s += 1.0L / (x * x * x);
    }
    long double n = static_cast<long double>(N);
    s += 1.0L / (2 * n * n) + 1.0L / (2 * n * n * n) + 1.0L / (4 * n * n * n * n);
    return static_cast<double>(s);
}

// Dirichlet beta(s) = sum (-1)^k / (2k+1)^s.
double dirichletBeta(int s, long long terms) {
    long double sum = 0;
    for (long long k = terms - 1; k >= 0; --k) {
        long double d = 2.0L * k + 1;
        long double t = 1;
        for (int i = 0; i < s; ++i) t *= d;
        sum += (k % 2 == 0) ? 1.0L / t : -1.0L / t;
    }
    return static_cast<double>(sum);
}

const double kPi = 3.14159265358979323846;

} // namespace

VolumeEntry volumeP(int n) {
    static const double beta2 = dirichletBeta(2, 40'000'000);
    static const double beta4 = dirichletBeta(4, 40'000);
    static const double z3 = zeta3();
    switch (n) {
        case 3: return {"L(2)", beta2};
        case 4: return {"pi^2/12", kPi * kPi / 12};
        case 5: return {"7*zeta(3)/8", 7 * z3 / 8};
        case 6: return {"pi^3/15", kPi * kPi * kPi / 15};
        case 7: return {"8*L(4)", 8 * beta4};
        case 8: return {"136*pi^4/105", 136 * kPi * kPi * kPi * kPi / 105};
        default: throw std::invalid_argument("n must be in 3..8");
    }
}

VolumeEntry volumeM(int n, int colourCount) {
    VolumeEntry p = volumeP(n);
    double factor = std::ldexp(1.0, colourCount);
    static const char* labels[] = {"8*L(2)",       "8*pi^2/3",  "224*zeta(3)",
                                   "512*pi^3/15", "131072*L(4)", "4456448*pi^4/105"};
    return {labels[n - 3], factor * p.value};
}

ManifoldReport manifoldReport(const GossetPolytope& q, const Colouring& col,
                              const BettiSumOptions& opts) {
    ManifoldReport r;
    r.n = q.n;
    r.colourCount = col.colourCount;
    EulerPair euler = eulerCharacteristics(q, col.colourCount);
    r.chiP = euler.chiP;
    r.chiM = euler.chiM;
    r.betti = manifoldBetti(q, col, opts);
    r.cusps = cuspCensus(q, col);
    r.volP = volumeP(q.n);
    r.volM = volumeM(q.n, col.colourCount);

    long long alternating = 0;
    for (std::size_t k = 0; k < r.betti.size(); ++k)
        alternating += (k % 2 == 0) ? r.betti[k] : -r.betti[k];
    if (alternating != r.chiM)
        throw std::logic_error("Betti alternating sum disagrees with 2^c chi(P)");
    return r;
}

nlohmann::json manifoldReportToJson(const ManifoldReport& r) {
    nlohmann::json j;
    j["schema"] = "gosset-manifold-report";
    j["version"] = 1;
    j["n"] = r.n;
    j["colours"] = r.colourCount;
    j["chiP"] = r.chiP.str();
    j["chiM"] = r.chiM;
    j["betti"] = r.betti;
    j["cusps"]["total"] = r.cusps.totalCusps;
    std::map<int, int> byType;
    for (const auto& rec : r.cusps.perVertex) ++byType[rec.distinctColours];
    nlohmann::json types = nlohmann::json::array();
    for (auto [cPrime, count] : byType)
        types.push_back({{"distinctColours", cPrime},
                         {"idealVertices", count},
                         {"cuspsEach", 1LL << (r.colourCount - cPrime)}});
    j["cusps"]["types"] = types;
    j["volume"] = {{"polytope", {{"closedForm", r.volP.closedForm}, {"value", r.volP.value}}},
                   {"manifold", {{"closedForm", r.volM.closedForm}, {"value", r.volM.value}}}};
    return j;
}

std::string manifoldReportCsvRow(const ManifoldReport& r) {
    std::string row = "M" + std::to_string(r.n) + "," + std::to_string(r.chiM);
    for (int k = 1; k <= 7; ++k) {
        long long b = k < static_cast<int>(r.betti.size()) ? r.betti[k] : 0;
        row += "," + std::to_string(b);
    }
    row += "," + std::to_string(r.cusps.totalCusps);
    return row;
}

std::string volumeCsvRow(const ManifoldReport& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.volM.value);
    return "M" + std::to_string(r.n) + "," + r.volM.closedForm + "," + buf + "," +
           std::to_string(r.chiM) + "," + std::to_string(r.cusps.totalCusps);
}

} // namespace gosset
