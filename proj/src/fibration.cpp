#include "gosset/fibration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "gosset/manifold.hpp"
#include "gosset/octonion.hpp"
#include "gosset/parallel.hpp"

namespace gosset {

const char* orbitVerdictName(OrbitVerdict v) {
    switch (v) {
        case OrbitVerdict::Illegal: return "illegal";
        case OrbitVerdict::Legal: return "legal";
        case OrbitVerdict::OneLegal: return "1-legal";
        default: return "undetermined";
    }
}

State actOnState(std::uint32_t v, const State& s, const Colouring& col) {
    State out = s;
    for (std::size_t f = 0; f < out.of.size(); ++f)
        if (v & (1u << col.of[f]))
            out.of[f] = out.of[f] == Status::O ? Status::I : Status::O;
    return out;
}

State builtinState(const GossetPolytope& q, const Colouring& col) {
    State s;
    s.of.assign(q.facetCount(), Status::I);
    switch (q.n) {
        case 3:
        case 4:
        case 5: {
            for (const auto& cls : col.classes()) {
                if (cls.size() != 2) throw std::invalid_argument("expected a pair colouring");
                s.of[cls.front()] = Status::O; // classes() lists members ascending
            }
            return s;
        }
        case 6: {
            auto classes = schlafliColourClassesListed();
            for (const auto& triple : classes) {
                auto it = std::find(q.vertices.begin(), q.vertices.end(), triple[0]);
                if (it == q.vertices.end()) throw std::logic_error("listed vertex not found");
                s.of[it - q.vertices.begin()] = Status::O;
            }
            return s;
        }
        case 7: {
            auto seed = stateSeed421();
            for (int v = 0; v < q.facetCount(); ++v) {
                Octonion o;
                for (int i = 0; i < 8; ++i) o.q[i] = q.vertices[v][i];
                s.of[v] = seed[vertexIndex421(o)] ? Status::O : Status::I;
            }
            return s;
        }
        case 8: {
            auto seed = stateSeed421();
            for (int v = 0; v < q.facetCount(); ++v)
                s.of[v] = seed[v] ? Status::O : Status::I;
            return s;
        }
        default: throw std::invalid_argument("n must be in 3..8");
    }
}

InducedSubcomplex ascendingLink(const FlagComplex& nerve, const State& s) {
    InducedSubcomplex sub{&nerve, Bitset(nerve.vertexCount())};
    for (int v = 0; v < nerve.vertexCount(); ++v)
        if (s.of[v] == Status::O) sub.selected.set(v);
    return sub;
}

InducedSubcomplex descendingLink(const FlagComplex& nerve, const State& s) {
    InducedSubcomplex sub{&nerve, Bitset(nerve.vertexCount())};
    for (int v = 0; v < nerve.vertexCount(); ++v)
        if (s.of[v] == Status::I) sub.selected.set(v);
    return sub;
}

MapTriviality stateMapTriviality(const Colouring& col, const State& s) {
    for (const auto& cls : col.classes())
        for (std::size_t i = 1; i < cls.size(); ++i)
            if (s.of[cls[i]] != s.of[cls[0]]) return MapTriviality::Image2Z;
    return MapTriviality::Trivial;
}

std::vector<CuspRestrictionRecord> cuspRestrictionAnalysis(const GossetPolytope& q,
                                                           const Colouring& col, const State& s) {
    std::vector<CuspRestrictionRecord> out;
    for (std::size_t f = 0; f < q.orthoplexFacets.size(); ++f) {
        CuspRestrictionRecord rec;
        rec.idealVertex = static_cast<int>(f);
        rec.nullHomotopic = true;
        for (auto [a, b] : q.orthoplexFacets[f].pairs)
            if (col.of[a] == col.of[b] && s.of[a] != s.of[b]) {
                rec.nullHomotopic = false;
                break;
            }
        out.push_back(rec);
    }
    return out;
}

namespace {

// Affine map on state indices induced by a verified symmetry that maps the
// orbit of s0 to itself: v -> permuteBits(v) xor shift.
struct AffineStateMap {
    std::vector<int> colourPerm;
    std::uint32_t shift = 0;
};

std::optional<AffineStateMap> stateMapOf(const ColourSymmetry& sym, const Colouring& col,
                                         const State& s0) {
    // Image state: (g s0)(x) = s0(g^{-1} x); compare with s0 classwise.
    std::vector<int> inverse(sym.vertexPerm.size());
    for (std::size_t v = 0; v < sym.vertexPerm.size(); ++v) inverse[sym.vertexPerm[v]] = static_cast<int>(v);
    std::uint32_t shift = 0;
    std::vector<int> seen(col.colourCount, -1);
    for (std::size_t x = 0; x < sym.vertexPerm.size(); ++x) {
        int colour = col.of[x];
        int diff = (s0.of[inverse[x]] != s0.of[x]) ? 1 : 0;
        if (seen[colour] == -1) {
            seen[colour] = diff;
            if (diff) shift |= 1u << colour;
        } else if (seen[colour] != diff) {
            return std::nullopt; // image state is not in the orbit
        }
    }
    return AffineStateMap{sym.colourPerm, shift};
}

struct ClassAccumulator {
    CanonicalCertificate cert;
    Bitset representative;
    long long count = 0;
};

} // namespace

OrbitReport checkOrbit(const GossetPolytope& q, const Colouring& col, const State& s0,
                       const OrbitCheckOptions& opts) {
    if (auto issue = validateColouring(q.adjacency, col))
        throw std::invalid_argument("improper colouring");
    if (static_cast<int>(s0.of.size()) != q.facetCount())
        throw std::invalid_argument("state size mismatch");

    OrbitReport report;
    report.n = q.n;
    report.colourCount = col.colourCount;
    int c = col.colourCount;
    std::uint32_t total = 1u << c;
    report.orbitSize = total;

    // Balanced: every even colour class splits half I, half O.
    report.balanced = true;
    for (const auto& cls : col.classes()) {
        int outCount = 0;
        for (int v : cls)
            if (s0.of[v] == Status::O) ++outCount;
        if (2 * outCount != static_cast<int>(cls.size())) report.balanced = false;
    }

    EulerPair euler = eulerCharacteristics(q, c);
    report.chiExpected = euler.chiM;

    // Orbit partition of the 2^c states under the verified affine maps.
    std::vector<AffineStateMap> affine;
    if (opts.useSymmetries)
        for (const auto& sym : opts.symmetries)
            if (auto m = stateMapOf(sym, col, s0)) affine.push_back(std::move(*m));

    std::vector<std::int32_t> orbitOf(total, -1);
    std::vector<std::uint32_t> reps;
    std::vector<long long> orbitSizes;
    {
        std::vector<std::uint32_t> stack;
        for (std::uint32_t v = 0; v < total; ++v) {
            if (orbitOf[v] >= 0) continue;
            std::int32_t id = static_cast<std::int32_t>(reps.size());
            long long size = 0;
            stack.push_back(v);
            orbitOf[v] = id;
            while (!stack.empty()) {
                std::uint32_t x = stack.back();
                stack.pop_back();
                ++size;
                for (const auto& m : affine) {
                    std::uint32_t y = m.shift;
                    for (int b = 0; b < c; ++b)
                        if (x & (1u << b)) y ^= 1u << m.colourPerm[b];
                    if (orbitOf[y] < 0) {
                        orbitOf[y] = id;
                        stack.push_back(y);
                    }
                }
            }
            reps.push_back(v);
            orbitSizes.push_back(size);
        }
    }

    FlagComplex nerve{&q.adjacency};

    // Canonical certificate per orbit representative.
    std::vector<CanonicalCertificate> repCert(reps.size());
    parallelFor(static_cast<std::int64_t>(reps.size()), opts.threads, [&](std::int64_t i) {
        State s = actOnState(reps[static_cast<std::size_t>(i)], s0, col);
        repCert[static_cast<std::size_t>(i)] = canonicalForm(ascendingLink(nerve, s));
    });

    // Deduplicate certificates into classes.
    std::map<CanonicalCertificate, int> classIndex;
    std::vector<ClassAccumulator> accs;
    std::vector<std::int32_t> classOfOrbit(reps.size(), -1);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        auto [it, fresh] = classIndex.try_emplace(repCert[i], static_cast<int>(accs.size()));
        if (fresh) {
            ClassAccumulator acc;
            acc.cert = repCert[i];
            acc.representative = ascendingLink(nerve, actOnState(reps[i], s0, col)).selected;
            accs.push_back(std::move(acc));
        }
        classOfOrbit[i] = it->second;
        accs[it->second].count += orbitSizes[i];
    }

    // Per-class combinatorics and certification.
    std::vector<LinkClassReport> classReports(accs.size());
    parallelFor(static_cast<std::int64_t>(accs.size()), opts.threads, [&](std::int64_t i) {
        const ClassAccumulator& acc = accs[static_cast<std::size_t>(i)];
        LinkClassReport rep;
        rep.certificate = acc.cert;
        rep.digest = acc.cert.hexDigest();
        rep.vertexCount = acc.representative.count();
        rep.ascendingCount = acc.count;
        rep.descendingCount = acc.count;
        InducedSubcomplex link{&nerve, acc.representative};
        SimplexTable table = cliquesByDimension(link);
        rep.eulerCharacteristic = table.eulerCharacteristic();
        rep.connected = isConnected(link);
        if (opts.classBetti) rep.betti = bettiNumbersFromTable(table, false);
        if (rep.connected) rep.pi1 = pi1Trivial(link, opts.pi1Budget);
        classReports[static_cast<std::size_t>(i)] = std::move(rep);
    });

    // Deterministic class order: sort by certificate, remap indices.
    std::vector<int> order(classReports.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return classReports[a].certificate < classReports[b].certificate;
    });
    std::vector<int> newIndex(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) newIndex[order[pos]] = static_cast<int>(pos);
    std::vector<LinkClassReport> sorted;
    sorted.reserve(order.size());
    for (int idx : order) sorted.push_back(std::move(classReports[idx]));
    report.classes = std::move(sorted);

    report.ascendingClassOf.assign(total, -1);
    for (std::uint32_t v = 0; v < total; ++v)
        report.ascendingClassOf[v] = newIndex[classOfOrbit[orbitOf[v]]];

    // Euler double count over all states, ascending and descending.
    std::uint32_t complementMask = total - 1; // acting by it complements the state
    for (std::uint32_t v = 0; v < total; ++v) {
        const LinkClassReport& asc = report.classes[report.ascendingClassOf[v]];
        const LinkClassReport& desc = report.classes[report.ascendingClassOf[v ^ complementMask]];
        report.chiAscendingSum += 1 - asc.eulerCharacteristic;
        report.chiDescendingSum += 1 - desc.eulerCharacteristic;
    }

    // Verdict. The descending family coincides with the ascending family
    // via complementation, so class data covers both sides.
    bool allConnected = true, allSimply = true, anyUnknown = false;
    for (const auto& cls : report.classes) {
        if (!cls.connected) allConnected = false;
        else if (cls.pi1.kind == Pi1Kind::Unknown) anyUnknown = true;
        else if (cls.pi1.kind == Pi1Kind::NotSimplyConnected) allSimply = false;
    }
    if (!allConnected) {
        report.verdict = OrbitVerdict::Illegal;
        for (std::uint32_t v = 0; v < total; ++v) {
            const auto& asc = report.classes[report.ascendingClassOf[v]];
            const auto& desc = report.classes[report.ascendingClassOf[v ^ complementMask]];
            if (!asc.connected || !desc.connected) {
                report.illegalWitnessState = v;
                break;
            }
        }
    } else if (anyUnknown) {
        report.verdict = OrbitVerdict::Undetermined;
    } else if (allSimply) {
        report.verdict = OrbitVerdict::OneLegal;
    } else {
        report.verdict = OrbitVerdict::Legal;
    }

    report.cuspRestrictions = cuspRestrictionAnalysis(q, col, s0);
    return report;
}

nlohmann::json stateToJson(int n, const State& s) {
    nlohmann::json status = nlohmann::json::object();
    for (std::size_t v = 0; v < s.of.size(); ++v)
        status[std::to_string(v)] = s.of[v] == Status::O ? "O" : "I";
    return nlohmann::json{{"n", n}, {"status", status}};
}

State stateFromJson(const nlohmann::json& j, int expectedFacets) {
    State s;
    s.of.assign(expectedFacets, Status::I);
    std::vector<char> present(expectedFacets, 0);
    for (auto it = j.at("status").begin(); it != j.at("status").end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= expectedFacets) throw std::runtime_error("facet index out of range");
        std::string val = it.value().get<std::string>();
        if (val != "I" && val != "O") throw std::runtime_error("status must be I or O");
        s.of[v] = val == "O" ? Status::O : Status::I;
        present[v] = 1;
    }
    for (char p : present)
        if (!p) throw std::runtime_error("missing status for a facet");
    return s;
}

nlohmann::json orbitReportToJson(const OrbitReport& r) {
    nlohmann::json j;
    j["schema"] = "gosset-orbit-report";
    j["version"] = 1;
    j["n"] = r.n;
    j["colours"] = r.colourCount;
    j["orbitSize"] = r.orbitSize;
    j["balanced"] = r.balanced;
    j["verdict"] = orbitVerdictName(r.verdict);
    if (r.illegalWitnessState) j["illegalWitnessState"] = *r.illegalWitnessState;
    j["classCount"] = r.classCount();
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : r.classes) {
        nlohmann::json e;
        e["digest"] = cls.digest;
        e["vertices"] = cls.vertexCount;
        e["ascendingCount"] = cls.ascendingCount;
        e["descendingCount"] = cls.descendingCount;
        e["connected"] = cls.connected;
        e["euler"] = cls.eulerCharacteristic;
        if (!cls.betti.b.empty() || cls.connected) e["betti"] = cls.betti.b;
        e["pi1"] = pi1KindName(cls.pi1.kind);
        classes.push_back(std::move(e));
    }
    j["classes"] = classes;
    j["chi"] = {{"ascendingSum", r.chiAscendingSum},
                {"descendingSum", r.chiDescendingSum},
                {"expected", r.chiExpected}};
    long long nullCount = 0;
    for (const auto& rec : r.cuspRestrictions)
        if (rec.nullHomotopic) ++nullCount;
    j["cuspRestrictions"] = {{"idealVertices", r.cuspRestrictions.size()},
                             {"nullHomotopic", nullCount}};
    return j;
}

} // namespace gosset
