// States on the facets of P^n, the Z_2^c orbit action, ascending and
// descending links in the nerve, legality and 1-legality of orbits, the
// Euler-characteristic double count, and the cusp restriction dichotomy.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gosset/canonical.hpp"
#include "gosset/colouring.hpp"
#include "gosset/homology.hpp"
#include "gosset/pi1.hpp"
#include "gosset/polytope.hpp"
#include "gosset/symmetry.hpp"

#include "json.hpp"

namespace gosset {

enum class Status : std::uint8_t { I = 0, O = 1 };

struct State {
    std::vector<Status> of; // facet index -> status

    bool operator==(const State& other) const { return of == other.of; }
};

// Flip the status of every facet whose colour bit is set in v.
State actOnState(std::uint32_t v, const State& s, const Colouring& col);

// The initial states used with the builtin colourings: the lexicographically
// least facet of every pair gets O for n=3,4,5; the first listed vertex of
// every triplet for n=6; the quaternion-generated seed for n=8, restricted
// to the vertex figure for n=7.
State builtinState(const GossetPolytope& q, const Colouring& col);

// O-vertices span the ascending link, I-vertices the descending link.
InducedSubcomplex ascendingLink(const FlagComplex& nerve, const State& s);
InducedSubcomplex descendingLink(const FlagComplex& nerve, const State& s);

enum class OrbitVerdict { Illegal, Legal, OneLegal, Undetermined };
const char* orbitVerdictName(OrbitVerdict v);

struct LinkClassReport {
    CanonicalCertificate certificate;
    std::string digest;
    int vertexCount = 0;
    long long ascendingCount = 0;  // states whose ascending link lands here
    long long descendingCount = 0; // always equal, via the complement bijection
    bool connected = false;
    long long eulerCharacteristic = 0; // of the link complex
    BettiVector betti;                 // unreduced
    Pi1Verdict pi1;
};

struct CuspRestrictionRecord {
    int idealVertex = 0;
    bool nullHomotopic = false; // same-coloured opposite pairs all share status
};

struct OrbitCheckOptions {
    int threads = 1;
    long long pi1Budget = kDefaultPi1Budget;
    bool classBetti = true; // Betti vector per deduplicated class
    // Verified symmetries used to reduce the state orbit before
    // canonical-form deduplication; exactness does not depend on them.
    std::vector<ColourSymmetry> symmetries;
    bool useSymmetries = true;
};

struct OrbitReport {
    int n = 0;
    int colourCount = 0;
    long long orbitSize = 0;
    bool balanced = false;
    OrbitVerdict verdict = OrbitVerdict::Undetermined;
    std::optional<std::uint32_t> illegalWitnessState;
    std::vector<LinkClassReport> classes;         // sorted by certificate
    std::vector<std::int32_t> ascendingClassOf;   // state index -> class index
    long long chiAscendingSum = 0;                // sum of 1 - chi(lk_up)
    long long chiDescendingSum = 0;
    long long chiExpected = 0;                    // 2^c chi(P)
    std::vector<CuspRestrictionRecord> cuspRestrictions; // for the initial state

    long long classCount() const { return static_cast<long long>(classes.size()); }
};

OrbitReport checkOrbit(const GossetPolytope& q, const Colouring& col, const State& s0,
                       const OrbitCheckOptions& opts = {});

enum class MapTriviality { Trivial, Image2Z };
// Trivial exactly when same-coloured facets always share their status.
MapTriviality stateMapTriviality(const Colouring& col, const State& s);

// Per ideal vertex: the restriction is null-homotopic exactly when every
// same-coloured opposite pair of the cube link has equal status.
std::vector<CuspRestrictionRecord> cuspRestrictionAnalysis(const GossetPolytope& q,
                                                           const Colouring& col, const State& s);

nlohmann::json stateToJson(int n, const State& s);
State stateFromJson(const nlohmann::json& j, int expectedFacets);
nlohmann::json orbitReportToJson(const OrbitReport& r);

} // namespace gosset
