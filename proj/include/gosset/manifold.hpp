// Invariants of the manifold obtained from a colouring of P^n: Betti
// numbers via the reduced homology of the colour subcomplexes K_omega,
// Euler characteristics, the cusp census, colouring minimality data, and
// volumes.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "gosset/colouring.hpp"
#include "gosset/homology.hpp"
#include "gosset/polytope.hpp"
#include "gosset/rational.hpp"

#include "json.hpp"

namespace gosset {

// The colourings used throughout: the unique pair colouring for n=3, the
// reconstructed pair colourings for n=4,5 (lexicographically least perfect
// matching reproducing the published Betti numbers and cusp census), the
// nine listed triplets for n=6, quartets for n=7 and hextets for n=8.
Colouring builtinColouring(const GossetPolytope& q);

struct BettiSumOptions {
    int threads = 1;
    // Colour permutations induced by verified automorphisms; the subset sum
    // is then reduced to orbit representatives. Empty = full sum.
    std::vector<std::vector<int>> colourSymmetries;
};

// b_k(M) = sum over omega in 2^c of reduced b_{k-1}(K_omega), where K_omega
// is the full subcomplex on the facets whose colour lies in omega.
std::vector<long long> manifoldBetti(const GossetPolytope& q, const Colouring& col,
                                     const BettiSumOptions& opts = {});

// The n=6 colour classes with their listed member order (used both for the
// colouring and for the initial status assignment).
std::vector<std::array<std::vector<int>, 3>> schlafliColourClassesListed();

struct EulerPair {
    Frac chiP;
    long long chiM;
};
EulerPair eulerCharacteristics(const GossetPolytope& q, int colourCount);

struct CuspRecord {
    int idealVertex;                    // orthoplex facet index
    int distinctColours;                // c'
    long long cuspsAbove;               // 2^(c-c')
    std::vector<int> circleMultipliers; // per opposite pair: 2 same colour, 4 distinct
};
struct CuspCensus {
    std::vector<CuspRecord> perVertex;
    long long totalCusps = 0;
};
CuspCensus cuspCensus(const GossetPolytope& q, const Colouring& col);

// Maximum number of pairwise disjoint facets of P^n (maximum independent
// set of the Gosset 1-skeleton); colour class sizes cannot beat it.
int maxDisjointFacets(const GossetPolytope& q);

struct VolumeEntry {
    std::string closedForm;
    double value = 0;
};
// Volume of P^n (Gauss-Bonnet in even dimension, zeta/beta closed forms in
// odd dimension) and of the manifold, Vol(M) = 2^c Vol(P).
VolumeEntry volumeP(int n);
VolumeEntry volumeM(int n, int colourCount);

struct ManifoldReport {
    int n = 0;
    int colourCount = 0;
    Frac chiP;
    long long chiM = 0;
    std::vector<long long> betti;
    CuspCensus cusps;
    VolumeEntry volP, volM;
};

ManifoldReport manifoldReport(const GossetPolytope& q, const Colouring& col,
                              const BettiSumOptions& opts = {});

nlohmann::json manifoldReportToJson(const ManifoldReport& r);
// Euler, b_1..b_7, cusps; matching the published table layout.
std::string manifoldReportCsvRow(const ManifoldReport& r);
// Volume, chi, cusps.
std::string volumeCsvRow(const ManifoldReport& r);

} // namespace gosset
