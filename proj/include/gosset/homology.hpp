// Rational Betti numbers of induced flag subcomplexes.
//
// Ranks of the sparse boundary matrices are computed over two large prime
// fields; a disagreement (which would signal an unlucky prime) falls back
// to exact integer arithmetic. Columns are reduced in decreasing dimension
// with clearing, so most columns are never touched.

#pragma once

#include <vector>

#include "gosset/complex.hpp"

namespace gosset {

struct BettiVector {
    bool reduced = false;
    // Reduced convention: bTildeMinus1 is 1 exactly for the empty complex.
    long long bTildeMinus1 = 0;
    std::vector<long long> b; // b[k], k >= 0

    long long at(int k) const {
        if (k == -1) return bTildeMinus1;
        return (k < 0 || k >= static_cast<int>(b.size())) ? 0 : b[k];
    }
    int topDegree() const { return static_cast<int>(b.size()) - 1; }

    long long alternatingSum() const {
        long long s = 0;
        for (int k = 0; k < static_cast<int>(b.size()); ++k)
            s += (k % 2 == 0) ? b[k] : -b[k];
        return s;
    }

    friend bool operator==(const BettiVector& x, const BettiVector& y) {
        return x.reduced == y.reduced && x.bTildeMinus1 == y.bTildeMinus1 && x.b == y.b;
    }
};

BettiVector bettiNumbers(const InducedSubcomplex& c, bool reduced);

// Same, reusing an already enumerated simplex table for the subcomplex.
BettiVector bettiNumbersFromTable(const SimplexTable& table, bool reduced);

} // namespace gosset
