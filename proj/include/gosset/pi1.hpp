// Simple-connectivity certification for connected induced flag subcomplexes.
//
// The edge-path presentation (spanning tree, one generator per non-tree
// edge, one relator per triangle) is simplified by Tietze moves under a
// step budget. Triviality of a presentation is undecidable in general, so
// the result is three-valued; SimplyConnected and NotSimplyConnected are
// certified, Unknown reports an exhausted budget.

#pragma once

#include "gosset/complex.hpp"

namespace gosset {

enum class Pi1Kind { SimplyConnected, NotSimplyConnected, Unknown };

struct Pi1Verdict {
    Pi1Kind kind = Pi1Kind::Unknown;
    long long h1Rank = 0;    // positive first Betti number when NotSimplyConnected
    long long stepsUsed = 0; // simplification effort spent

    bool simplyConnected() const { return kind == Pi1Kind::SimplyConnected; }
};

constexpr long long kDefaultPi1Budget = 1'000'000;

// Requires a connected subcomplex; throws std::invalid_argument otherwise.
Pi1Verdict pi1Trivial(const InducedSubcomplex& c, long long budget = kDefaultPi1Budget);

const char* pi1KindName(Pi1Kind k);

} // namespace gosset
