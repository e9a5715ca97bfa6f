// Verified symmetries of a coloured Gosset polytope: vertex permutations
// that preserve adjacency and permute the colour classes. Every candidate
// is checked before use, so downstream orbit reductions are exact whether
// or not the candidate family is complete.

#pragma once

#include <vector>

#include "gosset/colouring.hpp"
#include "gosset/polytope.hpp"

namespace gosset {

struct ColourSymmetry {
    std::vector<int> vertexPerm; // vertex -> vertex, adjacency-preserving
    std::vector<int> colourPerm; // induced colour -> colour
};

// Candidates per dimension: coordinate permutations of the first six axes
// for n=6; Fano collineations combined with sign flips for n=7 and n=8.
// Other dimensions return an empty family (their subset sums are small).
std::vector<ColourSymmetry> colourSymmetries(const GossetPolytope& q, const Colouring& col);

// Deduplicated colour permutations (identity dropped).
std::vector<std::vector<int>> colourPerms(const std::vector<ColourSymmetry>& syms);

} // namespace gosset
