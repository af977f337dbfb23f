#pragma once

#include <optional>
#include <vector>

#include "immpoly/matrix.hpp"

namespace immpoly {

// A y x z all-zero submatrix with y + z = order + 1.  Every permutation
// product then crosses the block, so every immanant of the matrix is zero.
struct ZeroBlockWitness {
    std::vector<int> rows;  // ascending, size y >= 1
    std::vector<int> cols;  // ascending, size z >= 1
};

// Searches for such a block via maximum bipartite matching on the nonzero
// support (Hopcroft-Karp): a witness exists iff the support has no perfect
// matching, and an uncovered-rows x uncovered-cols block of a minimum
// vertex cover provides one.  Returns nullopt when the support has a
// perfect matching.
std::optional<ZeroBlockWitness> vanishes_by_zero_block(const ExactMatrix& m);

}  // namespace immpoly
