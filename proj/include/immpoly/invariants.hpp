#pragma once

#include <array>
#include <vector>

#include "immpoly/character.hpp"
#include "immpoly/graph.hpp"

namespace immpoly {

// e_r of an integer multiset (elementary symmetric polynomial).
Integer elementary_symmetric(const std::vector<int>& values, int r);

// F_r(G) = e_r of the degree sequence of G.
Integer graph_degree_elementary(const Graph& g, int r);

// Cycles of length l >= 3 as canonical vertex sequences: first vertex is
// the smallest on the cycle, orientation chosen so the second vertex is
// smaller than the last.  Distinct cycles on the same vertex set (possible
// for l >= 4) are listed separately.  Sorted lexicographically.
std::vector<std::vector<int>> cycles_of_length(const Graph& g, int l);

// Matchings with exactly l edges, l in {1, 2}, as sorted edge lists;
// lexicographic order.
std::vector<std::vector<std::pair<int, int>>> matchings_of_size(const Graph& g,
                                                                int l);

// Census sums over substructures with the degrees of the *full* graph:
//   census_C(G, r, l) = sum over cycles C of length l of F_{r-l} of the
//     degree sequence with C's vertices removed; needs r >= l, l in {3,4,5}.
//   census_M(G, r, l) = sum over matchings M of size l of F_{r-2l} of the
//     degree sequence with M's endpoints removed; needs r >= 2l, l in {1,2}.
Integer census_C(const Graph& g, int r, int l);
Integer census_M(const Graph& g, int r, int l);

// For each triangle (lex order on sorted vertex triples) the sum of the
// degrees of its three vertices.
std::vector<int> triangle_degree_sums(const Graph& g);

// Sum over vertices c with at least one degree-1 neighbor of
// (#degree-1 neighbors of c) - 1.
int star_degree(const Graph& g);

// Everything the closed-form coefficient formulas consume, computed once.
struct InvariantBundle {
    int n = 0;
    int m = 0;
    std::vector<Integer> F;  // F[r] for r = 0..n
    std::vector<std::vector<int>> cycles3, cycles4, cycles5;
    std::vector<std::vector<std::pair<int, int>>> matchings1, matchings2;
    std::vector<int> tri_degree_sums;
    int star_deg = 0;

    static InvariantBundle compute(const Graph& g);
};

}  // namespace immpoly
