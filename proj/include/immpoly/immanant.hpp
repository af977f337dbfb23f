#pragma once

#include <vector>

#include "immpoly/character.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/partition.hpp"

namespace immpoly {

// Per-cycle-type sums over the full symmetric group:
//   sums[t] = sum over sigma of type types[t] of prod_i m_{i,sigma(i)}.
// Every immanant of M is a character-weighted combination of these, so one
// sweep serves all shapes at once.  types are in reverse-lex order.
struct CycleTypeSums {
    int n = 0;
    std::vector<Partition> types;
    std::vector<Rational> sums;
};

// Per-cardinality sums of the principal-subset expansion:
//   sums[r][t] = sum over r-subsets I and sigma permuting I (entries taken
//   at i in I only, internal fixed points included) of the entry product,
//   grouped by the cycle type of sigma padded with 1s to weight n.
// coefficient r of any immanantal polynomial is a character combination of
// row r.
struct SubsetClassSums {
    int n = 0;
    int rmax = 0;
    std::vector<Partition> types;            // all partitions of n, reverse-lex
    std::vector<std::vector<Rational>> sums;  // [r][type index]
};

// Serial reference kernels and their parallel counterparts.  The parallel
// versions split the enumeration across OpenMP threads and merge exact
// per-thread accumulators, so results are identical to the serial ones.
// Without OpenMP they degrade to the serial code path.
CycleTypeSums immanant_class_sums_serial(const ExactMatrix& m);
CycleTypeSums immanant_class_sums(const ExactMatrix& m);
SubsetClassSums subset_class_sums_serial(const ExactMatrix& m, int rmax);
SubsetClassSums subset_class_sums(const ExactMatrix& m, int rmax);

Rational immanant_from_sums(const CycleTypeSums& sums, const Partition& lam);

// Imm_lambda(M) = sum over sigma of chi_lambda(sigma) prod_i m_{i,sigma(i)}.
// Requires weight(lam) == order(M); order is checked against the configured
// cap (tractability_error beyond it).
Rational immanant(const ExactMatrix& m, const Partition& lam);

}  // namespace immpoly
