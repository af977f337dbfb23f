#pragma once

#include <vector>

#include "immpoly/immanant.hpp"
#include "immpoly/lr.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/partition.hpp"

namespace immpoly {

// Multiplicities of chi_mu x chi_nu in the restriction of chi_lambda to the
// Young subgroup S_r x S_{n-r}, computed by character orthogonality over
// pairs of class types.  These equal the Littlewood-Richardson coefficients
// c^lambda_{mu,nu} (cross-checked against the tableau count in lr.hpp), and
// satisfy f^lambda = sum_{mu,nu} c^lambda_{mu,nu} f^mu f^nu.
//
// Returned as a matrix indexed by [mu index][nu index] over
// enumerate_partitions(r) x enumerate_partitions(n - r).
std::vector<std::vector<Integer>> branching_coefficients(const Partition& lam,
                                                         int r);

// Two-block Laplace expansion of an immanant along a fixed row set R:
//
//   Imm_lambda(M) = sum over column sets U of size |R| of
//     sum_{pi, rho} chi_lambda(sigma(U, pi, rho))
//       * prod_i M[R,U]_{i, pi(i)} * prod_j M[R',U']_{j, rho(j)}
//
// where submatrices take their index sets in ascending order, pi and rho run
// over permutations of the two blocks, and sigma(U, pi, rho) is the unique
// permutation of [n] mapping R onto U by pi and R' onto U' by rho.  In
// position coordinates sigma = g . (pi + rho) with g the unshuffle v^{-1} u
// (v places R|R' ascending, u places U|U' ascending), so each column set is
// charged the character of the glued permutation, crossings included.
//
// The weight chi_lambda(g . (pi + rho)) is not a class function of
// (pi, rho) once g moves letters between the blocks, so the per-column-set
// terms do not factor into Imm_mu(M[R,U]) Imm_nu(M[R',U']) products with
// scalar kernels.  The factorization survives exactly at U = R, where g is
// the identity and the inner sum collapses through branching_coefficients,
// and for the linear characters: lambda = (1^n) reproduces the signed
// cofactor expansion and lambda = (n) the sign-free permanent expansion.
//
// rows must be a nonempty proper subset of 0..n-1; ascending order is
// enforced.  The result always equals immanant(M, lambda).
Rational laplace_expand(const ExactMatrix& m, const Partition& lam,
                        const std::vector<int>& rows);

}  // namespace immpoly
