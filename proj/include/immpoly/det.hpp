#pragma once

#include "immpoly/matrix.hpp"
#include "immpoly/poly.hpp"

namespace immpoly {

// Determinant by fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing each row's denominators; polynomial cost, no
// permutation enumeration.  Independent of the immanant kernels.
Rational determinant(const ExactMatrix& m);

// Coefficients c_{(1^n),r} of det(xI - M) = sum_r (-1)^r c_r x^{n-r},
// recovered from determinant evaluations at x = 0..n by exact
// interpolation.
ImmPolynomial char_poly_by_determinant(const ExactMatrix& m);

}  // namespace immpoly
