#include "doctest.h"
#include "immpoly/det.hpp"

#include <random>

#include "support/oracles.hpp"

using namespace immpoly;
using namespace immpoly::testing;

namespace {

// cofactor expansion along the first row; exponential, test-only
Rational cofactor_det(const ExactMatrix& m) {
    const int n = m.order();
    if (n == 1) return m.at(0, 0);
    Rational total = 0;
    std::vector<int> all;
    for (int i = 1; i < n; ++i) all.push_back(i);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        const Rational minor = cofactor_det(m.submatrix(all, cols));
        if (j % 2 == 0)
            total += m.at(0, j) * minor;
        else
            total -= m.at(0, j) * minor;
    }
    return total;
}

}  // namespace

TEST_CASE("fraction-free determinant matches cofactor expansion") {
    std::mt19937 rng(424242u);
    for (int n = 1; n <= 6; ++n)
        for (int t = 0; t < 8; ++t) {
            const ExactMatrix m = random_matrix(rng, n);
            CHECK(determinant(m) == cofactor_det(m));
        }
    // singular case
    ExactMatrix s(3);
    for (int j = 0; j < 3; ++j) {
        s.at(0, j) = j + 1;
        s.at(1, j) = 2 * (j + 1);
        s.at(2, j) = Rational(j) - Rational(1, 3);
    }
    CHECK(determinant(s) == 0);
}

TEST_CASE("characteristic polynomial by determinant") {
    std::mt19937 rng(5150u);
    for (int n = 1; n <= 5; ++n) {
        const ExactMatrix m = random_matrix(rng, n);
        const ImmPolynomial p = char_poly_by_determinant(m);
        CHECK(p.shape() == Partition::single_column(n));
        CHECK(p.coeff(0) == 1);
        // trace and determinant coefficients
        Rational tr = 0;
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        CHECK(p.coeff(1) == tr);
        // (-1)^n c_n is det(-M), so c_n = det(M) for every n
        CHECK(p.coeff(n) == determinant(m));
        // evaluate at a few points against det(xI - M) directly
        for (int x = -2; x <= 2; ++x)
            CHECK(p.evaluate(Rational(x)) ==
                  determinant(m.scaled_identity_minus(Rational(x))));
    }
}
