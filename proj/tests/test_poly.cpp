#include "doctest.h"
#include "immpoly/det.hpp"
#include "immpoly/graph.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/poly.hpp"

#include <random>

#include "support/oracles.hpp"

using namespace immpoly;
using namespace immpoly::testing;

TEST_CASE("signed and unsigned coefficient views round-trip") {
    // p(x) = x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3): c = 1, 6, 11, 6
    const ImmPolynomial p(Partition::single_column(3),
                          {1, 6, 11, 6});
    CHECK(p.evaluate(1) == 0);
    CHECK(p.evaluate(2) == 0);
    CHECK(p.evaluate(3) == 0);
    CHECK(p.evaluate(0) == -6);
    const auto a = p.signed_coeffs();  // x^0..x^3
    CHECK(a[0] == -6);
    CHECK(a[1] == 11);
    CHECK(a[2] == -6);
    CHECK(a[3] == 1);
    CHECK(ImmPolynomial::from_signed(p.shape(), a) == p);
}

TEST_CASE("argument shifts") {
    std::mt19937 rng(99u);
    for (int n = 2; n <= 5; ++n) {
        const ExactMatrix m = random_matrix(rng, n);
        const ImmPolynomial p = char_poly_by_determinant(m);
        const Rational c(3, 2);
        // q(x) = p(x - c) is the polynomial of M + cI
        const ImmPolynomial q = p.shifted_argument(c);
        const ImmPolynomial direct =
            char_poly_by_determinant(m.plus_scaled_identity(c));
        CHECK(q == direct);
        for (int x = -2; x <= 2; ++x)
            CHECK(q.evaluate(Rational(x)) == p.evaluate(Rational(x) - c));
    }
}

TEST_CASE("exact interpolation recovers monomial coefficients") {
    // f(x) = (2x - 1)(x + 3)/4 = (2x^2 + 5x - 3)/4
    std::vector<Rational> xs, ys;
    for (int x = 0; x <= 2; ++x) {
        xs.push_back(x);
        ys.push_back((Rational(2) * x * x + Rational(5) * x - 3) /
                     Rational(4));
    }
    const auto a = interpolate_monomial_coeffs(xs, ys);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == Rational(-3, 4));
    CHECK(a[1] == Rational(5, 4));
    CHECK(a[2] == Rational(1, 2));
}

TEST_CASE("subset route equals interpolation route") {
    std::mt19937 rng(271828u);
    for (int n = 2; n <= 5; ++n) {
        const ExactMatrix m = random_matrix(rng, n);
        for (const auto& lam : enumerate_partitions(n))
            CHECK(imm_poly(m, lam) == imm_poly_interpolated(m, lam));
    }
}

TEST_CASE("leading coefficient is the shape's dimension") {
    const ExactMatrix m = lincomb_matrix(Graph::cycle(5), 1, 1);
    for (const auto& lam : enumerate_partitions(5))
        CHECK(imm_poly(m, lam).coeff(0) ==
              Rational(character(lam, Partition::single_column(5))));
}

TEST_CASE("hook-(1^n) polynomial equals the determinant route") {
    std::mt19937 rng(6174u);
    for (int n = 2; n <= 6; ++n) {
        const ExactMatrix m = random_matrix(rng, n);
        CHECK(imm_poly(m, Partition::single_column(n)) ==
              char_poly_by_determinant(m));
    }
}

TEST_CASE("root multiplicities by synthetic division") {
    // (x - 1)^2 (x + 2) = x^3 - 3x + 2: signed a = (2, -3, 0, 1)
    const ImmPolynomial p = ImmPolynomial::from_signed(
        Partition::single_column(3), {2, -3, 0, 1});
    CHECK(root_multiplicity(p, 1) == 2);
    CHECK(root_multiplicity(p, -2) == 1);
    CHECK(root_multiplicity(p, 5) == 0);
    const ImmPolynomial zero(Partition::single_column(2), {0, 0, 0});
    CHECK(zero.is_zero());
    CHECK(root_multiplicity(zero, 7) == 3);  // order + 1 marks "identically 0"
}

TEST_CASE("star degree bound report on a star") {
    // star on 6 vertices: 5 pendants at one center, star degree 4
    const Graph s = Graph::star(6);
    const auto rep = star_degree_bound_check(s, Partition::hook(6, 2),
                                             Rational(1), Rational(-1));
    CHECK(rep.star_degree == 4);
    CHECK(rep.multiplicity >= 4);
    CHECK(rep.ok);
}
