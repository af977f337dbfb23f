#include "doctest.h"
#include "immpoly/graph.hpp"
#include "immpoly/matrix.hpp"

#include <stdexcept>

using namespace immpoly;

TEST_CASE("matrix specs parse and expose coefficients") {
    CHECK(MatrixSpec::parse("D").coefficients() ==
          std::pair<Rational, Rational>{1, 0});
    CHECK(MatrixSpec::parse("A").coefficients() ==
          std::pair<Rational, Rational>{0, 1});
    CHECK(MatrixSpec::parse("L").coefficients() ==
          std::pair<Rational, Rational>{1, -1});
    CHECK(MatrixSpec::parse("Q").coefficients() ==
          std::pair<Rational, Rational>{1, 1});
    CHECK(MatrixSpec::parse("aalpha:1/3").coefficients() ==
          std::pair<Rational, Rational>{Rational(1, 3), Rational(2, 3)});
    CHECK(MatrixSpec::parse("lincomb:2,3").coefficients() ==
          std::pair<Rational, Rational>{2, 3});
    CHECK(MatrixSpec::parse("lincomb:-1/2,5").coefficients() ==
          std::pair<Rational, Rational>{Rational(-1, 2), 5});
    CHECK_THROWS_AS(MatrixSpec::parse("X"), std::invalid_argument);
    CHECK_THROWS_AS(MatrixSpec::parse("aalpha:"), std::invalid_argument);
    CHECK_THROWS_AS(MatrixSpec::parse("lincomb:1"), std::invalid_argument);
}

TEST_CASE("graph matrices") {
    const Graph c4 = Graph::cycle(4);
    const ExactMatrix l = graph_matrix(c4, MatrixSpec::parse("L"));
    // Laplacian rows sum to zero
    for (int i = 0; i < 4; ++i) {
        Rational row = 0;
        for (int j = 0; j < 4; ++j) row += l.at(i, j);
        CHECK(row == 0);
    }
    // Q = D + A entrywise
    const ExactMatrix q = graph_matrix(c4, MatrixSpec::parse("Q"));
    const ExactMatrix d = degree_matrix(c4);
    const ExactMatrix a = adjacency_matrix(c4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(q.at(i, j) == d.at(i, j) + a.at(i, j));
    // adjacency is symmetric 0/1 with zero diagonal
    for (int i = 0; i < 4; ++i) {
        CHECK(a.at(i, i) == 0);
        for (int j = 0; j < 4; ++j) CHECK(a.at(i, j) == a.at(j, i));
    }
    CHECK(lincomb_matrix(c4, Rational(2), Rational(3)).at(0, 0) == 4);
}

TEST_CASE("identity shifts") {
    ExactMatrix m(2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = 3;
    m.at(1, 0) = -1;
    m.at(1, 1) = 0;

    const ExactMatrix shifted = m.plus_scaled_identity(Rational(5, 2));
    CHECK(shifted.at(0, 0) == 3);
    CHECK(shifted.at(1, 1) == Rational(5, 2));
    CHECK(shifted.at(0, 1) == 3);

    const ExactMatrix wed = m.scaled_identity_minus(Rational(1));
    CHECK(wed.at(0, 0) == Rational(1, 2));
    CHECK(wed.at(0, 1) == -3);
    CHECK(wed.at(1, 0) == 1);
    CHECK(wed.at(1, 1) == 1);
}

TEST_CASE("submatrix takes ascending index sets") {
    ExactMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = 3 * i + j;
    const ExactMatrix s = m.submatrix({0, 2}, {1, 2});
    CHECK(s.order() == 2);
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(0, 1) == 2);
    CHECK(s.at(1, 0) == 7);
    CHECK(s.at(1, 1) == 8);
}
