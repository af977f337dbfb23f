#include "doctest.h"
#include "immpoly/immanant.hpp"
#include "immpoly/laplace.hpp"

#include <random>
#include <stdexcept>

#include "support/oracles.hpp"

using namespace immpoly;
using namespace immpoly::testing;

TEST_CASE("two-by-two expansions carry the crossing signs") {
    // M = [[a,b],[c,d]].  Along R = {0}: the U = {1} term pairs b with c
    // through the transposition unshuffle, so for lambda = (1,1) that column
    // set is weighted chi(transposition) = -1 and the total is ad - bc; a
    // weight ignoring the crossing would give ad + bc.
    ExactMatrix m(2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 3;
    m.at(1, 0) = 5;
    m.at(1, 1) = 7;
    CHECK(laplace_expand(m, Partition({1, 1}), {0}) == 2 * 7 - 3 * 5);
    CHECK(laplace_expand(m, Partition({2}), {0}) == 2 * 7 + 3 * 5);
}

TEST_CASE("expansion is independent of the row set") {
    std::mt19937 rng(1123u);
    for (int n = 2; n <= 5; ++n) {
        const ExactMatrix m = random_matrix(rng, n);
        for (const auto& lam : enumerate_partitions(n)) {
            const Rational direct = immanant(m, lam);
            CHECK(laplace_expand(m, lam, {0}) == direct);
            if (n >= 3) CHECK(laplace_expand(m, lam, {1, 2}) == direct);
            if (n >= 4) CHECK(laplace_expand(m, lam, {0, 3}) == direct);
            if (n >= 5) CHECK(laplace_expand(m, lam, {0, 2, 4}) == direct);
        }
    }
}

TEST_CASE("expansions specialize to cofactors and permanent splits") {
    std::mt19937 rng(445566u);
    const ExactMatrix m = random_matrix(rng, 4);
    CHECK(laplace_expand(m, Partition::single_column(4), {2}) ==
          immanant(m, Partition::single_column(4)));
    CHECK(laplace_expand(m, Partition::single_row(4), {0, 1}) ==
          ryser_permanent(m));
}

TEST_CASE("row sets must be proper, nonempty, and ascending") {
    ExactMatrix m(3);
    CHECK_THROWS_AS(laplace_expand(m, Partition({3}), {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(laplace_expand(m, Partition({3}), {0, 1, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(laplace_expand(m, Partition({3}), {1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(laplace_expand(m, Partition({3}), {0, 7}),
                    std::invalid_argument);
}

TEST_CASE("restriction multiplicities are LR branching coefficients") {
    for (int n = 3; n <= 5; ++n) {
        for (int r = 1; r < n; ++r) {
            const auto mus = enumerate_partitions(r);
            const auto nus = enumerate_partitions(n - r);
            for (const auto& lam : enumerate_partitions(n)) {
                const auto w = branching_coefficients(lam, r);
                REQUIRE(w.size() == mus.size());
                for (size_t a = 0; a < mus.size(); ++a) {
                    REQUIRE(w[a].size() == nus.size());
                    for (size_t b = 0; b < nus.size(); ++b)
                        CHECK(w[a][b] ==
                              littlewood_richardson(lam, mus[a], nus[b]));
                }
            }
        }
    }
}
