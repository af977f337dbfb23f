#include "doctest.h"
#include "immpoly/lr.hpp"

#include <stdexcept>

using namespace immpoly;

TEST_CASE("classical Littlewood-Richardson values") {
    CHECK(littlewood_richardson(Partition({2, 1}), Partition({1}),
                                Partition({1, 1})) == 1);
    CHECK(littlewood_richardson(Partition({2, 1}), Partition({1}),
                                Partition({2})) == 1);
    CHECK(littlewood_richardson(Partition({2, 2}), Partition({1}),
                                Partition({2, 1})) == 1);
    CHECK(littlewood_richardson(Partition({2, 2}), Partition({2}),
                                Partition({2})) == 1);
    CHECK(littlewood_richardson(Partition({2, 2}), Partition({2}),
                                Partition({1, 1})) == 0);
    // the standard multiplicity-2 example
    CHECK(littlewood_richardson(Partition({3, 2, 1}), Partition({2, 1}),
                                Partition({2, 1})) == 2);
    // mu not contained in lambda
    CHECK(littlewood_richardson(Partition({2, 2}), Partition({3}),
                                Partition({1})) == 0);
}

TEST_CASE("weight mismatches are rejected") {
    CHECK_THROWS_AS(littlewood_richardson(Partition({3, 1}), Partition({1}),
                                          Partition({1})),
                    std::invalid_argument);
}

TEST_CASE("symmetry in the two subshapes") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (int r = 1; r < n; ++r)
                for (const auto& mu : enumerate_partitions(r))
                    for (const auto& nu : enumerate_partitions(n - r))
                        CHECK(littlewood_richardson(lam, mu, nu) ==
                              littlewood_richardson(lam, nu, mu));
}

TEST_CASE("Pieri rule: adding a row strip") {
    // c^lambda_{mu,(k)} is 1 when lambda/mu is a horizontal k-strip, else 0
    CHECK(littlewood_richardson(Partition({3, 1}), Partition({2, 1}),
                                Partition({1})) == 1);
    CHECK(littlewood_richardson(Partition({3, 2}), Partition({2, 1}),
                                Partition({2})) == 1);
    CHECK(littlewood_richardson(Partition({3, 3}), Partition({2, 1}),
                                Partition({3})) == 0);
}

TEST_CASE("branching dimension identity") {
    // f^lambda = sum_{mu,nu} c^lambda_{mu,nu} f^mu f^nu over mu of weight r
    for (int n = 3; n <= 7; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (int r = 1; r < n; ++r) {
                Integer total = 0;
                for (const auto& mu : enumerate_partitions(r))
                    for (const auto& nu : enumerate_partitions(n - r))
                        total +=
                            littlewood_richardson(lam, mu, nu) *
                            character(mu, Partition::single_column(r)) *
                            character(nu, Partition::single_column(n - r));
                CHECK(total == character(lam, Partition::single_column(n)));
            }
}
