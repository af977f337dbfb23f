#include "doctest.h"
#include "immpoly/immanant.hpp"
#include "immpoly/zero_block.hpp"

#include <random>

#include "support/oracles.hpp"

using namespace immpoly;
using namespace immpoly::testing;

TEST_CASE("hand-sized witnesses") {
    ExactMatrix m(2);
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    const auto w = vanishes_by_zero_block(m);
    REQUIRE(w.has_value());
    CHECK(w->rows.size() + w->cols.size() == 3);
    for (int i : w->rows)
        for (int j : w->cols) CHECK(m.at(i, j) == 0);

    ExactMatrix id(3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(!vanishes_by_zero_block(id).has_value());
}

TEST_CASE("planted blocks kill every immanant") {
    std::mt19937 rng(13579u);
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            std::uniform_int_distribution<int> ydist(1, n);
            const int y = ydist(rng);
            const int z = n + 1 - y;
            std::vector<int> rows, cols;
            {
                std::vector<int> all(n);
                for (int i = 0; i < n; ++i) all[i] = i;
                std::shuffle(all.begin(), all.end(), rng);
                rows.assign(all.begin(), all.begin() + y);
                std::shuffle(all.begin(), all.end(), rng);
                cols.assign(all.begin(), all.begin() + z);
            }
            ExactMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational v = random_rational(rng);
                    if (v == 0) v = 1;
                    m.at(i, j) = v;
                }
            for (int i : rows)
                for (int j : cols) m.at(i, j) = 0;

            const auto w = vanishes_by_zero_block(m);
            REQUIRE(w.has_value());
            CHECK(w->rows.size() + w->cols.size() ==
                  static_cast<size_t>(n + 1));
            for (const auto& lam : enumerate_partitions(n))
                CHECK(immanant(m, lam) == 0);
        }
}

TEST_CASE("full support defeats the search") {
    std::mt19937 rng(8642u);
    for (int n = 2; n <= 5; ++n) {
        ExactMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational v = random_rational(rng);
                m.at(i, j) = v < 0 ? Rational(-v) : v;
            }
        for (int i = 0; i < n; ++i)
            if (m.at(i, i) == 0) m.at(i, i) = 1;
        CHECK(!vanishes_by_zero_block(m).has_value());
        CHECK(immanant(m, Partition::single_row(n)) > 0);
    }
}
