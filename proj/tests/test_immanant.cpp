#include "doctest.h"
#include "immpoly/det.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/limits.hpp"

#include <map>
#include <random>

#include "support/oracles.hpp"

using namespace immpoly;
using namespace immpoly::testing;

TEST_CASE("sign and trivial characters give determinant and permanent") {
    std::mt19937 rng(12345u);
    for (int n = 1; n <= 6; ++n)
        for (int t = 0; t < 5; ++t) {
            const ExactMatrix m = random_matrix(rng, n);
            CHECK(immanant(m, Partition::single_column(n)) == determinant(m));
            CHECK(immanant(m, Partition::single_row(n)) ==
                  ryser_permanent(m));
        }
}

TEST_CASE("immanants match brute force with a frozen character table") {
    // S_4 table, classes in reverse-lex order (4),(3,1),(2,2),(2,1,1),(1^4)
    const auto classes = enumerate_partitions(4);
    const std::map<Partition, std::map<Partition, Integer>> table = [&] {
        const long rows[5][5] = {
            {1, 1, 1, 1, 1},
            {-1, 0, -1, 1, 3},
            {0, -1, 2, 0, 2},
            {1, 0, -1, -1, 3},
            {-1, 1, 1, -1, 1},
        };
        std::map<Partition, std::map<Partition, Integer>> t;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                t[classes[a]][classes[b]] = rows[a][b];
        return t;
    }();

    std::mt19937 rng(777u);
    for (int t = 0; t < 10; ++t) {
        const ExactMatrix m = random_matrix(rng, 4);
        for (const auto& lam : classes) {
            const Rational direct = brute_immanant(
                m, [&](const Partition& mu) { return table.at(lam).at(mu); });
            CHECK(immanant(m, lam) == direct);
        }
    }
}

TEST_CASE("class sums are schedule independent and complete") {
    std::mt19937 rng(2024u);
    for (int n = 2; n <= 6; ++n) {
        const ExactMatrix m = random_matrix(rng, n);
        const CycleTypeSums par = immanant_class_sums(m);
        const CycleTypeSums ser = immanant_class_sums_serial(m);
        REQUIRE(par.types == ser.types);
        CHECK(par.sums == ser.sums);
        // the unweighted total over all classes is the permanent
        Rational total = 0;
        for (const auto& s : par.sums) total += s;
        CHECK(total == ryser_permanent(m));
    }
}

TEST_CASE("subset sums agree with their serial reference") {
    std::mt19937 rng(31337u);
    for (int n = 2; n <= 6; ++n) {
        const ExactMatrix m = random_matrix(rng, n);
        const SubsetClassSums par = subset_class_sums(m, n);
        const SubsetClassSums ser = subset_class_sums_serial(m, n);
        REQUIRE(par.types == ser.types);
        CHECK(par.sums == ser.sums);
        // row n sums over all of S_n: padded type = actual type
        const CycleTypeSums full = immanant_class_sums(m);
        for (size_t t = 0; t < full.types.size(); ++t)
            CHECK(par.sums[n][t] == full.sums[t]);
        // row 0 is the single empty product
        for (size_t t = 0; t < par.types.size(); ++t)
            CHECK(par.sums[0][t] ==
                  (par.types[t] == Partition::single_column(n) ? 1 : 0));
    }
}

TEST_CASE("weight mismatches and caps are rejected") {
    ExactMatrix m(3);
    CHECK_THROWS_AS(immanant(m, Partition({2, 1, 1})),
                    std::invalid_argument);
    const int keep = global_caps().immanant_order;
    global_caps().immanant_order = 2;
    CHECK_THROWS_AS(immanant(m, Partition({3})), tractability_error);
    global_caps().immanant_order = keep;
}
