#include "doctest.h"
#include "immpoly/character.hpp"

#include <stdexcept>

using namespace immpoly;

TEST_CASE("binomials use the combinatorial zero convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("factorials and centralizer orders") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(7) == 5040);
    CHECK(centralizer_order(Partition({2, 1})) == 2);   // class size 3 in S_3
    CHECK(centralizer_order(Partition({3})) == 3);      // class size 2
    CHECK(centralizer_order(Partition::single_column(3)) == 6);
    CHECK(centralizer_order(Partition({2, 2, 1})) == 8);  // 2^2 2! 1
    // class sizes of S_4 sum to 4!
    Integer total = 0;
    for (const auto& mu : enumerate_partitions(4))
        total += factorial(4) / centralizer_order(mu);
    CHECK(total == 24);
}

// Classical character tables of S_3 and S_4, frozen as an oracle that shares
// nothing with the Murnaghan-Nakayama implementation.  Rows are shapes and
// columns classes, both in reverse-lex order.
TEST_CASE("character values match the classical S_3 and S_4 tables") {
    const auto s3 = enumerate_partitions(3);  // (3), (2,1), (1,1,1)
    const long t3[3][3] = {
        {1, 1, 1},    // (3)
        {-1, 0, 2},   // (2,1)
        {1, -1, 1},   // (1^3)
    };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(character(s3[a], s3[b]) == t3[a][b]);

    const auto s4 = enumerate_partitions(4);
    // classes: (4), (3,1), (2,2), (2,1,1), (1^4)
    const long t4[5][5] = {
        {1, 1, 1, 1, 1},     // (4)
        {-1, 0, -1, 1, 3},   // (3,1)
        {0, -1, 2, 0, 2},    // (2,2)
        {1, 0, -1, -1, 3},   // (2,1,1)
        {-1, 1, 1, -1, 1},   // (1^4)
    };
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            CHECK(character(s4[a], s4[b]) == t4[a][b]);
}

TEST_CASE("weight mismatch is rejected") {
    CHECK_THROWS_AS(character(Partition({2, 1}), Partition({2, 2})),
                    std::invalid_argument);
}

TEST_CASE("column orthogonality") {
    // sum over shapes of chi(mu) chi(nu) = z_mu [mu == nu]
    for (int n = 2; n <= 6; ++n) {
        const auto shapes = enumerate_partitions(n);
        for (size_t a = 0; a < shapes.size(); ++a)
            for (size_t b = a; b < shapes.size(); ++b) {
                Integer s = 0;
                for (const auto& lam : shapes)
                    s += character(lam, shapes[a]) * character(lam, shapes[b]);
                CHECK(s == (a == b ? centralizer_order(shapes[a])
                                   : Integer(0)));
            }
    }
}

TEST_CASE("rim hook removal on (3,2)") {
    const auto hooks2 = remove_rim_hooks(Partition({3, 2}), 2);
    REQUIRE(hooks2.size() == 1);
    CHECK(hooks2[0].first == Partition({3}));
    CHECK(hooks2[0].second == 0);
    // a strip of the full weight exists only for hooks
    CHECK(remove_rim_hooks(Partition({2, 2}), 4).empty());
    CHECK(remove_rim_hooks(Partition({3, 1}), 4).size() == 1);
}

TEST_CASE("hook fast paths agree with the recursion") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(hook_character_identity(n, k) ==
                  character(Partition::hook(n, k),
                            Partition::single_column(n)));
            for (int l = 2; l <= n; ++l) {
                std::vector<int> p{l};
                p.insert(p.end(), n - l, 1);
                CHECK(hook_character_lcycle(n, k, l) ==
                      character(Partition::hook(n, k), Partition(p)));
            }
            for (int i = 1; 2 * i <= n; ++i) {
                std::vector<int> p(i, 2);
                p.insert(p.end(), n - 2 * i, 1);
                CHECK(hook_character_involution(n, k, i) ==
                      character(Partition::hook(n, k), Partition(p)));
            }
            if (n >= 5) {
                std::vector<int> p{3, 2};
                p.insert(p.end(), n - 5, 1);
                CHECK(hook_character_32(n, k) ==
                      character(Partition::hook(n, k), Partition(p)));
            }
        }
}
