#include "doctest.h"
#include "immpoly/immanant.hpp"
#include "immpoly/invariants.hpp"
#include "immpoly/limits.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/orientation.hpp"
#include "immpoly/poly.hpp"

using namespace immpoly;

TEST_CASE("hand-counted censuses") {
    // K_2, r = 2: both vertices shoot along the one edge, a 2-cycle
    {
        const OrientationCensus c = orientation_census(Graph::path(2), 2);
        CHECK(c.counts.size() == 1);
        CHECK(c.counts.at(Partition({2})) == 1);
        CHECK(c.total() == 1);
    }
    // P_3, r = 2: five assignments split 2 / 3
    {
        const OrientationCensus c = orientation_census(Graph::path(3), 2);
        CHECK(c.counts.at(Partition({2})) == 2);
        CHECK(c.counts.at(Partition({1, 1})) == 3);
        CHECK(c.total() == 5);
    }
    // K_3, r = 3: two directed triangles, six mutual-edge orientations
    {
        const OrientationCensus c = orientation_census(Graph::complete(3), 3);
        CHECK(c.counts.at(Partition({3})) == 2);
        CHECK(c.counts.at(Partition({2, 1})) == 6);
        CHECK(c.counts.count(Partition({1, 1, 1})) == 0);
        CHECK(c.total() == 8);
    }
    // r = 0: the empty orientation
    {
        const OrientationCensus c = orientation_census(Graph::cycle(4), 0);
        CHECK(c.total() == 1);
        CHECK(c.counts.at(Partition()) == 1);
    }
}

TEST_CASE("census totals are the degree elementary symmetric values") {
    for (const Graph& g : {Graph::path(5), Graph::cycle(6), Graph::star(5),
                           Graph::complete(5)})
        for (int r = 0; r <= g.n(); ++r) {
            const OrientationCensus par = orientation_census(g, r);
            const OrientationCensus ser = orientation_census_serial(g, r);
            CHECK(par.counts == ser.counts);
            CHECK(par.total() == graph_degree_elementary(g, r));
        }
}

TEST_CASE("isolated vertices contribute nothing for r >= 1") {
    const Graph lone(1, {});
    CHECK(orientation_census(lone, 1).total() == 0);
    CHECK(orientation_census(lone, 0).total() == 1);
}

TEST_CASE("coefficients via orientations match the subset expansion") {
    for (const Graph& g : {Graph::path(4), Graph::cycle(5),
                           Graph::complete(4), Graph::star(5)}) {
        const int n = g.n();
        for (const auto& [beta, gamma] :
             {std::pair<Rational, Rational>{1, -1},
              {1, 1},
              {0, 1},
              {Rational(2, 3), Rational(-5)}}) {
            const SubsetClassSums sums =
                subset_class_sums(lincomb_matrix(g, beta, gamma), n);
            for (const auto& lam : enumerate_partitions(n))
                for (int r = 0; r <= n; ++r)
                    CHECK(coeff_via_orientations(g, lam, r, beta, gamma) ==
                          coeff_from_subset_sums(sums, lam, r));
        }
    }
}

TEST_CASE("edge deletion never increases census counts") {
    for (const Graph& g : {Graph::cycle(5), Graph::complete(4)})
        for (const auto& e : g.edges())
            for (int r = 0; r <= g.n(); ++r)
                CHECK(check_edge_monotonicity(g, e, r).ok);
}

TEST_CASE("trees sit between the star and the path") {
    // the unique non-path non-star tree on 5 vertices: a fork
    const Graph fork(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    for (int r = 0; r <= 5; ++r)
        CHECK(check_tree_census_bounds(fork, r).ok);
}

TEST_CASE("the assignment budget is capped") {
    const auto keep = global_caps().census_assignments;
    global_caps().census_assignments = 10;
    CHECK_THROWS_AS(orientation_census(Graph::complete(4), 4),
                    tractability_error);
    global_caps().census_assignments = keep;
    CHECK(orientation_census(Graph::complete(4), 4).total() == 81);
}
