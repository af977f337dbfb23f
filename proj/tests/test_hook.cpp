#include "doctest.h"
#include "immpoly/det.hpp"
#include "immpoly/hook.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/poly.hpp"

#include <sstream>
#include <stdexcept>

using namespace immpoly;

namespace {

Rational oracle_coeff(const Graph& g, int k, int r, const Rational& beta,
                      const Rational& gamma) {
    return coeff_from_subset_sums(
        subset_class_sums(lincomb_matrix(g, beta, gamma), r),
        Partition::hook(g.n(), k), r);
}

}  // namespace

TEST_CASE("closed forms match the subset oracle on assorted graphs") {
    const Graph graphs[] = {
        Graph::path(5),      Graph::cycle(5),  Graph::complete(4),
        Graph::star(6),      Graph::cycle(7),
        Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}),  // triangle+tail
        Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                  {0, 3}, {1, 4}, {2, 5}}),  // prism
    };
    const std::pair<Rational, Rational> settings[] = {
        {1, -1}, {1, 1}, {0, 1}, {2, 3}, {Rational(1, 2), Rational(-3, 2)}};
    for (const Graph& g : graphs) {
        const int n = g.n();
        for (const auto& [beta, gamma] : settings)
            for (int k = 1; k <= n; ++k)
                for (int r = 0; r <= std::min(5, n); ++r) {
                    const int min_order[6] = {1, 1, 3, 4, 5, 6};
                    if (n < min_order[r]) continue;
                    CHECK(hook_coeff_closed(g, k, r, beta, gamma) ==
                          oracle_coeff(g, k, r, beta, gamma));
                }
    }
}

TEST_CASE("side conditions throw below the minimum order") {
    const Graph k2 = Graph::complete(2);
    CHECK_THROWS_AS(hook_coeff_closed(k2, 2, 2, 1, 1),
                    std::invalid_argument);
    const Graph p3 = Graph::path(3);
    CHECK_THROWS_AS(hook_coeff_closed(p3, 2, 3, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(hook_coeff_closed(Graph::path(4), 2, 4, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(hook_coeff_closed(Graph::path(5), 2, 5, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(hook_coeff_closed(p3, 4, 1, 1, 1),
                    std::invalid_argument);  // k > n
}

TEST_CASE("k = 1 takes the determinant route") {
    for (const Graph& g : {Graph::path(4), Graph::cycle(5)}) {
        const ExactMatrix l = lincomb_matrix(g, 1, -1);
        const ImmPolynomial p = char_poly_by_determinant(l);
        for (int r = 0; r <= std::min(5, g.n()); ++r)
            CHECK(hook_coeff_closed(g, 1, r, 1, -1) == p.coeff(r));
    }
}

TEST_CASE("each audited sign deviation bites at its witness") {
    const auto& records = sign_audit_records();
    REQUIRE(records.size() == 5);
    for (const auto& rec : records) {
        const Rational oracle =
            oracle_coeff(rec.witness, rec.k, rec.r, rec.beta, rec.gamma);
        CHECK(hook_coeff_closed(rec.witness, rec.k, rec.r, rec.beta,
                                rec.gamma) == oracle);
        CHECK(hook_coeff_uncorrected(rec.witness, rec.k, rec.r, rec.beta,
                                     rec.gamma) != oracle);
    }
}

TEST_CASE("the uncorrected variant agrees wherever no deviation applies") {
    // r <= 2 terms are identical in both variants
    for (const Graph& g : {Graph::path(5), Graph::complete(4)})
        for (int k = 1; k <= g.n(); ++k)
            for (int r = 0; r <= 2; ++r)
                CHECK(hook_coeff_closed(g, k, r, 1, 1) ==
                      hook_coeff_uncorrected(g, k, r, 1, 1));
    // triangle-free graphs dodge every c_3/c_4 3-cycle deviation,
    // and at r = 4 the 3-cycle factor and bracket are the only differences
    const Graph c6 = Graph::cycle(6);
    for (int k = 1; k <= 6; ++k)
        for (int r = 3; r <= 4; ++r)
            CHECK(hook_coeff_closed(c6, k, r, 1, 1) ==
                  hook_coeff_uncorrected(c6, k, r, 1, 1));
}

TEST_CASE("audit csv shape") {
    const std::string csv = sign_audit_csv();
    std::istringstream is(csv);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line ==
          "term_id,uncorrected_reading,corrected_reading,witness_graph6,k,r,"
          "beta,gamma,uncorrected_value,corrected_value,oracle_value");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);
}

TEST_CASE("named specializations and aalpha routing") {
    const Graph g = Graph::cycle(5);
    for (int k = 1; k <= 5; ++k)
        for (int r = 0; r <= 3; ++r) {
            CHECK(specialized_coeff(g, SpecialCoeffs::laplacian, k, r) ==
                  hook_coeff_closed(g, k, r, 1, -1));
            CHECK(specialized_coeff(g, SpecialCoeffs::signless, k, r) ==
                  hook_coeff_closed(g, k, r, 1, 1));
            CHECK(specialized_coeff(g, SpecialCoeffs::adjacency, k, r) ==
                  hook_coeff_closed(g, k, r, 0, 1));
            CHECK(aalpha_coeff(g, Rational(1, 3), k, r) ==
                  hook_coeff_closed(g, k, r, Rational(1, 3), Rational(2, 3)));
        }
    CHECK_THROWS_AS(aalpha_coeff(g, Rational(3, 2), 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(aalpha_coeff(g, Rational(-1, 2), 2, 1),
                    std::invalid_argument);
}

TEST_CASE("second-hook Laplacian corollary values") {
    // These specialize the general forms at k = 2, beta = 1, gamma = -1.
    for (const Graph& g : {Graph::path(5), Graph::cycle(6),
                           Graph::complete(4)}) {
        const int n = g.n();
        for (int r = 0; r <= 3; ++r) {
            if (r == 2 && n < 3) continue;
            if (r == 3 && n < 4) continue;
            const Rational v =
                specialized_coeff(g, SpecialCoeffs::merris_second, 2, r);
            CHECK(v == oracle_coeff(g, 2, r, 1, -1));
        }
    }
    CHECK_THROWS_AS(
        specialized_coeff(Graph::path(5), SpecialCoeffs::merris_second, 3, 1),
        std::invalid_argument);
}

TEST_CASE("permanental corollary values") {
    // C_4: c_0..c_4 of per(xI - A) are 1, 0, 4, 0, 4
    const Graph c4 = Graph::cycle(4);
    const Rational expect[5] = {1, 0, 4, 0, 4};
    for (int r = 0; r <= 4; ++r) {
        const Rational v =
            specialized_coeff(c4, SpecialCoeffs::permanental, 4, r);
        CHECK(v == expect[r]);
        CHECK(v == oracle_coeff(c4, 4, r, 0, 1));
    }
    // K_4: c_3 = 2 * 4 triangles = 8
    CHECK(specialized_coeff(Graph::complete(4), SpecialCoeffs::permanental, 4,
                            3) == 8);
    CHECK_THROWS_AS(
        specialized_coeff(c4, SpecialCoeffs::permanental, 3, 0),
        std::invalid_argument);
}

TEST_CASE("regular equivalence reports") {
    const auto cyc = regular_equivalence_check(Graph::cycle(6),
                                               Graph::complete(4), 2, 1, 1);
    CHECK(cyc.applicable);
    CHECK(cyc.ok);
    const auto irregular = regular_equivalence_check(
        Graph::path(4), Graph::cycle(4), 2, 1, 1);
    CHECK(!irregular.applicable);
    CHECK(irregular.skip_reason == "first graph not regular");
    const auto nogamma = regular_equivalence_check(
        Graph::cycle(4), Graph::cycle(4), 2, 1, 0);
    CHECK(!nogamma.applicable);
    CHECK(nogamma.skip_reason == "gamma == 0");
}
