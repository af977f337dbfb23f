#pragma once

#include <map>
#include <string>
#include <utility>

#include "immpoly/character.hpp"
#include "immpoly/graph.hpp"
#include "immpoly/partition.hpp"
#include "immpoly/rational.hpp"

namespace immpoly {

// Census of vertex-subset orientations: for each r-subset B, every vertex
// of B shoots one arrow along an incident edge (degree(v) choices, degrees
// of the full graph).  The arrows form an out-degree-1 map B -> V; its
// directed cycles lying inside B (a doubly-arrowed edge is a 2-cycle)
// become the parts >= 2 of the type, every remaining arrow a part 1, so
// each orientation gets a partition of r.  counts[nu] = number of
// orientations of type nu over all B.  The total equals e_r of the degree
// sequence, which is also the enumeration budget checked against the
// census cap.
struct OrientationCensus {
    int r = 0;
    std::map<Partition, Integer> counts;
    Integer total() const;
};

OrientationCensus orientation_census_serial(const Graph& g, int r);
OrientationCensus orientation_census(const Graph& g, int r);

// Coefficient c_{lambda,r} of the immanantal polynomial of
// beta*D(G) + gamma*A(G) assembled from the census:
//
//   sum_nu a_G(nu,r) sum_{mu subselecting the parts >= 2 of nu}
//     prod_l binom(r_l, t_l) beta^{r-w} gamma^{w} chi_lambda(mu + 1^{n-w})
//
// where w is the summed size of the selected parts.  beta = 0 is fine:
// powers are formed with x^0 == 1 by convention.
Rational coeff_via_orientations(const Graph& g, const Partition& lam, int r,
                                const Rational& beta, const Rational& gamma);

struct CensusCheckReport {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};

// a_{G-e}(nu,r) <= a_G(nu,r) for every type nu.
CensusCheckReport check_edge_monotonicity(const Graph& g,
                                          std::pair<int, int> e, int r);

// For a tree T on n vertices: a_{star}(nu,r) <= a_T(nu,r) <= a_{path}(nu,r)
// for every type nu appearing in any of the three censuses.
CensusCheckReport check_tree_census_bounds(const Graph& t, int r);

// Coefficient sandwiches c(lower) <= c(G) <= c(upper), with the extremes
// depending on the regime:
//   general:   star <= G <= complete;    G connected
//   tree:      star <= T <= path;        T a tree
//   bipartite: star <= G <= K_{ceil(n/2),floor(n/2)};  G connected bipartite
// All three need beta > 0, gamma != 0, and -beta <= gamma <= beta.  The last
// condition is sharp, not cautious: a doubly-arrowed edge contributes
// gamma^2 against beta^2 for two single arrows, so each orientation class
// enters the tree coefficients through beta^{r_1}(beta^2-gamma^2)^{r_2},
// and once |gamma| > beta larger censuses can lower the coefficient.  At
// (beta,gamma) = (1,2), n = 4, lambda = (1^4), r = 3 the tree sandwich
// reverses: c(star) = -14 > c(path) = -20.
// Hypothesis violations make the check inapplicable (skipped), not failed.
enum class BoundRegime { general, tree, bipartite };

struct CoeffBoundsReport {
    bool applicable = false;
    std::string skip_reason;
    bool ok = false;
    Rational lower, value, upper;
};

CoeffBoundsReport check_coeff_bounds(const Graph& g, const Partition& lam,
                                     int r, const Rational& beta,
                                     const Rational& gamma, BoundRegime regime);

}  // namespace immpoly
