#pragma once

#include <string>
#include <vector>

#include "immpoly/graph.hpp"
#include "immpoly/invariants.hpp"
#include "immpoly/partition.hpp"
#include "immpoly/rational.hpp"

namespace immpoly {

// Closed forms for the first six coefficients c_0..c_5 of the hook
// immanantal polynomial Imm_{(k,1^{n-k})}(xI - (beta D + gamma A)), written
// over graph counts:
//   F_r    elementary symmetric e_r of the degrees
//   M_r^s  matchings of size s completed by F of the remaining degrees
//   C_r^l  l-cycles completed likewise
//   T_j    degree sum over triangle j
// with b(a,c) = binom(a,c), zero outside 0 <= c <= a:
//
//   c_0 = b(n-1,k-1)
//   c_1 = beta F_1 b(n-1,k-1)
//   c_2 = beta^2 F_2 b(n-1,k-1) + gamma^2 M_2^1 X2             (n >= 3)
//   c_3 = beta^3 F_3 b(n-1,k-1) + beta gamma^2 M_3^1 X2
//         + 2 gamma^3 C_3^3 [b(n-4,k-4) + b(n-4,k-1)]          (n >= 4)
//   c_4 = beta^4 F_4 b(n-1,k-1) + beta^2 gamma^2 M_4^1 X2
//         + 2 beta gamma^3 C_4^3 [b(n-4,k-4) + b(n-4,k-1)]
//         + 2 gamma^4 C_4^4 [b(n-5,k-5) - b(n-5,k-1)]
//         + gamma^4 M_4^2 [b(n-5,k-5) - 2 b(n-5,k-3) + b(n-5,k-1)]  (n >= 5)
//   c_5 = beta^5 F_5 b(n-1,k-1) + beta^3 gamma^2 M_5^1 X2
//         + 2 beta^2 gamma^3 C_5^3 [b(n-4,k-4) + b(n-4,k-1)]
//         + 2 beta gamma^4 C_5^4 [b(n-5,k-5) - b(n-5,k-1)]
//         + beta gamma^4 M_5^2 [b(n-5,k-5) - 2 b(n-5,k-3) + b(n-5,k-1)]
//         + 2 gamma^5 C_5^5 [b(n-6,k-6) + b(n-6,k-1)]
//         + 2 gamma^5 sum_j (m + 3 - T_j)
//             [b(n-6,k-6) - b(n-6,k-4) + b(n-6,k-3) - b(n-6,k-1)]  (n >= 6)
//
// where X2 = ((2k-n-1)/(k-1)) b(n-2,k-2) is the hook character at one
// 2-cycle.  These match the subset-expansion oracle on every graph tried;
// see hook_coeff_uncorrected for the variant they were audited against.
// k = 1 is the determinant and is routed through the characteristic
// polynomial instead (X2 above would divide by zero).
Rational hook_coeff_closed(const Graph& g, int k, int r, const Rational& beta,
                           const Rational& gamma);

// The same coefficients under the uncorrected readings these formulas are
// sometimes stated with: the 3-cycle bracket as [b(n-4,k-4) - b(n-4,k-1)]
// in both c_3 and c_4, the c_4 3-cycle term without its factor 2, the
// 5-cycle bracket as
// [b(n-6,k-6) - b(n-6,k-1)], and the c_5 triangle-plus-edge term without
// its factor 2.  Kept so the audit can demonstrate the disagreement with
// the oracle; do not use for computation.
Rational hook_coeff_uncorrected(const Graph& g, int k, int r,
                                const Rational& beta, const Rational& gamma);

// Named specializations of the closed forms.
enum class SpecialCoeffs {
    laplacian,     // beta=1, gamma=-1
    signless,      // beta=1, gamma=+1
    adjacency,     // beta=0, gamma=1
    merris_second, // k=2 Laplacian forms published separately, r <= 3
    permanental,   // k=n adjacency forms published separately, r <= 4
};

// alpha only matters for none of the above; aalpha below takes it.
Rational specialized_coeff(const Graph& g, SpecialCoeffs which, int k, int r);
Rational aalpha_coeff(const Graph& g, const Rational& alpha, int k, int r);

// For regular graphs, equality of the hook-k adjacency immanantal
// polynomials is equivalent to equality of the hook-k polynomials of
// beta D + gamma A whenever gamma != 0 (D is a multiple of I, so the two
// polynomials differ by an argument shift and scaling).  The check computes
// both sides and reports whether the equivalences agree.
struct RegularEquivalenceReport {
    bool applicable = false;
    std::string skip_reason;
    bool adjacency_equal = false;
    bool lincomb_equal = false;
    bool ok = false;
};

RegularEquivalenceReport regular_equivalence_check(const Graph& g1,
                                                   const Graph& g2, int k,
                                                   const Rational& beta,
                                                   const Rational& gamma);

// One audited discrepancy between the uncorrected reading of the closed
// forms and the oracle, pinned to a concrete witness evaluation.
struct SignAuditRecord {
    std::string term_id;
    std::string uncorrected;  // the deviating reading
    std::string corrected;    // reading that matches the oracle
    Graph witness;
    int k;
    int r;
    Rational beta;
    Rational gamma;
};

const std::vector<SignAuditRecord>& sign_audit_records();

// CSV of the audit table: term id, both readings, witness graph6, k, r,
// beta, gamma, and the three evaluated values (uncorrected, corrected,
// oracle) at the witness.
std::string sign_audit_csv();

}  // namespace immpoly
