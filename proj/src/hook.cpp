#include "immpoly/hook.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "immpoly/character.hpp"
#include "immpoly/det.hpp"
#include "immpoly/graph6.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/invariants.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/poly.hpp"

namespace immpoly {

namespace {

Rational b(int a, long c) { return Rational(binomial(a, c)); }

// chi_{(k,1^{n-k})} at one 2-cycle, in the rational form the closed forms
// are written in; equals hook_character_involution(n, k, 1).  Needs k >= 2.
Rational x2_factor(int n, int k) {
    return Rational(2 * k - n - 1) / Rational(k - 1) * b(n - 2, k - 2);
}

Integer triangle_edge_count(const Graph& g) {
    Integer te = 0;
    for (int t : triangle_degree_sums(g)) te += Integer(g.m() + 3 - t);
    return te;
}

Rational closed_impl(const Graph& g, int k, int r, const Rational& beta,
                     const Rational& gamma, bool uncorrected) {
    const int n = g.n();
    if (k < 1 || k > n)
        throw std::invalid_argument("hook coefficient: k out of range");
    if (r < 0 || r > 5)
        throw std::invalid_argument(
            "hook coefficient: closed forms cover r = 0..5 only");
    if (r > n) throw std::invalid_argument("hook coefficient: r > n");
    if (k == 1)  // determinant: the rational 2-cycle factor has k-1 = 0
        return char_poly_by_determinant(lincomb_matrix(g, beta, gamma))
            .coeff(r);
    static constexpr int kMinOrder[6] = {1, 1, 3, 4, 5, 6};
    if (n < kMinOrder[r]) {
        std::ostringstream os;
        os << "closed form for c_" << r << " needs n >= " << kMinOrder[r];
        throw std::invalid_argument(os.str());
    }

    const Rational bnk = b(n - 1, k - 1);
    auto F = [&](int rr) { return Rational(graph_degree_elementary(g, rr)); };
    auto pw = [](const Rational& x, int e) { return rational_pow(x, e); };

    switch (r) {
        case 0:
            return bnk;
        case 1:
            return beta * F(1) * bnk;
        case 2:
            return pw(beta, 2) * F(2) * bnk +
                   pw(gamma, 2) * Rational(census_M(g, 2, 1)) * x2_factor(n, k);
        case 3: {
            const Rational br3 =
                uncorrected ? Rational(b(n - 4, k - 4) - b(n - 4, k - 1))
                            : Rational(b(n - 4, k - 4) + b(n - 4, k - 1));
            return pw(beta, 3) * F(3) * bnk +
                   beta * pw(gamma, 2) * Rational(census_M(g, 3, 1)) *
                       x2_factor(n, k) +
                   2 * pw(gamma, 3) * Rational(census_C(g, 3, 3)) * br3;
        }
        case 4: {
            const Rational br3 =
                uncorrected ? Rational(b(n - 4, k - 4) - b(n - 4, k - 1))
                            : Rational(b(n - 4, k - 4) + b(n - 4, k - 1));
            const Rational br4 = b(n - 5, k - 5) - b(n - 5, k - 1);
            const Rational br22 =
                b(n - 5, k - 5) - 2 * b(n - 5, k - 3) + b(n - 5, k - 1);
            return pw(beta, 4) * F(4) * bnk +
                   pw(beta, 2) * pw(gamma, 2) * Rational(census_M(g, 4, 1)) *
                       x2_factor(n, k) +
                   (uncorrected ? 1 : 2) * beta * pw(gamma, 3) *
                       Rational(census_C(g, 4, 3)) * br3 +
                   2 * pw(gamma, 4) * Rational(census_C(g, 4, 4)) * br4 +
                   pw(gamma, 4) * Rational(census_M(g, 4, 2)) * br22;
        }
        case 5: {
            // the 3-cycle bracket deviates only in c_3 and c_4; both
            // variants agree on it here
            const Rational br3 = b(n - 4, k - 4) + b(n - 4, k - 1);
            const Rational br4 = b(n - 5, k - 5) - b(n - 5, k - 1);
            const Rational br22 =
                b(n - 5, k - 5) - 2 * b(n - 5, k - 3) + b(n - 5, k - 1);
            const Rational br5 =
                uncorrected ? Rational(b(n - 6, k - 6) - b(n - 6, k - 1))
                            : Rational(b(n - 6, k - 6) + b(n - 6, k - 1));
            const Rational br32 = b(n - 6, k - 6) - b(n - 6, k - 4) +
                                  b(n - 6, k - 3) - b(n - 6, k - 1);
            return pw(beta, 5) * F(5) * bnk +
                   pw(beta, 3) * pw(gamma, 2) * Rational(census_M(g, 5, 1)) *
                       x2_factor(n, k) +
                   2 * pw(beta, 2) * pw(gamma, 3) *
                       Rational(census_C(g, 5, 3)) * br3 +
                   2 * beta * pw(gamma, 4) * Rational(census_C(g, 5, 4)) * br4 +
                   beta * pw(gamma, 4) * Rational(census_M(g, 5, 2)) * br22 +
                   2 * pw(gamma, 5) * Rational(census_C(g, 5, 5)) * br5 +
                   (uncorrected ? 1 : 2) * pw(gamma, 5) *
                       Rational(triangle_edge_count(g)) * br32;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Rational hook_coeff_closed(const Graph& g, int k, int r, const Rational& beta,
                           const Rational& gamma) {
    return closed_impl(g, k, r, beta, gamma, false);
}

Rational hook_coeff_uncorrected(const Graph& g, int k, int r,
                                const Rational& beta, const Rational& gamma) {
    return closed_impl(g, k, r, beta, gamma, true);
}

Rational specialized_coeff(const Graph& g, SpecialCoeffs which, int k, int r) {
    const int n = g.n();
    switch (which) {
        case SpecialCoeffs::laplacian:
            return hook_coeff_closed(g, k, r, Rational(1), Rational(-1));
        case SpecialCoeffs::signless:
            return hook_coeff_closed(g, k, r, Rational(1), Rational(1));
        case SpecialCoeffs::adjacency:
            return hook_coeff_closed(g, k, r, Rational(0), Rational(1));
        case SpecialCoeffs::merris_second: {
            if (k != 2)
                throw std::invalid_argument("merris_second fixes k = 2");
            if (n < 2 || r < 0 || r > 3 || r > n)
                throw std::invalid_argument("merris_second covers r <= 3");
            if (r == 2 && n < 3)
                throw std::invalid_argument("merris_second c_2 needs n >= 3");
            if (r == 3 && n < 4)
                throw std::invalid_argument("merris_second c_3 needs n >= 4");
            const Integer m(g.m());
            switch (r) {
                case 0:
                    return Rational(n - 1);
                case 1:
                    return Rational(2 * m * (n - 1));
                case 2:
                    return Rational((n - 1) * graph_degree_elementary(g, 2) -
                                    m * (n - 3));
                case 3:
                    return Rational((n - 1) * graph_degree_elementary(g, 3) -
                                    (n - 3) * census_M(g, 3, 1) -
                                    2 * (n - 4) * census_C(g, 3, 3));
            }
            throw std::logic_error("unreachable");
        }
        case SpecialCoeffs::permanental: {
            if (k != n)
                throw std::invalid_argument("permanental fixes k = n");
            if (r < 0 || r > 4 || r > n)
                throw std::invalid_argument("permanental covers r <= 4");
            switch (r) {
                case 0:
                    return Rational(1);
                case 1:
                    return Rational(0);
                case 2:
                    return Rational(g.m());
                case 3:
                    return Rational(2 * census_C(g, 3, 3));
                case 4: {
                    Integer v = binomial(g.m(), 2);
                    for (int d : g.degrees()) v -= binomial(d, 2);
                    v += 2 * census_C(g, 4, 4);
                    return Rational(v);
                }
            }
            throw std::logic_error("unreachable");
        }
    }
    throw std::logic_error("unreachable");
}

Rational aalpha_coeff(const Graph& g, const Rational& alpha, int k, int r) {
    if (alpha < 0 || alpha > 1)
        throw std::invalid_argument("aalpha_coeff: alpha outside [0, 1]");
    return hook_coeff_closed(g, k, r, alpha, Rational(1) - alpha);
}

RegularEquivalenceReport regular_equivalence_check(const Graph& g1,
                                                   const Graph& g2, int k,
                                                   const Rational& beta,
                                                   const Rational& gamma) {
    RegularEquivalenceReport rep;
    const int n1 = g1.n(), n2 = g2.n();
    if (k < 1 || k > std::min(n1, n2))
        throw std::invalid_argument("regular equivalence: k out of range");
    if (!g1.regular_degree()) {
        rep.skip_reason = "first graph not regular";
        return rep;
    }
    if (!g2.regular_degree()) {
        rep.skip_reason = "second graph not regular";
        return rep;
    }
    if (gamma == 0) {
        rep.skip_reason = "gamma == 0";
        return rep;
    }
    rep.applicable = true;
    const ImmPolynomial pa1 =
        imm_poly(adjacency_matrix(g1), Partition::hook(n1, k));
    const ImmPolynomial pa2 =
        imm_poly(adjacency_matrix(g2), Partition::hook(n2, k));
    const ImmPolynomial pl1 =
        imm_poly(lincomb_matrix(g1, beta, gamma), Partition::hook(n1, k));
    const ImmPolynomial pl2 =
        imm_poly(lincomb_matrix(g2, beta, gamma), Partition::hook(n2, k));
    rep.adjacency_equal = pa1 == pa2;
    rep.lincomb_equal = pl1 == pl2;
    rep.ok = rep.adjacency_equal == rep.lincomb_equal;
    return rep;
}

namespace {

// triangle with a 2-edge tail hanging off one corner
Graph tadpole_3_2() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
}

// 5-cycle with a 2-edge tail
Graph c5_with_tail() {
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}});
}

// two triangles joined by a perfect matching
Graph prism() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                     {0, 3}, {1, 4}, {2, 5}});
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

const std::vector<SignAuditRecord>& sign_audit_records() {
    static const std::vector<SignAuditRecord> records = {
        {"c3-3cycle-bracket",
         "2 gamma^3 C_3^3 [b(n-4,k-4) - b(n-4,k-1)]",
         "2 gamma^3 C_3^3 [b(n-4,k-4) + b(n-4,k-1)]",
         tadpole_3_2(), 2, 3, Rational(1), Rational(1)},
        {"c4-3cycle-factor",
         "beta gamma^3 C_4^3 [bracket]",
         "2 beta gamma^3 C_4^3 [bracket]",
         tadpole_3_2(), 5, 4, Rational(1), Rational(1)},
        {"c4-3cycle-bracket",
         "... C_4^3 [b(n-4,k-4) - b(n-4,k-1)]",
         "... C_4^3 [b(n-4,k-4) + b(n-4,k-1)]",
         tadpole_3_2(), 2, 4, Rational(1), Rational(1)},
        {"c5-5cycle-bracket",
         "2 gamma^5 |C_5| [b(n-6,k-6) - b(n-6,k-1)]",
         "2 gamma^5 |C_5| [b(n-6,k-6) + b(n-6,k-1)]",
         c5_with_tail(), 2, 5, Rational(1), Rational(1)},
        {"c5-triangle-edge-factor",
         "gamma^5 sum_j (m+3-T_j) [chi32 bracket]",
         "2 gamma^5 sum_j (m+3-T_j) [chi32 bracket]",
         prism(), 6, 5, Rational(1), Rational(1)},
    };
    return records;
}

std::string sign_audit_csv() {
    std::ostringstream os;
    os << "term_id,uncorrected_reading,corrected_reading,witness_graph6,"
          "k,r,beta,gamma,uncorrected_value,corrected_value,oracle_value\n";
    for (const auto& rec : sign_audit_records()) {
        const Rational unc =
            hook_coeff_uncorrected(rec.witness, rec.k, rec.r, rec.beta,
                                   rec.gamma);
        const Rational cor =
            hook_coeff_closed(rec.witness, rec.k, rec.r, rec.beta, rec.gamma);
        const ExactMatrix m = lincomb_matrix(rec.witness, rec.beta, rec.gamma);
        const Rational oracle = coeff_from_subset_sums(
            subset_class_sums(m, rec.r),
            Partition::hook(rec.witness.n(), rec.k), rec.r);
        os << csv_quote(rec.term_id) << ',' << csv_quote(rec.uncorrected)
           << ',' << csv_quote(rec.corrected) << ',' << emit_graph6(rec.witness)
           << ',' << rec.k << ',' << rec.r << ',' << to_string(rec.beta) << ','
           << to_string(rec.gamma) << ',' << to_string(unc) << ','
           << to_string(cor) << ',' << to_string(oracle) << '\n';
    }
    return os.str();
}

}  // namespace immpoly
