#pragma once

#include <vector>

#include "immpoly/graph.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/partition.hpp"
#include "immpoly/rational.hpp"

namespace immpoly {

// Imm_lambda(xI - M) = sum_r (-1)^r c_r x^{n-r}.  Stored coefficients are
// the unsigned c_r; the alternating sign lives in evaluation.
class ImmPolynomial {
public:
    ImmPolynomial(Partition lam, std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Partition& shape() const { return lam_; }
    const Rational& coeff(int r) const { return coeffs_.at(r); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Coefficients of x^0..x^n of the actual polynomial (signs applied).
    std::vector<Rational> signed_coeffs() const;
    static ImmPolynomial from_signed(Partition lam,
                                     const std::vector<Rational>& a);

    Rational evaluate(const Rational& x) const;
    bool is_zero() const;

    // The polynomial p(x - c), i.e. the immanantal polynomial of M + cI
    // when this is the immanantal polynomial of M.
    ImmPolynomial shifted_argument(const Rational& c) const;

    bool operator==(const ImmPolynomial&) const = default;

private:
    Partition lam_;
    std::vector<Rational> coeffs_;  // c_0..c_n
};

// Coefficient c_{lambda,r} from precomputed subset sums: the character
// combination sum_t chi_lambda(type_t) * sums[r][t].
Rational coeff_from_subset_sums(const SubsetClassSums& s, const Partition& lam,
                                int r);

// Full coefficient vector via the principal-subset expansion.  Requires
// weight(lam) == order(M) <= the configured polynomial cap.
ImmPolynomial imm_poly(const ExactMatrix& m, const Partition& lam);

// Independent route: evaluates Imm_lambda(xI - M) at x = 0..n and recovers
// the coefficients by exact Lagrange interpolation.
ImmPolynomial imm_poly_interpolated(const ExactMatrix& m, const Partition& lam);

// Monomial coefficients a_0..a_d (a_j multiplies x^j) of the unique
// polynomial of degree <= d through the d+1 given points, exactly.
std::vector<Rational> interpolate_monomial_coeffs(
    const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Multiplicity of x0 as a root, by repeated exact synthetic division.  The
// zero polynomial is reported as order + 1, one more than any true
// multiplicity.
int root_multiplicity(const ImmPolynomial& p, const Rational& x0);

// Multiplicity of beta as a root of Imm_lambda(xI - (beta D + gamma A))
// versus the graph's star degree; the theorem being exercised says
// multiplicity >= star degree for connected graphs.  Throws on
// disconnected input.
struct StarDegreeReport {
    int star_degree = 0;
    int multiplicity = 0;
    bool ok = false;
};
StarDegreeReport star_degree_bound_check(const Graph& g, const Partition& lam,
                                         const Rational& beta,
                                         const Rational& gamma);

}  // namespace immpoly
