#include "immpoly/poly.hpp"

#include <stdexcept>

#include "immpoly/invariants.hpp"
#include "immpoly/limits.hpp"

namespace immpoly {

ImmPolynomial::ImmPolynomial(Partition lam, std::vector<Rational> coeffs)
    : lam_(std::move(lam)), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty() || static_cast<int>(coeffs_.size()) != lam_.weight() + 1)
        throw std::invalid_argument("coefficient vector must have weight+1 entries");
}

std::vector<Rational> ImmPolynomial::signed_coeffs() const
{
    const int n = order();
    std::vector<Rational> a(n + 1);
    for (int r = 0; r <= n; ++r)
        a[n - r] = (r % 2 == 0) ? coeffs_[r] : -coeffs_[r];
    return a;
}

ImmPolynomial ImmPolynomial::from_signed(Partition lam,
                                         const std::vector<Rational>& a)
{
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<Rational> c(n + 1);
    for (int r = 0; r <= n; ++r)
        c[r] = (r % 2 == 0) ? a[n - r] : Rational(-a[n - r]);
    return ImmPolynomial(std::move(lam), std::move(c));
}

Rational ImmPolynomial::evaluate(const Rational& x) const
{
    // Horner on the signed coefficients, highest degree first.
    const auto a = signed_coeffs();
    Rational acc = 0;
    for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j)
        acc = acc * x + a[j];
    return acc;
}

bool ImmPolynomial::is_zero() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

ImmPolynomial ImmPolynomial::shifted_argument(const Rational& c) const
{
    // p(x - c): expand each a_j (x - c)^j by the binomial theorem.
    const auto a = signed_coeffs();
    const int n = order();
    std::vector<Rational> b(n + 1, Rational(0));
    for (int j = 0; j <= n; ++j) {
        if (sgn(a[j]) == 0) continue;
        Rational pw = 1;  // (-c)^{j-i}, built from the top power down
        for (int i = j; i >= 0; --i) {
            b[i] += a[j] * Rational(binomial(j, i)) * pw;
            pw *= -c;
        }
    }
    return from_signed(lam_, b);
}

Rational coeff_from_subset_sums(const SubsetClassSums& s, const Partition& lam,
                                int r)
{
    if (r < 0 || r > s.rmax)
        throw std::invalid_argument("coefficient index beyond computed range");
    Rational acc = 0;
    for (size_t t = 0; t < s.types.size(); ++t) {
        if (sgn(s.sums[r][t]) == 0) continue;
        acc += Rational(character(lam, s.types[t])) * s.sums[r][t];
    }
    return acc;
}

ImmPolynomial imm_poly(const ExactMatrix& m, const Partition& lam)
{
    const int n = m.order();
    if (lam.weight() != n)
        throw std::invalid_argument("imm_poly: weight(lambda) != order(M)");
    if (n > global_caps().poly_order)
        throw tractability_error("polynomial order cap exceeded: n = " +
                                 std::to_string(n));
    const auto sums = subset_class_sums(m, n);
    std::vector<Rational> c(n + 1);
    for (int r = 0; r <= n; ++r) c[r] = coeff_from_subset_sums(sums, lam, r);
    return ImmPolynomial(lam, std::move(c));
}

std::vector<Rational> interpolate_monomial_coeffs(
    const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolation needs matching nonempty data");
    const int d = static_cast<int>(xs.size()) - 1;

    // Newton form: divided differences, then expansion onto monomials.
    std::vector<Rational> dd = ys;
    for (int level = 1; level <= d; ++level)
        for (int i = d; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

    std::vector<Rational> a(d + 1, Rational(0));
    std::vector<Rational> basis(d + 1, Rational(0));  // prod (x - xs[i])
    basis[0] = 1;
    int basis_deg = 0;
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= basis_deg; ++j) a[j] += dd[i] * basis[j];
        if (i < d) {
            // basis *= (x - xs[i])
            for (int j = basis_deg + 1; j >= 1; --j)
                basis[j] = basis[j - 1] - xs[i] * basis[j];
            basis[0] = -xs[i] * basis[0];
            ++basis_deg;
        }
    }
    return a;
}

ImmPolynomial imm_poly_interpolated(const ExactMatrix& m, const Partition& lam)
{
    const int n = m.order();
    if (lam.weight() != n)
        throw std::invalid_argument("imm_poly: weight(lambda) != order(M)");
    if (n > global_caps().poly_order)
        throw tractability_error("polynomial order cap exceeded: n = " +
                                 std::to_string(n));
    std::vector<Rational> xs(n + 1), ys(n + 1);
    for (int x = 0; x <= n; ++x) {
        xs[x] = x;
        ys[x] = immanant_from_sums(
            immanant_class_sums(m.scaled_identity_minus(Rational(x))), lam);
    }
    return ImmPolynomial::from_signed(lam, interpolate_monomial_coeffs(xs, ys));
}

int root_multiplicity(const ImmPolynomial& p, const Rational& x0)
{
    if (p.is_zero()) return p.order() + 1;
    std::vector<Rational> a = p.signed_coeffs();
    int mult = 0;
    while (true) {
        // Synthetic division of a by (x - x0); remainder is the value at x0.
        const int d = static_cast<int>(a.size()) - 1;
        std::vector<Rational> q(d, Rational(0));
        Rational carry = 0;
        for (int j = d; j >= 1; --j) {
            carry = a[j] + carry * x0;
            q[j - 1] = carry;
        }
        const Rational rem = a[0] + carry * x0;
        if (sgn(rem) != 0) return mult;
        ++mult;
        a = std::move(q);
        if (a.empty()) return mult;  // fully divided: p was c*(x-x0)^order
    }
}

StarDegreeReport star_degree_bound_check(const Graph& g, const Partition& lam,
                                         const Rational& beta,
                                         const Rational& gamma)
{
    if (!g.connected())
        throw std::invalid_argument(
            "star_degree_bound_check assumes a connected graph");
    StarDegreeReport rep;
    rep.star_degree = star_degree(g);
    const auto p = imm_poly(lincomb_matrix(g, beta, gamma), lam);
    rep.multiplicity = root_multiplicity(p, beta);
    rep.ok = rep.multiplicity >= rep.star_degree;
    return rep;
}

}  // namespace immpoly
