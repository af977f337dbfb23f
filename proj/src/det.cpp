#include "immpoly/det.hpp"

namespace immpoly {

Rational determinant(const ExactMatrix& m)
{
    const int n = m.order();

    // Clear denominators row by row so Bareiss runs over integers.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer row_scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rational scaled = m.at(i, j) * Rational(l);
            a[i][j] = scaled.get_num();  // exact: denominator is 1
        }
        row_scale *= l;
    }

    // Bareiss: every division below is exact.
    Integer det_sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { pivot = i; break; }
            if (pivot == -1) return 0;
            std::swap(a[k], a[pivot]);
            det_sign = -det_sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational r(det_sign * a[n - 1][n - 1], row_scale);
    r.canonicalize();
    return r;
}

ImmPolynomial char_poly_by_determinant(const ExactMatrix& m)
{
    const int n = m.order();
    std::vector<Rational> xs(n + 1), ys(n + 1);
    for (int x = 0; x <= n; ++x) {
        xs[x] = x;
        ys[x] = determinant(m.scaled_identity_minus(Rational(x)));
    }
    return ImmPolynomial::from_signed(Partition::single_column(n),
                                      interpolate_monomial_coeffs(xs, ys));
}

}  // namespace immpoly
