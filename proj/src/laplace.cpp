#include "immpoly/laplace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "immpoly/character.hpp"
#include "immpoly/limits.hpp"

namespace immpoly {

namespace {

Partition cycle_type_of(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::vector<std::vector<int>> all_permutations(int k)
{
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Partition merged_type(const Partition& a, const Partition& b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace

std::vector<std::vector<Integer>> branching_coefficients(const Partition& lam,
                                                         int r)
{
    const int n = lam.weight();
    if (r < 0 || r > n)
        throw std::invalid_argument("branching_coefficients: bad r");
    const int s = n - r;

    const auto parts_mu = enumerate_partitions(r);
    const auto parts_nu = enumerate_partitions(s);

    // chi_lambda on the merged type, weighted by the product of class sizes
    // |K_{t1}| |K_{t2}| = (r!/z(t1)) (s!/z(t2)).
    const Integer rfact = factorial(r);
    const Integer sfact = factorial(s);
    std::vector<std::vector<Integer>> w(
        parts_mu.size(), std::vector<Integer>(parts_nu.size(), 0));
    for (size_t t1 = 0; t1 < parts_mu.size(); ++t1) {
        const Integer size1 = rfact / centralizer_order(parts_mu[t1]);
        for (size_t t2 = 0; t2 < parts_nu.size(); ++t2) {
            const Integer size2 = sfact / centralizer_order(parts_nu[t2]);
            w[t1][t2] = size1 * size2 *
                        character(lam, merged_type(parts_mu[t1], parts_nu[t2]));
        }
    }

    const Integer group_order = rfact * sfact;
    std::vector<std::vector<Integer>> a(
        parts_mu.size(), std::vector<Integer>(parts_nu.size(), 0));
    for (size_t mi = 0; mi < parts_mu.size(); ++mi) {
        for (size_t ni = 0; ni < parts_nu.size(); ++ni) {
            Integer acc = 0;
            for (size_t t1 = 0; t1 < parts_mu.size(); ++t1) {
                const Integer cmu = character(parts_mu[mi], parts_mu[t1]);
                if (cmu == 0) continue;
                for (size_t t2 = 0; t2 < parts_nu.size(); ++t2) {
                    if (w[t1][t2] == 0) continue;
                    acc += w[t1][t2] * cmu * character(parts_nu[ni], parts_nu[t2]);
                }
            }
            Integer q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(),
                        group_order.get_mpz_t());
            if (rem != 0)
                throw std::logic_error(
                    "branching coefficient is not an integer");
            a[mi][ni] = q;
        }
    }
    return a;
}

Rational laplace_expand(const ExactMatrix& m, const Partition& lam,
                        const std::vector<int>& rows)
{
    const int n = m.order();
    if (lam.weight() != n)
        throw std::invalid_argument("laplace_expand: weight(lambda) != order(M)");
    if (n > global_caps().immanant_order)
        throw tractability_error("immanant order cap exceeded: n = " +
                                 std::to_string(n));
    const int r = static_cast<int>(rows.size());
    if (r < 1 || r >= n)
        throw std::invalid_argument(
            "laplace_expand: rows must be a nonempty proper subset");
    for (int i = 0; i < r; ++i) {
        if (rows[i] < 0 || rows[i] >= n)
            throw std::invalid_argument("laplace_expand: row index out of range");
        if (i > 0 && rows[i] <= rows[i - 1])
            throw std::invalid_argument("laplace_expand: rows must be ascending");
    }
    const int s = n - r;

    std::vector<char> in_rows(n, 0);
    for (int v : rows) in_rows[v] = 1;
    std::vector<int> comp_rows;
    for (int v = 0; v < n; ++v)
        if (!in_rows[v]) comp_rows.push_back(v);

    // v places R then R' in ascending order; v_inv maps vertex -> position.
    std::vector<int> v_inv(n);
    for (int i = 0; i < r; ++i) v_inv[rows[i]] = i;
    for (int j = 0; j < s; ++j) v_inv[comp_rows[j]] = r + j;

    std::map<Partition, Integer> char_of;
    for (const auto& t : enumerate_partitions(n))
        char_of[t] = character(lam, t);

    const auto perms_pi = all_permutations(r);
    const auto perms_rho = all_permutations(s);

    Rational total = 0;
    std::vector<int> gh(n);
    std::vector<int> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
        std::vector<char> in_cols(n, 0);
        for (int c : cols) in_cols[c] = 1;
        std::vector<int> comp_cols;
        for (int c = 0; c < n; ++c)
            if (!in_cols[c]) comp_cols.push_back(c);

        // g = v^{-1} o u as a permutation of positions.
        std::vector<int> g(n);
        for (int i = 0; i < r; ++i) g[i] = v_inv[cols[i]];
        for (int j = 0; j < s; ++j) g[r + j] = v_inv[comp_cols[j]];

        const ExactMatrix m1 = m.submatrix(rows, cols);
        const ExactMatrix m2 = m.submatrix(comp_rows, comp_cols);
        std::vector<Rational> y(perms_rho.size());
        for (size_t b = 0; b < perms_rho.size(); ++b) {
            Rational prod = 1;
            for (int j = 0; j < s; ++j) prod *= m2.at(j, perms_rho[b][j]);
            y[b] = prod;
        }

        for (const auto& pi : perms_pi) {
            Rational x = 1;
            for (int i = 0; i < r; ++i) x *= m1.at(i, pi[i]);
            if (x == 0) continue;
            for (int i = 0; i < r; ++i) gh[i] = g[pi[i]];
            for (size_t b = 0; b < perms_rho.size(); ++b) {
                if (y[b] == 0) continue;
                for (int j = 0; j < s; ++j) gh[r + j] = g[r + perms_rho[b][j]];
                const Integer& chi = char_of.at(cycle_type_of(gh));
                if (chi == 0) continue;
                total += Rational(chi) * x * y[b];
            }
        }

        // next r-combination of 0..n-1
        int i = r - 1;
        while (i >= 0 && cols[i] == n - r + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
    return total;
}

}  // namespace immpoly
