#include "immpoly/immanant.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "immpoly/limits.hpp"

namespace immpoly {

namespace {

// Cycle types are tracked during enumeration as products of small primes,
// one factor prime[l] per completed cycle of length l.  For n <= 12 the
// largest key is 2^12, so a dense table maps keys to type indices.
constexpr std::uint64_t kPrime[kKernelOrderLimit + 1] = {
    0, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t type_key(const Partition& p)
{
    std::uint64_t k = 1;
    for (int part : p.parts()) k *= kPrime[part];
    return k;
}

std::vector<int> build_key_table(const std::vector<Partition>& types, int n)
{
    const std::uint64_t max_key = std::uint64_t(1) << n;
    std::vector<int> table(max_key + 1, -1);
    for (size_t t = 0; t < types.size(); ++t) table[type_key(types[t])] = (int)t;
    return table;
}

// Enumerates the permutations of a vertex subset cycle by cycle (each cycle
// started at its smallest element), maintaining the running entry product
// and pruning any branch whose next factor is zero.  Completed products are
// added into acc at the padded cycle type's index.
struct PermKernel {
    const ExactMatrix* m = nullptr;
    const int* key_to_index = nullptr;
    Rational* acc = nullptr;
    std::vector<Rational> prod;
    std::uint32_t mask = 0;

    void init(const ExactMatrix& mat, const std::vector<int>& table)
    {
        m = &mat;
        key_to_index = table.data();
        prod.assign(mat.order() + 1, Rational(0));
        prod[0] = 1;
    }

    void start_cycles(std::uint32_t used, int depth, std::uint64_t key)
    {
        if (used == mask) {
            acc[key_to_index[key]] += prod[depth];
            return;
        }
        const int s = std::countr_zero(mask & ~used);
        extend(used | (1u << s), s, s, 1, depth, key);
    }

    // Current cycle: start s, tip c, len elements placed, depth entries
    // multiplied so far.
    void extend(std::uint32_t used, int s, int c, int len, int depth,
                std::uint64_t key)
    {
        const Rational& close_entry = m->at(c, s);
        if (sgn(close_entry) != 0) {
            prod[depth + 1] = prod[depth] * close_entry;
            start_cycles(used, depth + 1, key * kPrime[len]);
        }
        std::uint32_t rem = mask & ~used;
        while (rem) {
            const int j = std::countr_zero(rem);
            rem &= rem - 1;
            const Rational& e = m->at(c, j);
            if (sgn(e) != 0) {
                prod[depth + 1] = prod[depth] * e;
                extend(used | (1u << j), s, j, len + 1, depth + 1, key);
            }
        }
    }
};

void check_kernel_order(int n)
{
    if (n > kKernelOrderLimit)
        throw tractability_error("kernel order limit exceeded: n = " +
                                 std::to_string(n));
}

}  // namespace

CycleTypeSums immanant_class_sums_serial(const ExactMatrix& m)
{
    const int n = m.order();
    check_kernel_order(n);
    if (n > global_caps().immanant_order)
        throw tractability_error("immanant order cap exceeded: n = " +
                                 std::to_string(n));
    CycleTypeSums out;
    out.n = n;
    out.types = enumerate_partitions(n);
    out.sums.assign(out.types.size(), Rational(0));

    const auto table = build_key_table(out.types, n);
    PermKernel k;
    k.init(m, table);
    k.mask = (n == 32) ? ~0u : ((1u << n) - 1);
    k.acc = out.sums.data();
    k.start_cycles(0, 0, 1);
    return out;
}

CycleTypeSums immanant_class_sums(const ExactMatrix& m)
{
#ifndef _OPENMP
    return immanant_class_sums_serial(m);
#else
    const int n = m.order();
    check_kernel_order(n);
    if (n > global_caps().immanant_order)
        throw tractability_error("immanant order cap exceeded: n = " +
                                 std::to_string(n));
    if (n < 4) return immanant_class_sums_serial(m);

    CycleTypeSums out;
    out.n = n;
    out.types = enumerate_partitions(n);
    out.sums.assign(out.types.size(), Rational(0));
    const auto table = build_key_table(out.types, n);
    const std::uint32_t full = (1u << n) - 1;

    // Split on the image of vertex 0: j == 0 closes a fixed point, any
    // other j starts a longer cycle at 0.  Per-thread accumulators are
    // merged afterwards; addition of exact rationals makes the result
    // schedule-independent.
#pragma omp parallel
    {
        std::vector<Rational> local(out.types.size(), Rational(0));
        PermKernel k;
        k.init(m, table);
        k.mask = full;
        k.acc = local.data();

#pragma omp for schedule(dynamic, 1) nowait
        for (int j = 0; j < n; ++j) {
            const Rational& e = m.at(0, j);
            if (sgn(e) == 0) continue;
            k.prod[1] = e;
            if (j == 0)
                k.start_cycles(1u, 1, kPrime[1]);
            else
                k.extend(1u | (1u << j), 0, j, 2, 1, 1);
        }

#pragma omp critical
        for (size_t t = 0; t < local.size(); ++t) out.sums[t] += local[t];
    }
    return out;
#endif
}

namespace {

SubsetClassSums subset_sums_impl(const ExactMatrix& m, int rmax, bool parallel)
{
    const int n = m.order();
    check_kernel_order(n);
    if (n > global_caps().poly_order)
        throw tractability_error("polynomial order cap exceeded: n = " +
                                 std::to_string(n));
    if (rmax < 0 || rmax > n)
        throw std::invalid_argument("subset_class_sums needs 0 <= rmax <= n");

    SubsetClassSums out;
    out.n = n;
    out.rmax = rmax;
    out.types = enumerate_partitions(n);
    out.sums.assign(rmax + 1,
                    std::vector<Rational>(out.types.size(), Rational(0)));
    const auto table = build_key_table(out.types, n);
    const std::uint32_t end = 1u << n;

    auto sweep_range = [&](std::uint32_t lo, std::uint32_t hi,
                           std::vector<std::vector<Rational>>& acc) {
        PermKernel k;
        k.init(m, table);
        for (std::uint32_t mask = lo; mask < hi; ++mask) {
            const int r = std::popcount(mask);
            if (r > rmax) continue;
            k.mask = mask;
            k.acc = acc[r].data();
            // Unselected vertices are fixed points of the ambient
            // permutation but contribute no entry factor; they enter the
            // padded type as 1-cycles (prime[1] = 2 per vertex).
            k.start_cycles(0, 0, std::uint64_t(1) << (n - r));
        }
    };

    if (!parallel) {
        sweep_range(0, end, out.sums);
        return out;
    }

#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::vector<Rational>> local(
            rmax + 1, std::vector<Rational>(out.types.size(), Rational(0)));
        PermKernel k;
        k.init(m, table);
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t mask = 0; mask < (std::int64_t)end; ++mask) {
            const int r = std::popcount((std::uint32_t)mask);
            if (r > rmax) continue;
            k.mask = (std::uint32_t)mask;
            k.acc = local[r].data();
            k.start_cycles(0, 0, std::uint64_t(1) << (n - r));
        }
#pragma omp critical
        for (int r = 0; r <= rmax; ++r)
            for (size_t t = 0; t < out.types.size(); ++t)
                out.sums[r][t] += local[r][t];
    }
#else
    sweep_range(0, end, out.sums);
#endif
    return out;
}

}  // namespace

SubsetClassSums subset_class_sums_serial(const ExactMatrix& m, int rmax)
{
    return subset_sums_impl(m, rmax, false);
}

SubsetClassSums subset_class_sums(const ExactMatrix& m, int rmax)
{
    return subset_sums_impl(m, rmax, true);
}

Rational immanant_from_sums(const CycleTypeSums& sums, const Partition& lam)
{
    if (lam.weight() != sums.n)
        throw std::invalid_argument("immanant: weight(lambda) != order(M)");
    Rational acc = 0;
    for (size_t t = 0; t < sums.types.size(); ++t) {
        if (sgn(sums.sums[t]) == 0) continue;
        acc += Rational(character(lam, sums.types[t])) * sums.sums[t];
    }
    return acc;
}

Rational immanant(const ExactMatrix& m, const Partition& lam)
{
    if (lam.weight() != m.order())
        throw std::invalid_argument("immanant: weight(lambda) != order(M)");
    if (m.order() > global_caps().immanant_order)
        throw tractability_error("immanant order cap exceeded: n = " +
                                 std::to_string(m.order()));
    return immanant_from_sums(immanant_class_sums(m), lam);
}

}  // namespace immpoly
