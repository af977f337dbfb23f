#include "immpoly/character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace immpoly {

Integer binomial(long a, long b)
{
    if (a < 0) throw std::invalid_argument("binomial needs a >= 0");
    if (b < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

Integer factorial(int n)
{
    if (n < 0) throw std::invalid_argument("factorial needs n >= 0");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer centralizer_order(const Partition& mu)
{
    Integer z = 1;
    int run_len = 0, run_count = 0;
    auto flush = [&] {
        for (int i = 1; i <= run_count; ++i) z *= i;  // t_l!
    };
    for (int p : mu.parts()) {
        if (p == run_len) {
            ++run_count;
        } else {
            flush();
            run_len = p;
            run_count = 1;
        }
        z *= p;  // one factor l per part
    }
    flush();
    return z;
}

std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lam,
                                                        int length)
{
    if (length < 1) throw std::invalid_argument("rim hook length must be >= 1");
    std::vector<std::pair<Partition, int>> out;
    const int m = lam.num_parts();
    if (m == 0) return out;

    // Beta numbers b_i = lam_i + (m - 1 - i), strictly decreasing.  Removing
    // a rim hook of the given length is exactly replacing some b_i by
    // b_i - length when that value is fresh; the hook height is the number
    // of beta numbers strictly between the old and new values.
    std::vector<long> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lam.part(i) + (m - 1 - i);

    for (int i = 0; i < m; ++i) {
        long target = beta[i] - length;
        if (target < 0) continue;
        bool clash = false;
        int between = 0;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { clash = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (clash) continue;

        std::vector<long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<long>());
        std::vector<int> parts;
        for (int j = 0; j < m; ++j) {
            long part = nb[j] - (m - 1 - j);
            if (part > 0) parts.push_back(static_cast<int>(part));
        }
        out.emplace_back(Partition(std::move(parts)), between);
    }
    return out;
}

namespace {

std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> g_char_cache;
std::mutex g_char_mutex;

Integer character_rec(const Partition& lam, const Partition& mu)
{
    if (mu.weight() == 0) return 1;

    const auto key = std::make_pair(lam.parts(), mu.parts());
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_cache.find(key);
        if (it != g_char_cache.end()) return it->second;
    }

    const int l = mu.part(0);
    const Partition rest = mu.without_part(0);
    Integer acc = 0;
    for (const auto& [shape, height] : remove_rim_hooks(lam, l)) {
        Integer term = character_rec(shape, rest);
        if (height % 2 == 1) term = -term;
        acc += term;
    }

    std::lock_guard<std::mutex> lock(g_char_mutex);
    return g_char_cache.emplace(key, std::move(acc)).first->second;
}

}  // namespace

Integer character(const Partition& lam, const Partition& mu)
{
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("character: weight(lambda) != weight(mu)");
    return character_rec(lam, mu);
}

void clear_character_cache()
{
    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_cache.clear();
}

namespace {

void check_hook_args(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("hook character needs 1 <= k <= n");
}

}  // namespace

Integer hook_character_identity(int n, int k)
{
    check_hook_args(n, k);
    return binomial(n - 1, k - 1);
}

Integer hook_character_lcycle(int n, int k, int l)
{
    check_hook_args(n, k);
    if (l < 2 || l > n)
        throw std::invalid_argument("hook_character_lcycle needs 2 <= l <= n");
    if (n - l - 1 < 0) {
        // Single n-cycle: the closed form's binomials are undefined here.
        Partition mu = Partition::single_row(l).padded_with_ones(n - l);
        return character(Partition::hook(n, k), mu);
    }
    Integer v = binomial(n - l - 1, k - l - 1);
    Integer second = binomial(n - l - 1, k - 1);
    if (l % 2 == 1) return v + second;
    return v - second;
}

Integer hook_character_involution(int n, int k, int i)
{
    check_hook_args(n, k);
    if (i < 1 || 2 * i > n)
        throw std::invalid_argument("hook_character_involution needs 1 <= i <= n/2");
    if (n - 2 * i - 1 < 0) {
        std::vector<int> parts(i, 2);
        Partition mu = Partition(std::move(parts)).padded_with_ones(n - 2 * i);
        return character(Partition::hook(n, k), mu);
    }
    Integer acc = 0;
    for (int j = 0; j <= i; ++j) {
        Integer term = binomial(n - 2 * i - 1, n - k - 2 * j) * binomial(i, j);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

Integer hook_character_32(int n, int k)
{
    check_hook_args(n, k);
    if (n < 5)
        throw std::invalid_argument("hook_character_32 needs n >= 5");
    if (n == 5) {
        Partition mu = Partition(std::vector<int>{3, 2});
        return character(Partition::hook(n, k), mu);
    }
    return binomial(n - 6, k - 6) - binomial(n - 6, k - 4) +
           binomial(n - 6, k - 3) - binomial(n - 6, k - 1);
}

}  // namespace immpoly
