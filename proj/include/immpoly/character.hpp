#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "immpoly/partition.hpp"

namespace immpoly {

using Integer = mpz_class;

// binom(a, b) with the combinatorial zero convention: 0 whenever b < 0 or
// b > a.  Requires a >= 0; formulas that could produce a negative upper
// index must branch before calling this.
Integer binomial(long a, long b);

Integer factorial(int n);

// z_mu = prod_l l^{t_l} t_l!, the centralizer order of the class mu inside
// S_{weight(mu)}.  The class size is weight! / z_mu.
Integer centralizer_order(const Partition& mu);

// All shapes obtained from lam by removing one rim hook (border strip) of
// the given length, each paired with the hook's height = rows spanned - 1.
// length >= 1; returns an empty list when no such hook exists.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lam,
                                                        int length);

// Irreducible character chi_lambda evaluated at the class of cycle type mu,
// via the Murnaghan-Nakayama rule with memoization.  Thread-safe; results
// do not depend on evaluation schedule.  Requires weight(lam) == weight(mu).
Integer character(const Partition& lam, const Partition& mu);

void clear_character_cache();

// Fast paths for hook shapes lambda = (k, 1^{n-k}).  Each matches the
// recursion exactly; where the closed form would need a binomial with a
// negative upper index, the implementation falls back to the recursion.
//
// Identity class:                           binom(n-1, k-1)
Integer hook_character_identity(int n, int k);
// One l-cycle (2 <= l <= n), rest fixed:
//   binom(n-l-1, k-l-1) + (-1)^{l-1} binom(n-l-1, k-1)
Integer hook_character_lcycle(int n, int k, int l);
// Involution class (2^i, 1^{n-2i}), i >= 1:
//   sum_j (-1)^j binom(n-2i-1, n-k-2j) binom(i, j)
Integer hook_character_involution(int n, int k, int i);
// Class (3, 2, 1^{n-5}), n >= 5:
//   binom(n-6,k-6) - binom(n-6,k-4) + binom(n-6,k-3) - binom(n-6,k-1)
Integer hook_character_32(int n, int k);

}  // namespace immpoly
