#include "immpoly/orientation.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "immpoly/invariants.hpp"
#include "immpoly/limits.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/poly.hpp"

namespace immpoly {

namespace {

// Same prime encoding of cycle types as the permutation kernels: a part of
// size l multiplies the key by prime[l], so keys stay below 2^r (worst case
// all parts 1) and a flat table decodes them.
constexpr uint64_t kPrime[13] = {0, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

struct TypeTable {
    std::vector<Partition> types;
    std::vector<int> index_of_key;  // keyed by prime product

    explicit TypeTable(int r) {
        types = enumerate_partitions(r);
        uint64_t max_key = 1;
        for (int i = 0; i < r; ++i) max_key *= kPrime[1];
        index_of_key.assign(static_cast<size_t>(max_key) + 1, -1);
        for (size_t t = 0; t < types.size(); ++t) {
            uint64_t key = 1;
            for (int part : types[t].parts()) key *= kPrime[part];
            index_of_key[key] = static_cast<int>(t);
        }
    }
};

// Type of one arrow assignment: target_pos[i] is the position in B hit by
// the arrow of B's i-th vertex, or -1 when the arrow leaves B.  Directed
// cycles contribute their lengths, everything else parts of size 1.
uint64_t assignment_key(const std::vector<int>& target_pos,
                        std::vector<long long>& mark, long long stamp_base) {
    const int r = static_cast<int>(target_pos.size());
    uint64_t key = 1;
    int ones = r;
    // mark[i] < stamp_base: untouched this assignment; otherwise mark holds
    // the walk stamp plus the step at which i was reached, and stamps only
    // grow, so earlier walks keep strictly smaller marks.
    long long stamp = stamp_base;
    std::vector<int> path;
    for (int start = 0; start < r; ++start) {
        if (mark[start] >= stamp_base) continue;
        path.clear();
        int cur = start;
        while (cur != -1 && mark[cur] < stamp_base) {
            mark[cur] = stamp + static_cast<long long>(path.size());
            path.push_back(cur);
            cur = target_pos[cur];
        }
        if (cur != -1 && mark[cur] >= stamp) {
            // hit the current walk: a fresh cycle
            const int len =
                static_cast<int>(path.size()) - static_cast<int>(mark[cur] - stamp);
            key *= kPrime[len];
            ones -= len;
        }
        stamp += static_cast<long long>(path.size());
    }
    for (int i = 0; i < ones; ++i) key *= kPrime[1];
    return key;
}

std::vector<std::vector<int>> all_r_subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(r);
    for (int i = 0; i < r; ++i) c[i] = i;
    if (r == 0) {
        out.push_back({});
        return out;
    }
    if (r > n) return out;
    while (true) {
        out.push_back(c);
        int i = r - 1;
        while (i >= 0 && c[i] == n - r + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

void census_of_subset(const Graph& g, const std::vector<int>& b,
                      const TypeTable& table,
                      std::vector<unsigned long long>& counts) {
    const int r = static_cast<int>(b.size());
    if (r == 0) {
        ++counts[table.index_of_key[1]];
        return;
    }
    std::vector<int> pos_in_b(g.n(), -1);
    for (int i = 0; i < r; ++i) pos_in_b[b[i]] = i;
    std::vector<int> radix(r);
    for (int i = 0; i < r; ++i) {
        radix[i] = g.degree(b[i]);
        if (radix[i] == 0) return;  // no arrow available: no orientations
    }
    std::vector<int> idx(r, 0);
    std::vector<int> target_pos(r);
    for (int i = 0; i < r; ++i)
        target_pos[i] = pos_in_b[g.neighbors(b[i])[0]];
    std::vector<long long> mark(r, -1);
    long long stamp_base = 0;
    while (true) {
        counts[table.index_of_key[assignment_key(target_pos, mark, stamp_base)]]++;
        stamp_base += r;  // invalidates all marks without clearing
        int i = r - 1;
        while (i >= 0 && idx[i] + 1 == radix[i]) {
            idx[i] = 0;
            target_pos[i] = pos_in_b[g.neighbors(b[i])[0]];
            --i;
        }
        if (i < 0) break;
        ++idx[i];
        target_pos[i] = pos_in_b[g.neighbors(b[i])[idx[i]]];
    }
}

OrientationCensus census_impl(const Graph& g, int r, bool parallel) {
    if (r < 0 || r > g.n())
        throw std::invalid_argument("orientation census: r out of range");
    const Integer budget = graph_degree_elementary(g, r);
    if (budget > global_caps().census_assignments) {
        std::ostringstream os;
        os << "orientation census needs " << budget.get_str()
           << " assignments, above the cap "
           << global_caps().census_assignments;
        throw tractability_error(os.str());
    }

    TypeTable table(r);
    const auto subsets = all_r_subsets(g.n(), r);
    std::vector<unsigned long long> counts(table.types.size(), 0);

    if (parallel) {
#pragma omp parallel
        {
            std::vector<unsigned long long> local(counts.size(), 0);
#pragma omp for schedule(dynamic) nowait
            for (long long s = 0; s < static_cast<long long>(subsets.size());
                 ++s)
                census_of_subset(g, subsets[static_cast<size_t>(s)], table,
                                 local);
#pragma omp critical(immpoly_census_merge)
            for (size_t t = 0; t < counts.size(); ++t) counts[t] += local[t];
        }
    } else {
        for (const auto& b : subsets) census_of_subset(g, b, table, counts);
    }

    OrientationCensus out;
    out.r = r;
    for (size_t t = 0; t < counts.size(); ++t)
        if (counts[t] != 0)
            out.counts[table.types[t]] = Integer(static_cast<unsigned long>(counts[t]));
    return out;
}

}  // namespace

Integer OrientationCensus::total() const {
    Integer s = 0;
    for (const auto& [nu, a] : counts) s += a;
    return s;
}

OrientationCensus orientation_census_serial(const Graph& g, int r) {
    return census_impl(g, r, false);
}

OrientationCensus orientation_census(const Graph& g, int r) {
    return census_impl(g, r, true);
}

Rational coeff_via_orientations(const Graph& g, const Partition& lam, int r,
                                const Rational& beta, const Rational& gamma) {
    const int n = g.n();
    if (lam.weight() != n)
        throw std::invalid_argument("coeff_via_orientations: |lambda| != n");
    if (r < 0 || r > n)
        throw std::invalid_argument("coeff_via_orientations: r out of range");

    const OrientationCensus census = orientation_census(g, r);
    Rational acc(0);
    for (const auto& [nu, a] : census.counts) {
        // distinct part sizes >= 2 with multiplicities
        std::vector<std::pair<int, int>> big;  // (l, r_l)
        for (int part : nu.parts()) {
            if (part < 2) break;
            if (!big.empty() && big.back().first == part)
                ++big.back().second;
            else
                big.emplace_back(part, 1);
        }
        std::vector<int> t(big.size(), 0);
        while (true) {
            int w = 0;
            Integer ways = 1;
            std::vector<int> chosen;
            for (size_t i = 0; i < big.size(); ++i) {
                w += big[i].first * t[i];
                ways *= binomial(big[i].second, t[i]);
                for (int c = 0; c < t[i]; ++c) chosen.push_back(big[i].first);
            }
            for (int o = 0; o < n - w; ++o) chosen.push_back(1);
            const Integer chi = character(lam, Partition(chosen));
            if (chi != 0) {
                Rational term(a * ways * chi);
                term *= rational_pow(beta, r - w);
                term *= rational_pow(gamma, w);
                acc += term;
            }
            size_t i = big.size();
            while (i > 0 && t[i - 1] == big[i - 1].second) t[--i] = 0;
            if (i == 0) break;
            ++t[i - 1];
        }
    }
    return acc;
}

namespace {

CensusCheckReport compare_censuses(const OrientationCensus& lo,
                                   const OrientationCensus& hi,
                                   const std::string& label) {
    CensusCheckReport rep;
    std::set<Partition> types;
    for (const auto& [nu, a] : lo.counts) types.insert(nu);
    for (const auto& [nu, a] : hi.counts) types.insert(nu);
    for (const auto& nu : types) {
        auto it_lo = lo.counts.find(nu);
        auto it_hi = hi.counts.find(nu);
        const Integer a_lo = it_lo == lo.counts.end() ? Integer(0) : it_lo->second;
        const Integer a_hi = it_hi == hi.counts.end() ? Integer(0) : it_hi->second;
        if (a_lo > a_hi) {
            rep.ok = false;
            std::ostringstream os;
            os << label << " violated at nu=" << nu.to_string() << ": "
               << a_lo.get_str() << " > " << a_hi.get_str();
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

}  // namespace

CensusCheckReport check_edge_monotonicity(const Graph& g,
                                          std::pair<int, int> e, int r) {
    const Graph h = g.without_edge(e.first, e.second);
    return compare_censuses(orientation_census(h, r), orientation_census(g, r),
                            "a_{G-e} <= a_G");
}

CensusCheckReport check_tree_census_bounds(const Graph& t, int r) {
    if (!t.is_tree())
        throw std::invalid_argument("check_tree_census_bounds: not a tree");
    const int n = t.n();
    const OrientationCensus c_star = orientation_census(Graph::star(n), r);
    const OrientationCensus c_tree = orientation_census(t, r);
    const OrientationCensus c_path = orientation_census(Graph::path(n), r);
    CensusCheckReport rep = compare_censuses(c_star, c_tree, "a_star <= a_T");
    if (!rep.ok) return rep;
    return compare_censuses(c_tree, c_path, "a_T <= a_path");
}

namespace {

Rational lincomb_coeff(const Graph& g, const Partition& lam, int r,
                       const Rational& beta, const Rational& gamma) {
    const ExactMatrix m = lincomb_matrix(g, beta, gamma);
    return coeff_from_subset_sums(subset_class_sums(m, r), lam, r);
}

}  // namespace

CoeffBoundsReport check_coeff_bounds(const Graph& g, const Partition& lam,
                                     int r, const Rational& beta,
                                     const Rational& gamma,
                                     BoundRegime regime) {
    CoeffBoundsReport rep;
    const int n = g.n();
    if (lam.weight() != n)
        throw std::invalid_argument("check_coeff_bounds: |lambda| != n");
    if (r < 0 || r > n)
        throw std::invalid_argument("check_coeff_bounds: r out of range");
    if (n > global_caps().poly_order)
        throw tractability_error("check_coeff_bounds: order above the cap");

    if (beta <= 0) {
        rep.skip_reason = "beta <= 0";
        return rep;
    }
    if (gamma == 0) {
        rep.skip_reason = "gamma == 0";
        return rep;
    }
    if (gamma > beta || -gamma > beta) {
        rep.skip_reason = "|gamma| > beta";
        return rep;
    }
    Graph lower = Graph::star(n);
    Graph upper = Graph::star(n);
    switch (regime) {
        case BoundRegime::general:
            if (!g.connected()) {
                rep.skip_reason = "graph disconnected";
                return rep;
            }
            upper = Graph::complete(n);
            break;
        case BoundRegime::tree:
            if (!g.is_tree()) {
                rep.skip_reason = "graph is not a tree";
                return rep;
            }
            upper = Graph::path(n);
            break;
        case BoundRegime::bipartite:
            if (!g.connected()) {
                rep.skip_reason = "graph disconnected";
                return rep;
            }
            if (!g.bipartition()) {
                rep.skip_reason = "graph not bipartite";
                return rep;
            }
            upper = n == 1 ? Graph::star(1)
                           : Graph::complete_bipartite((n + 1) / 2, n / 2);
            break;
    }
    rep.applicable = true;
    rep.lower = lincomb_coeff(lower, lam, r, beta, gamma);
    rep.value = lincomb_coeff(g, lam, r, beta, gamma);
    rep.upper = lincomb_coeff(upper, lam, r, beta, gamma);
    rep.ok = rep.lower <= rep.value && rep.value <= rep.upper;
    return rep;
}

}  // namespace immpoly
