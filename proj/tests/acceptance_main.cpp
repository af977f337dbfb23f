// Acceptance gate: one line per criterion, exit 0 only when all pass.
// Each criterion is exact arithmetic end to end; there are no tolerances.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "immpoly/det.hpp"
#include "immpoly/graph.hpp"
#include "immpoly/hook.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/partition.hpp"
#include "immpoly/poly.hpp"
#include "immpoly/verify.hpp"

#include "support/oracles.hpp"

using namespace immpoly;
using immpoly::testing::random_matrix;
using immpoly::testing::ryser_permanent;

namespace {

std::string first_failures(const SuiteReport& rep, size_t limit = 3) {
    std::ostringstream os;
    size_t shown = 0;
    for (const auto& a : rep.assertions) {
        if (a.ok || a.skipped) continue;
        if (shown == limit) {
            os << "; ...";
            break;
        }
        if (shown) os << "; ";
        os << a.label;
        if (!a.detail.empty()) os << " [" << a.detail << "]";
        ++shown;
    }
    return os.str();
}

bool run_suites(const std::vector<std::string>& names, std::string& detail) {
    bool ok = true;
    for (const auto& name : names) {
        const SuiteReport rep = run_suite(name, {});
        if (!rep.ok()) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += rep.suite + ": " + first_failures(rep);
        }
    }
    return ok;
}

// criterion 2: two independent evaluation routes on random matrices
bool check_det_per(std::string& detail) {
    std::mt19937 rng(460600u);
    int checked = 0;
    for (int round = 0; round < 30; ++round)
        for (int n = 1; n <= 7; ++n) {
            const ExactMatrix m = random_matrix(rng, n);
            if (immanant(m, Partition::single_column(n)) != determinant(m)) {
                detail = "sign immanant != determinant at n=" +
                         std::to_string(n);
                return false;
            }
            if (immanant(m, Partition::single_row(n)) !=
                ryser_permanent(m)) {
                detail = "trivial immanant != permanent at n=" +
                         std::to_string(n);
                return false;
            }
            ++checked;
        }
    if (checked < 200) {
        detail = "only " + std::to_string(checked) + " matrices checked";
        return false;
    }
    return true;
}

// criterion 4 sampling arm: random connected labeled graphs on 7 vertices
bool check_sampled_order7(std::string& detail) {
    std::mt19937 rng(700700u);
    std::bernoulli_distribution edge(0.5);
    const std::pair<Rational, Rational> settings[] = {
        {1, -1}, {1, 1}, {0, 1}, {2, 3}};
    const int min_order[6] = {1, 1, 3, 4, 5, 6};
    int sampled = 0;
    while (sampled < 500) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v)
                if (edge(rng)) edges.emplace_back(u, v);
        const Graph g(7, edges);
        if (!g.connected()) continue;
        ++sampled;
        for (const auto& [beta, gamma] : settings) {
            const SubsetClassSums sums =
                subset_class_sums(lincomb_matrix(g, beta, gamma), 5);
            for (int k = 1; k <= 7; ++k)
                for (int r = 0; r <= 5; ++r) {
                    if (7 < min_order[r]) continue;
                    if (hook_coeff_closed(g, k, r, beta, gamma) !=
                        coeff_from_subset_sums(sums, Partition::hook(7, k),
                                               r)) {
                        detail = "sample " + std::to_string(sampled) +
                                 " k=" + std::to_string(k) +
                                 " r=" + std::to_string(r);
                        return false;
                    }
                }
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<bool(std::string&)> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "character orthogonality and hook character closed forms",
         [](std::string& d) { return run_suites({"characters"}, d); }},
        {2, "sign and trivial immanants against determinant and permanent",
         check_det_per},
        {3, "subset expansion equals interpolation for every shape",
         [](std::string& d) { return run_suites({"oracle-pair"}, d); }},
        {4, "closed-form hook coefficients against the subset oracle",
         [](std::string& d) {
             if (!run_suites({"hook-closed-forms"}, d)) return false;
             return check_sampled_order7(d);
         }},
        {5, "published special cases against formulas and oracle",
         [](std::string& d) { return run_suites({"corollaries"}, d); }},
        {6, "coefficient sandwiches: general, tree, bipartite",
         [](std::string& d) { return run_suites({"bounds"}, d); }},
        {7, "orientation census expansion equals the subset oracle",
         [](std::string& d) { return run_suites({"orientation-formula"}, d); }},
        {8, "zero blocks, Laplace expansions, star-degree multiplicities",
         [](std::string& d) {
             return run_suites({"zero-block", "laplace", "star-degree"}, d);
         }},
        {9, "hook equivalence for pairs of regular graphs",
         [](std::string& d) { return run_suites({"regular-equivalence"}, d); }},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        std::ostringstream line;
        line << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " ("
             << std::fixed;
        line.precision(1);
        line << dt << "s) " << c.title;
        if (!ok && !detail.empty()) line << " — " << detail;
        std::cout << line.str() << std::endl;
        all_ok = all_ok && ok;
    }
    std::cout << (all_ok ? "acceptance: PASS" : "acceptance: FAIL")
              << std::endl;
    return all_ok ? 0 : 1;
}
