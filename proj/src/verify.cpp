#include "immpoly/verify.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "immpoly/atlas.hpp"
#include "immpoly/character.hpp"
#include "immpoly/det.hpp"
#include "immpoly/graph6.hpp"
#include "immpoly/hook.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/invariants.hpp"
#include "immpoly/laplace.hpp"
#include "immpoly/limits.hpp"
#include "immpoly/lr.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/orientation.hpp"
#include "immpoly/poly.hpp"
#include "immpoly/zero_block.hpp"

namespace immpoly {

int SuiteReport::passed() const {
    int v = 0;
    for (const auto& a : assertions) v += a.ok && !a.skipped;
    return v;
}

int SuiteReport::failed() const {
    int v = 0;
    for (const auto& a : assertions) v += !a.ok && !a.skipped;
    return v;
}

int SuiteReport::skipped() const {
    int v = 0;
    for (const auto& a : assertions) v += a.skipped;
    return v;
}

namespace {

using Setting = std::pair<Rational, Rational>;

constexpr int kClosedFormMinOrder[6] = {1, 1, 3, 4, 5, 6};

struct Ctx {
    SuiteReport rep;

    void check(bool ok, const std::string& label,
               const std::string& witness = {}) {
        rep.assertions.push_back(
            {label, ok, false, ok ? std::string() : witness});
    }
    void skip(const std::string& label, const std::string& reason) {
        rep.assertions.push_back({label, true, true, reason});
    }
};

int ceil_n(const SuiteOptions& o, int def, int hard) {
    const int v = o.max_n > 0 ? o.max_n : def;
    return std::min(v, hard);
}

std::vector<Setting> settings_or(const SuiteOptions& o,
                                 std::vector<Setting> def) {
    if (o.beta.has_value() != o.gamma.has_value())
        throw std::invalid_argument(
            "verify: give both beta and gamma or neither");
    if (o.beta) return {{*o.beta, *o.gamma}};
    return def;
}

std::string setting_str(const Setting& s) {
    return "beta=" + to_string(s.first) + " gamma=" + to_string(s.second);
}

// hooks plus the two smallest non-hook shapes; the bound theorems quantify
// over every shape, these keep the sweep representative and cheap
std::vector<Partition> bound_shapes(int n) {
    std::vector<Partition> shapes;
    for (int k = 1; k <= n; ++k) shapes.push_back(Partition::hook(n, k));
    if (n >= 4) {
        std::vector<int> p{2, 2};
        p.insert(p.end(), n - 4, 1);
        shapes.push_back(Partition(p));
    }
    if (n >= 5) {
        std::vector<int> p{3, 2};
        p.insert(p.end(), n - 5, 1);
        shapes.push_back(Partition(p));
    }
    return shapes;
}

Rational rand_rat(std::mt19937& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    int p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    return Rational(p) / Rational(den(rng));
}

std::vector<int> rand_subset(std::mt19937& rng, int n, int size) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

// ---------------------------------------------------------------- characters

SuiteReport suite_characters(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "characters";
    const int nmax_orth = ceil_n(opt, 7, 8);
    const int nmax_hook = ceil_n(opt, 9, 10);

    for (int n = 0; n <= 12; ++n) {
        const auto parts = enumerate_partitions(n);
        bool ok = static_cast<long long>(parts.size()) == partition_count(n);
        for (size_t i = 0; ok && i + 1 < parts.size(); ++i)
            ok = reverse_lex_less(parts[i], parts[i + 1]);
        c.check(ok, "partition enumeration n=" + std::to_string(n),
                "count or order mismatch");
    }

    for (int n = 1; n <= nmax_orth; ++n) {
        const auto shapes = enumerate_partitions(n);
        const Integer nfact = factorial(n);
        for (size_t a = 0; a < shapes.size(); ++a) {
            bool ok = true;
            std::string wit;
            for (size_t b = a; b < shapes.size() && ok; ++b) {
                Integer s = 0;
                for (const auto& mu : shapes)
                    s += nfact / centralizer_order(mu) *
                         character(shapes[a], mu) * character(shapes[b], mu);
                const Integer expect = a == b ? nfact : Integer(0);
                if (s != expect) {
                    ok = false;
                    wit = "row pairing with " + shapes[b].to_string() +
                          " gives " + s.get_str();
                }
            }
            c.check(ok,
                    "orthogonality n=" + std::to_string(n) +
                        " lam=" + shapes[a].to_string(),
                    wit);
        }
    }

    for (int n = 2; n <= nmax_hook; ++n) {
        bool ok = true;
        std::string wit;
        for (int k = 1; k <= n && ok; ++k)
            if (hook_character_identity(n, k) !=
                character(Partition::hook(n, k), Partition::single_column(n))) {
                ok = false;
                wit = "identity class, k=" + std::to_string(k);
            }
        c.check(ok, "hook fast path identity n=" + std::to_string(n), wit);

        ok = true;
        for (int k = 1; k <= n && ok; ++k)
            for (int l = 2; l <= n && ok; ++l) {
                std::vector<int> p{l};
                p.insert(p.end(), n - l, 1);
                if (hook_character_lcycle(n, k, l) !=
                    character(Partition::hook(n, k), Partition(p))) {
                    ok = false;
                    wit = "l-cycle class, k=" + std::to_string(k) +
                          " l=" + std::to_string(l);
                }
            }
        c.check(ok, "hook fast path l-cycle n=" + std::to_string(n), wit);

        ok = true;
        for (int k = 1; k <= n && ok; ++k)
            for (int i = 1; 2 * i <= n && ok; ++i) {
                std::vector<int> p(i, 2);
                p.insert(p.end(), n - 2 * i, 1);
                if (hook_character_involution(n, k, i) !=
                    character(Partition::hook(n, k), Partition(p))) {
                    ok = false;
                    wit = "involution class, k=" + std::to_string(k) +
                          " i=" + std::to_string(i);
                }
            }
        c.check(ok, "hook fast path involution n=" + std::to_string(n), wit);

        if (n >= 5) {
            ok = true;
            for (int k = 1; k <= n && ok; ++k) {
                std::vector<int> p{3, 2};
                p.insert(p.end(), n - 5, 1);
                if (hook_character_32(n, k) !=
                    character(Partition::hook(n, k), Partition(p))) {
                    ok = false;
                    wit = "class (3,2,1^{n-5}), k=" + std::to_string(k);
                }
            }
            c.check(ok, "hook fast path (3,2,...) n=" + std::to_string(n),
                    wit);
        }
    }
    return c.rep;
}

// --------------------------------------------------------------- oracle-pair

SuiteReport suite_oracle_pair(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "oracle-pair";
    const int nmax = ceil_n(opt, 6, 7);
    const std::vector<std::string> kinds = {"L", "Q", "A", "aalpha:1/3",
                                            "lincomb:2,3"};

    for (int n = 1; n <= nmax; ++n) {
        const auto shapes = enumerate_partitions(n);
        std::vector<Rational> xs(n + 1);
        for (int i = 0; i <= n; ++i) xs[i] = Rational(i);
        for (const Graph& g : atlas_connected_graphs(n)) {
            for (const auto& kind : kinds) {
                const ExactMatrix m = graph_matrix(g, MatrixSpec::parse(kind));
                const SubsetClassSums sums = subset_class_sums(m, n);
                std::vector<CycleTypeSums> eval;
                eval.reserve(n + 1);
                for (int i = 0; i <= n; ++i)
                    eval.push_back(
                        immanant_class_sums(m.scaled_identity_minus(xs[i])));

                bool ok = true;
                std::string wit;
                for (const auto& lam : shapes) {
                    std::vector<Rational> ys(n + 1);
                    for (int i = 0; i <= n; ++i)
                        ys[i] = immanant_from_sums(eval[i], lam);
                    const ImmPolynomial interp = ImmPolynomial::from_signed(
                        lam, interpolate_monomial_coeffs(xs, ys));
                    for (int r = 0; r <= n && ok; ++r)
                        if (coeff_from_subset_sums(sums, lam, r) !=
                            interp.coeff(r)) {
                            ok = false;
                            wit = "lam=" + lam.to_string() +
                                  " r=" + std::to_string(r);
                        }
                    if (!ok) break;
                }
                if (ok && n >= 2) {
                    const Partition h2 = Partition::hook(n, 2);
                    if (!(imm_poly(m, h2) == imm_poly_interpolated(m, h2))) {
                        ok = false;
                        wit = "imm_poly wrappers disagree at hook k=2";
                    }
                }
                c.check(ok,
                        "oracle-pair g6=" + emit_graph6(g) + " kind=" + kind,
                        wit);
            }
        }
    }
    return c.rep;
}

// ----------------------------------------------------------- specializations

SuiteReport suite_specializations(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "specializations";
    const int nmax = ceil_n(opt, 6, 7);

    struct Row {
        std::string name;
        Rational beta, gamma;
        bool named;  // route through specialized_coeff
        SpecialCoeffs which = SpecialCoeffs::laplacian;
        Rational alpha;  // aalpha rows only
        bool is_alpha = false;
    };
    std::vector<Row> rows = {
        {"L", Rational(1), Rational(-1), true, SpecialCoeffs::laplacian, 0,
         false},
        {"Q", Rational(1), Rational(1), true, SpecialCoeffs::signless, 0,
         false},
        {"A", Rational(0), Rational(1), true, SpecialCoeffs::adjacency, 0,
         false},
    };
    for (const char* a : {"0", "1/4", "1/3", "1/2", "1"}) {
        Row r;
        r.name = std::string("aalpha:") + a;
        r.alpha = parse_rational(a);
        r.beta = r.alpha;
        r.gamma = Rational(1) - r.alpha;
        r.named = false;
        r.is_alpha = true;
        rows.push_back(r);
    }

    for (int n = 3; n <= nmax; ++n) {
        const int rmax = std::min(5, n);
        for (const Graph& g : atlas_connected_graphs(n)) {
            for (const Row& row : rows) {
                const SubsetClassSums sums = subset_class_sums(
                    lincomb_matrix(g, row.beta, row.gamma), rmax);
                bool ok = true;
                std::string wit;
                for (int k = 1; k <= n && ok; ++k)
                    for (int r = 0; r <= rmax && ok; ++r) {
                        if (n < kClosedFormMinOrder[r]) continue;
                        const Rational v =
                            row.is_alpha
                                ? aalpha_coeff(g, row.alpha, k, r)
                                : (row.named && k >= 1
                                       ? specialized_coeff(g, row.which, k, r)
                                       : hook_coeff_closed(g, k, r, row.beta,
                                                           row.gamma));
                        if (v != hook_coeff_closed(g, k, r, row.beta,
                                                   row.gamma) ||
                            v != coeff_from_subset_sums(
                                     sums, Partition::hook(n, k), r)) {
                            ok = false;
                            wit = "k=" + std::to_string(k) +
                                  " r=" + std::to_string(r);
                        }
                    }
                c.check(ok,
                        "specialization g6=" + emit_graph6(g) +
                            " kind=" + row.name,
                        wit);
            }
        }
    }
    return c.rep;
}

// --------------------------------------------------------- hook-closed-forms

SuiteReport suite_hook_closed_forms(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "hook-closed-forms";
    const int nmax = ceil_n(opt, 6, 7);
    const auto settings = settings_or(
        opt, {{Rational(1), Rational(-1)},
              {Rational(1), Rational(1)},
              {Rational(0), Rational(1)},
              {Rational(2), Rational(3)}});

    for (const SignAuditRecord& rec : sign_audit_records()) {
        const Rational cor = hook_coeff_closed(rec.witness, rec.k, rec.r,
                                               rec.beta, rec.gamma);
        const Rational unc = hook_coeff_uncorrected(rec.witness, rec.k, rec.r,
                                                    rec.beta, rec.gamma);
        const Rational oracle = coeff_from_subset_sums(
            subset_class_sums(lincomb_matrix(rec.witness, rec.beta, rec.gamma),
                              rec.r),
            Partition::hook(rec.witness.n(), rec.k), rec.r);
        c.check(cor == oracle && unc != oracle, "sign-audit " + rec.term_id,
                "corrected=" + to_string(cor) + " uncorrected=" +
                    to_string(unc) + " oracle=" + to_string(oracle));
    }

    {
        std::ifstream f(atlas_data_dir() + "/hook_sign_audit.csv");
        std::stringstream buf;
        buf << f.rdbuf();
        c.check(f.good() && buf.str() == sign_audit_csv(),
                "sign-audit csv file up to date",
                "regenerate data/hook_sign_audit.csv with immpoly-audit-csv");
    }

    for (int n = 3; n <= nmax; ++n) {
        const int rmax = std::min(5, n);
        for (const Graph& g : atlas_connected_graphs(n)) {
            for (const Setting& s : settings) {
                const SubsetClassSums sums = subset_class_sums(
                    lincomb_matrix(g, s.first, s.second), rmax);
                bool ok = true;
                std::string wit;
                for (int k = 1; k <= n && ok; ++k)
                    for (int r = 0; r <= rmax && ok; ++r) {
                        if (n < kClosedFormMinOrder[r]) continue;
                        if (hook_coeff_closed(g, k, r, s.first, s.second) !=
                            coeff_from_subset_sums(sums, Partition::hook(n, k),
                                                   r)) {
                            ok = false;
                            wit = "k=" + std::to_string(k) +
                                  " r=" + std::to_string(r);
                        }
                    }
                c.check(ok,
                        "closed-forms g6=" + emit_graph6(g) + " " +
                            setting_str(s),
                        wit);
            }
        }
    }
    return c.rep;
}

// --------------------------------------------------------------- corollaries

SuiteReport suite_corollaries(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "corollaries";
    const int nmax = ceil_n(opt, 7, 7);

    for (int n = 1; n <= nmax; ++n) {
        for (const Graph& g : atlas_all_graphs(n)) {
            if (n >= 2) {
                const SubsetClassSums sums = subset_class_sums(
                    lincomb_matrix(g, Rational(1), Rational(-1)),
                    std::min(3, n));
                bool ok = true;
                std::string wit;
                for (int r = 0; r <= std::min(3, n) && ok; ++r) {
                    if (n < kClosedFormMinOrder[r]) continue;
                    const Rational v = specialized_coeff(
                        g, SpecialCoeffs::merris_second, 2, r);
                    if (v != coeff_from_subset_sums(sums,
                                                    Partition::hook(n, 2), r) ||
                        v != hook_coeff_closed(g, 2, r, Rational(1),
                                               Rational(-1))) {
                        ok = false;
                        wit = "r=" + std::to_string(r);
                    }
                }
                c.check(ok, "merris-second g6=" + emit_graph6(g), wit);
            }
            {
                const SubsetClassSums sums = subset_class_sums(
                    adjacency_matrix(g), std::min(4, n));
                bool ok = true;
                std::string wit;
                for (int r = 0; r <= std::min(4, n) && ok; ++r) {
                    const Rational v =
                        specialized_coeff(g, SpecialCoeffs::permanental, n, r);
                    if (v != coeff_from_subset_sums(
                                 sums, Partition::single_row(n), r)) {
                        ok = false;
                        wit = "r=" + std::to_string(r) + " vs oracle";
                    } else if (n >= kClosedFormMinOrder[r] &&
                               v != hook_coeff_closed(g, n, r, Rational(0),
                                                      Rational(1))) {
                        ok = false;
                        wit = "r=" + std::to_string(r) + " vs closed form";
                    }
                }
                c.check(ok, "permanental g6=" + emit_graph6(g), wit);
            }
        }
    }
    return c.rep;
}

// -------------------------------------------------------------------- bounds

SuiteReport suite_bounds(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "bounds";
    const int gen_max = ceil_n(opt, 6, 7);
    const int tree_max = ceil_n(opt, 8, 8);
    const int bip_max = ceil_n(opt, 7, 7);
    const auto settings = settings_or(
        opt, {{Rational(1), Rational(1)},
              {Rational(1), Rational(-1)},
              {Rational(2), Rational(-1)},
              {Rational(1), Rational(-2)}});  // last lies outside |gamma|<=beta
                                              // and exercises the skip paths

    auto sandwich = [](const SubsetClassSums& lo, const SubsetClassSums& mid,
                       const SubsetClassSums& hi,
                       const std::vector<Partition>& shapes, int n,
                       std::string& wit) {
        for (const auto& lam : shapes)
            for (int r = 0; r <= n; ++r) {
                const Rational v = coeff_from_subset_sums(mid, lam, r);
                if (coeff_from_subset_sums(lo, lam, r) > v ||
                    v > coeff_from_subset_sums(hi, lam, r)) {
                    wit = "lam=" + lam.to_string() + " r=" + std::to_string(r);
                    return false;
                }
            }
        return true;
    };

    for (const Setting& s : settings) {
        const auto& [beta, gamma] = s;
        const bool hyp_ok =
            beta > 0 && gamma != 0 && gamma <= beta && -gamma <= beta;
        // general: star <= G <= complete for connected G
        if (!hyp_ok) {
            c.skip("bounds general " + setting_str(s),
                   "hypothesis needs beta>0, gamma!=0, |gamma|<=beta");
        } else {
            for (int n = 2; n <= gen_max; ++n) {
                const auto shapes = bound_shapes(n);
                const SubsetClassSums lo = subset_class_sums(
                    lincomb_matrix(Graph::star(n), beta, gamma), n);
                const SubsetClassSums hi = subset_class_sums(
                    lincomb_matrix(Graph::complete(n), beta, gamma), n);
                for (const Graph& g : atlas_connected_graphs(n)) {
                    const SubsetClassSums mid =
                        subset_class_sums(lincomb_matrix(g, beta, gamma), n);
                    std::string wit;
                    c.check(sandwich(lo, mid, hi, shapes, n, wit),
                            "bounds general g6=" + emit_graph6(g) + " " +
                                setting_str(s),
                            wit);
                }
            }
        }
        // trees: star <= T <= path
        if (!hyp_ok) {
            c.skip("bounds tree " + setting_str(s),
                   "hypothesis needs beta>0, gamma!=0, |gamma|<=beta");
        } else {
            for (int n = 2; n <= tree_max; ++n) {
                const auto shapes = bound_shapes(n);
                const SubsetClassSums lo = subset_class_sums(
                    lincomb_matrix(Graph::star(n), beta, gamma), n);
                const SubsetClassSums hi = subset_class_sums(
                    lincomb_matrix(Graph::path(n), beta, gamma), n);
                for (const Graph& t : atlas_trees(n)) {
                    const SubsetClassSums mid =
                        subset_class_sums(lincomb_matrix(t, beta, gamma), n);
                    std::string wit;
                    c.check(sandwich(lo, mid, hi, shapes, n, wit),
                            "bounds tree g6=" + emit_graph6(t) + " " +
                                setting_str(s),
                            wit);
                }
            }
        }
        // bipartite: star <= G <= K_{ceil,floor} for connected bipartite G
        if (!hyp_ok) {
            c.skip("bounds bipartite " + setting_str(s),
                   "hypothesis needs beta>0, gamma!=0, |gamma|<=beta");
        } else {
            for (int n = 2; n <= bip_max; ++n) {
                const auto shapes = bound_shapes(n);
                const SubsetClassSums lo = subset_class_sums(
                    lincomb_matrix(Graph::star(n), beta, gamma), n);
                const SubsetClassSums hi = subset_class_sums(
                    lincomb_matrix(
                        Graph::complete_bipartite((n + 1) / 2, n / 2), beta,
                        gamma),
                    n);
                for (const Graph& g : atlas_connected_graphs(n)) {
                    if (!g.bipartition()) continue;
                    const SubsetClassSums mid =
                        subset_class_sums(lincomb_matrix(g, beta, gamma), n);
                    std::string wit;
                    c.check(sandwich(lo, mid, hi, shapes, n, wit),
                            "bounds bipartite g6=" + emit_graph6(g) + " " +
                                setting_str(s),
                            wit);
                }
            }
        }
    }

    // spot checks of the report-producing entry point
    {
        const Graph g = Graph::path(5);
        const auto rep = check_coeff_bounds(g, Partition::hook(5, 2), 3,
                                            Rational(1), Rational(-1),
                                            BoundRegime::tree);
        c.check(rep.applicable && rep.ok, "check_coeff_bounds path:5 tree",
                rep.skip_reason);
        const auto rep2 = check_coeff_bounds(g, Partition::hook(5, 2), 3,
                                             Rational(-1), Rational(1),
                                             BoundRegime::tree);
        c.check(!rep2.applicable && rep2.skip_reason == "beta <= 0",
                "check_coeff_bounds hypothesis skip", rep2.skip_reason);
    }
    return c.rep;
}

// ------------------------------------------------------- orientation-formula

SuiteReport suite_orientation_formula(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "orientation-formula";
    const int nmax = ceil_n(opt, 5, 7);
    const auto settings = settings_or(
        opt, {{Rational(1), Rational(-1)},
              {Rational(1), Rational(1)},
              {Rational(0), Rational(1)},
              {Rational(2), Rational(3)}});

    for (int n = 1; n <= nmax; ++n) {
        const auto shapes = enumerate_partitions(n);
        for (const Graph& g : atlas_all_graphs(n)) {
            bool ok = true;
            std::string wit;
            for (int r = 0; r <= n && ok; ++r) {
                const OrientationCensus par = orientation_census(g, r);
                const OrientationCensus ser = orientation_census_serial(g, r);
                if (par.counts != ser.counts) {
                    ok = false;
                    wit = "serial/parallel mismatch at r=" + std::to_string(r);
                } else if (par.total() != graph_degree_elementary(g, r)) {
                    ok = false;
                    wit = "census total != F_r at r=" + std::to_string(r);
                }
            }
            c.check(ok, "census identities g6=" + emit_graph6(g), wit);

            for (const Setting& s : settings) {
                const SubsetClassSums sums = subset_class_sums(
                    lincomb_matrix(g, s.first, s.second), n);
                bool okc = true;
                std::string witc;
                for (const auto& lam : shapes)
                    for (int r = 0; r <= n && okc; ++r)
                        if (coeff_via_orientations(g, lam, r, s.first,
                                                   s.second) !=
                            coeff_from_subset_sums(sums, lam, r)) {
                            okc = false;
                            witc = "lam=" + lam.to_string() +
                                   " r=" + std::to_string(r);
                        }
                c.check(okc,
                        "orientation coeff g6=" + emit_graph6(g) + " " +
                            setting_str(s),
                        witc);
            }
        }
    }

    for (int n = 2; n <= std::min(nmax + 1, 6); ++n)
        for (const Graph& t : atlas_trees(n)) {
            bool ok = true;
            std::string wit;
            for (int r = 0; r <= n && ok; ++r) {
                const auto rep = check_tree_census_bounds(t, r);
                if (!rep.ok) {
                    ok = false;
                    wit = rep.detail;
                }
            }
            c.check(ok, "tree census bounds g6=" + emit_graph6(t), wit);
        }

    for (int n = 2; n <= std::min(nmax, 5); ++n)
        for (const Graph& g : atlas_connected_graphs(n)) {
            if (g.m() == 0) continue;
            bool ok = true;
            std::string wit;
            for (const auto& e : g.edges())
                for (int r = 0; r <= n && ok; ++r) {
                    const auto rep = check_edge_monotonicity(g, e, r);
                    if (!rep.ok) {
                        ok = false;
                        wit = rep.detail;
                    }
                }
            c.check(ok, "edge monotonicity g6=" + emit_graph6(g), wit);
        }
    return c.rep;
}

// ------------------------------------------------------------------- laplace

SuiteReport suite_laplace(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "laplace";
    const int nmax = ceil_n(opt, 6, 7);

    // restriction multiplicities from character orthogonality agree with the
    // tableau-counted LR coefficients
    for (int n = 2; n <= std::min(nmax, 6); ++n) {
        const auto shapes = enumerate_partitions(n);
        for (int r = 1; r < n; ++r) {
            const auto mus = enumerate_partitions(r);
            const auto nus = enumerate_partitions(n - r);
            bool ok = true;
            std::string wit;
            for (const auto& lam : shapes) {
                const auto w = branching_coefficients(lam, r);
                for (size_t a = 0; a < mus.size() && ok; ++a)
                    for (size_t b = 0; b < nus.size() && ok; ++b)
                        if (w[a][b] !=
                            littlewood_richardson(lam, mus[a], nus[b])) {
                            ok = false;
                            wit = "lam=" + lam.to_string() +
                                  " mu=" + mus[a].to_string() +
                                  " nu=" + nus[b].to_string();
                        }
                if (!ok) break;
            }
            c.check(ok,
                    "branching = LR n=" + std::to_string(n) +
                        " r=" + std::to_string(r),
                    wit);
        }
    }

    std::mt19937 rng(20250816u);
    for (int n = 2; n <= nmax; ++n) {
        const auto shapes = enumerate_partitions(n);
        std::vector<ExactMatrix> mats;
        for (int t = 0; t < 2; ++t) {
            ExactMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = rand_rat(rng, false);
            mats.push_back(m);
        }
        mats.push_back(lincomb_matrix(Graph::path(n), Rational(1),
                                      Rational(-1)));
        if (n >= 3)
            mats.push_back(
                lincomb_matrix(Graph::cycle(n), Rational(1), Rational(1)));

        for (size_t mi = 0; mi < mats.size(); ++mi) {
            const ExactMatrix& m = mats[mi];
            const CycleTypeSums direct = immanant_class_sums(m);
            bool ok = true;
            std::string wit;
            // all row sets of size <= 3 (proper, nonempty)
            for (int size = 1; size <= std::min(3, n - 1) && ok; ++size) {
                std::vector<int> rows(size);
                for (int i = 0; i < size; ++i) rows[i] = i;
                while (ok) {
                    for (const auto& lam : shapes)
                        if (laplace_expand(m, lam, rows) !=
                            immanant_from_sums(direct, lam)) {
                            ok = false;
                            wit = "rows size " + std::to_string(size) +
                                  " lam=" + lam.to_string();
                            break;
                        }
                    int i = size - 1;
                    while (i >= 0 && rows[i] == n - size + i) --i;
                    if (i < 0) break;
                    ++rows[i];
                    for (int j = i + 1; j < size; ++j) rows[j] = rows[j - 1] + 1;
                }
            }
            c.check(ok,
                    "laplace expansion n=" + std::to_string(n) + " matrix#" +
                        std::to_string(mi),
                    wit);
        }
    }
    return c.rep;
}

// ---------------------------------------------------------------- zero-block

SuiteReport suite_zero_block(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "zero-block";
    const int nmax = ceil_n(opt, 6, 7);
    std::mt19937 rng(987654321u);

    for (int n = 2; n <= nmax; ++n) {
        const auto shapes = enumerate_partitions(n);
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<int> ydist(1, n);
            const int y = ydist(rng);
            const int z = n + 1 - y;
            const auto rows = rand_subset(rng, n, y);
            const auto cols = rand_subset(rng, n, z);
            ExactMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = rand_rat(rng, true);
            for (int i : rows)
                for (int j : cols) m.at(i, j) = 0;

            bool ok = true;
            std::string wit;
            const auto witness = vanishes_by_zero_block(m);
            if (!witness) {
                ok = false;
                wit = "no witness found";
            } else {
                if (witness->rows.size() + witness->cols.size() !=
                    static_cast<size_t>(n + 1)) {
                    ok = false;
                    wit = "witness sizes do not sum to n+1";
                }
                for (int i : witness->rows)
                    for (int j : witness->cols)
                        if (ok && m.at(i, j) != 0) {
                            ok = false;
                            wit = "witness block not zero";
                        }
            }
            if (ok) {
                const CycleTypeSums sums = immanant_class_sums(m);
                for (const auto& lam : shapes)
                    if (immanant_from_sums(sums, lam) != 0) {
                        ok = false;
                        wit = "nonvanishing immanant at lam=" + lam.to_string();
                        break;
                    }
            }
            c.check(ok,
                    "planted block n=" + std::to_string(n) + " trial " +
                        std::to_string(trial),
                    wit);
        }

        // control: positive diagonal support has no witness and a positive
        // permanent
        for (int trial = 0; trial < 5; ++trial) {
            ExactMatrix m(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Rational v = rand_rat(rng, false);
                    m.at(i, j) = v < 0 ? Rational(-v) : v;
                }
            for (int i = 0; i < n; ++i)
                if (m.at(i, i) == 0) m.at(i, i) = 1;
            bool ok = !vanishes_by_zero_block(m).has_value() &&
                      immanant(m, Partition::single_row(n)) > 0;
            c.check(ok,
                    "control matrix n=" + std::to_string(n) + " trial " +
                        std::to_string(trial),
                    "witness reported or permanent not positive");
        }
    }
    return c.rep;
}

// --------------------------------------------------------------- star-degree

SuiteReport suite_star_degree(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "star-degree";
    const int nmax = ceil_n(opt, 7, 7);
    const auto settings = settings_or(
        opt, {{Rational(1), Rational(-1)},
              {Rational(1), Rational(1)},
              {Rational(1) / 2, Rational(1) / 2},
              {Rational(3), Rational(2)}});

    for (int n = 1; n <= nmax; ++n) {
        const Partition lam =
            n >= 2 ? Partition::hook(n, 2) : Partition::single_row(1);
        for (const Graph& g : atlas_connected_graphs(n)) {
            for (const Setting& s : settings) {
                const auto rep =
                    star_degree_bound_check(g, lam, s.first, s.second);
                c.check(rep.ok,
                        "star-degree g6=" + emit_graph6(g) + " " +
                            setting_str(s),
                        "star degree " + std::to_string(rep.star_degree) +
                            " > multiplicity " +
                            std::to_string(rep.multiplicity));
            }
        }
    }

    // all shapes on small orders
    for (int n = 2; n <= std::min(nmax, 5); ++n)
        for (const Graph& g : atlas_connected_graphs(n)) {
            bool ok = true;
            std::string wit;
            for (const auto& lam : enumerate_partitions(n)) {
                const auto rep = star_degree_bound_check(g, lam, Rational(1),
                                                         Rational(1));
                if (!rep.ok) {
                    ok = false;
                    wit = "lam=" + lam.to_string();
                    break;
                }
            }
            c.check(ok, "star-degree all shapes g6=" + emit_graph6(g), wit);
        }
    return c.rep;
}

// ------------------------------------------------------- regular-equivalence

SuiteReport suite_regular_equivalence(const SuiteOptions& opt) {
    Ctx c;
    c.rep.suite = "regular-equivalence";
    const int nmax = ceil_n(opt, 8, 8);
    const auto settings =
        settings_or(opt, {{Rational(1), Rational(-1)},
                          {Rational(1), Rational(1)}});

    std::vector<std::pair<Graph, Graph>> pairs;
    auto add_pool = [&](const std::vector<Graph>& pool) {
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = i; j < pool.size(); ++j)
                pairs.emplace_back(pool[i], pool[j]);
    };
    if (nmax >= 6) add_pool(atlas_cubic_graphs(6));
    if (nmax >= 8) add_pool(atlas_cubic_graphs(8));
    if (nmax >= 4) pairs.emplace_back(Graph::cycle(4), Graph::complete(4));
    if (nmax >= 6)
        pairs.emplace_back(Graph::cycle(6), atlas_cubic_graphs(6).front());
    if (nmax >= 5) pairs.emplace_back(Graph::cycle(5), Graph::cycle(5));

    for (size_t p = 0; p < pairs.size(); ++p) {
        const auto& [g1, g2] = pairs[p];
        for (int k : {2, 3}) {
            if (k > std::min(g1.n(), g2.n())) continue;
            for (const Setting& s : settings) {
                const auto rep =
                    regular_equivalence_check(g1, g2, k, s.first, s.second);
                c.check(rep.applicable && rep.ok,
                        "regular equivalence g6=" + emit_graph6(g1) + "," +
                            emit_graph6(g2) + " k=" + std::to_string(k) + " " +
                            setting_str(s),
                        rep.applicable
                            ? "one equality holds without the other"
                            : rep.skip_reason);
            }
        }
    }
    return c.rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "characters",   "oracle-pair",        "specializations",
        "hook-closed-forms", "corollaries",   "bounds",
        "orientation-formula", "laplace",     "zero-block",
        "star-degree",  "regular-equivalence"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "characters") return suite_characters(opt);
    if (name == "oracle-pair") return suite_oracle_pair(opt);
    if (name == "specializations") return suite_specializations(opt);
    if (name == "hook-closed-forms") return suite_hook_closed_forms(opt);
    if (name == "corollaries") return suite_corollaries(opt);
    if (name == "bounds") return suite_bounds(opt);
    if (name == "orientation-formula") return suite_orientation_formula(opt);
    if (name == "laplace") return suite_laplace(opt);
    if (name == "zero-block") return suite_zero_block(opt);
    if (name == "star-degree") return suite_star_degree(opt);
    if (name == "regular-equivalence") return suite_regular_equivalence(opt);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace immpoly
