#include "immpoly/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "immpoly/atlas.hpp"
#include "immpoly/character.hpp"
#include "immpoly/graph.hpp"
#include "immpoly/graph6.hpp"
#include "immpoly/hook.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/limits.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/orientation.hpp"
#include "immpoly/partition.hpp"
#include "immpoly/poly.hpp"
#include "immpoly/rational.hpp"
#include "immpoly/verify.hpp"

namespace immpoly {
namespace {

using nlohmann::json;

enum class Format { text, csv, jsonf };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::jsonf;
    throw std::invalid_argument("unknown format: " + s);
}

// ----------------------------------------------------------- graph sources

struct GraphSource {
    std::string graph6;
    std::string file;  // "-" = stdin
    std::string family;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--graph6", src.graph6, "one graph in graph6 form");
    cmd->add_option("--file", src.file,
                    "graph6 file, one graph per line ('-' for stdin)");
    cmd->add_option("--family", src.family,
                    "named family: path:N, star:N, cycle:N, complete:N, "
                    "kbip:A,B");
}

void stream_graph6(std::istream& in,
                   const std::function<void(const Graph&)>& fn) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        fn(parse_graph6(line));
    }
}

void for_each_input_graph(const GraphSource& src,
                          const std::function<void(const Graph&)>& fn) {
    bool any = false;
    if (!src.graph6.empty()) {
        fn(parse_graph6(src.graph6));
        any = true;
    }
    if (!src.family.empty()) {
        fn(parse_family_spec(src.family));
        any = true;
    }
    if (!src.file.empty()) {
        if (src.file == "-")
            stream_graph6(std::cin, fn);
        else
            for_each_graph6(src.file, fn);
        any = true;
    }
    if (!any)
        throw std::invalid_argument(
            "no graph given; use --graph6, --file, or --family");
}

// One partition spec may expand to several shapes.
std::vector<Partition> expand_shapes(const std::string& spec, int n) {
    if (spec == "all") return enumerate_partitions(n);
    if (spec == "hooks") {
        std::vector<Partition> v;
        for (int k = 1; k <= n; ++k) v.push_back(Partition::hook(n, k));
        return v;
    }
    return {parse_partition_spec(spec, n)};
}

std::vector<Partition> expand_shape_list(const std::vector<std::string>& specs,
                                         int n) {
    std::vector<Partition> out;
    for (const auto& s : specs)
        for (auto& p : expand_shapes(s, n)) {
            if (p.weight() != n)
                throw std::invalid_argument("partition " + p.to_string() +
                                            " has weight " +
                                            std::to_string(p.weight()) +
                                            " but the graph has order " +
                                            std::to_string(n));
            if (std::find(out.begin(), out.end(), p) == out.end())
                out.push_back(std::move(p));
        }
    return out;
}

ImmPolynomial poly_from_sums(const SubsetClassSums& s, const Partition& lam) {
    std::vector<Rational> c(s.n + 1);
    for (int r = 0; r <= s.n; ++r) c[r] = coeff_from_subset_sums(s, lam, r);
    return ImmPolynomial(lam, c);
}

json coeffs_json(const ImmPolynomial& p) {
    json a = json::array();
    for (int r = 0; r <= p.order(); ++r) a.push_back(to_string(p.coeff(r)));
    return a;
}

void csv_escape(std::ostream& os, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        os << s;
        return;
    }
    os << '"';
    for (char ch : s) {
        if (ch == '"') os << '"';
        os << ch;
    }
    os << '"';
}

// ------------------------------------------------------------------- poly

struct PolyArgs {
    GraphSource src;
    std::string matrix = "L";
    std::vector<std::string> shapes{"all"};
    std::string format = "text";
};

int cmd_poly(const PolyArgs& a) {
    const Format fmt = parse_format(a.format);
    const MatrixSpec spec = MatrixSpec::parse(a.matrix);
    json results = json::array();
    if (fmt == Format::csv) std::cout << "graph6,matrix,lambda,r,coeff\n";

    for_each_input_graph(a.src, [&](const Graph& g) {
        const int n = g.n();
        const auto shapes = expand_shape_list(a.shapes, n);
        const SubsetClassSums sums =
            subset_class_sums(graph_matrix(g, spec), n);
        const std::string g6 = emit_graph6(g);
        for (const auto& lam : shapes) {
            const ImmPolynomial p = poly_from_sums(sums, lam);
            switch (fmt) {
                case Format::text: {
                    std::cout << g6 << "  " << spec.to_string() << "  lambda "
                              << lam.to_string() << "  c =";
                    for (int r = 0; r <= n; ++r)
                        std::cout << ' ' << to_string(p.coeff(r));
                    std::cout << '\n';
                    break;
                }
                case Format::csv:
                    for (int r = 0; r <= n; ++r) {
                        csv_escape(std::cout, g6);
                        std::cout << ',' << spec.to_string() << ',';
                        csv_escape(std::cout, lam.to_string());
                        std::cout << ',' << r << ',' << to_string(p.coeff(r))
                                  << '\n';
                    }
                    break;
                case Format::jsonf:
                    results.push_back({{"graph6", g6},
                                       {"n", n},
                                       {"matrix", spec.to_string()},
                                       {"lambda", lam.to_string()},
                                       {"coeffs", coeffs_json(p)}});
                    break;
            }
        }
    });
    if (fmt == Format::jsonf)
        std::cout << json{{"command", "poly"},
                          {"matrix", a.matrix},
                          {"results", results}}
                         .dump(2)
                  << '\n';
    return 0;
}

// ------------------------------------------------------------------ coeff

struct CoeffArgs {
    GraphSource src;
    std::string matrix = "L";
    std::string shape;
    int r = -1;
    std::string method = "subset";
    std::string format = "text";
};

int cmd_coeff(const CoeffArgs& a) {
    const Format fmt = parse_format(a.format);
    const MatrixSpec spec = MatrixSpec::parse(a.matrix);
    if (a.r < 0) throw std::invalid_argument("coeff needs --r >= 0");
    if (a.method != "subset" && a.method != "closed" &&
        a.method != "orientations")
        throw std::invalid_argument(
            "unknown method (use subset, closed, or orientations)");
    json results = json::array();
    if (fmt == Format::csv)
        std::cout << "graph6,matrix,lambda,r,method,coeff\n";

    for_each_input_graph(a.src, [&](const Graph& g) {
        const int n = g.n();
        const Partition lam = parse_partition_spec(a.shape, n);
        if (lam.weight() != n)
            throw std::invalid_argument("partition weight != graph order");
        if (a.r > n)
            throw std::invalid_argument("r exceeds the graph order");
        const auto [beta, gamma] = spec.coefficients();
        Rational v;
        if (a.method == "closed") {
            if (!lam.is_hook())
                throw std::invalid_argument(
                    "closed forms cover hook shapes only");
            v = hook_coeff_closed(g, lam.part(0), a.r, beta, gamma);
        } else if (a.method == "orientations") {
            v = coeff_via_orientations(g, lam, a.r, beta, gamma);
        } else {
            v = coeff_from_subset_sums(
                subset_class_sums(graph_matrix(g, spec), a.r), lam, a.r);
        }
        const std::string g6 = emit_graph6(g);
        switch (fmt) {
            case Format::text:
                std::cout << g6 << "  " << spec.to_string() << "  lambda "
                          << lam.to_string() << "  c_" << a.r << " = "
                          << to_string(v) << '\n';
                break;
            case Format::csv:
                csv_escape(std::cout, g6);
                std::cout << ',' << spec.to_string() << ',';
                csv_escape(std::cout, lam.to_string());
                std::cout << ',' << a.r << ',' << a.method << ','
                          << to_string(v) << '\n';
                break;
            case Format::jsonf:
                results.push_back({{"graph6", g6},
                                   {"matrix", spec.to_string()},
                                   {"lambda", lam.to_string()},
                                   {"r", a.r},
                                   {"method", a.method},
                                   {"value", to_string(v)}});
                break;
        }
    });
    if (fmt == Format::jsonf)
        std::cout << json{{"command", "coeff"}, {"results", results}}.dump(2)
                  << '\n';
    return 0;
}

// ------------------------------------------------------------------- char

struct CharArgs {
    int n = 0;
    std::string lambda;
    std::string mu;
    std::string format = "text";
};

int cmd_char(const CharArgs& a) {
    const Format fmt = parse_format(a.format);
    if (a.n < 0 || a.n > kKernelOrderLimit)
        throw std::invalid_argument("char needs 0 <= n <= " +
                                    std::to_string(kKernelOrderLimit));
    const auto all = enumerate_partitions(a.n);
    const auto rows = a.lambda.empty()
                          ? all
                          : std::vector<Partition>{
                                parse_partition_spec(a.lambda, a.n)};
    const auto cols =
        a.mu.empty() ? all
                     : std::vector<Partition>{parse_partition_spec(a.mu, a.n)};

    json entries = json::array();
    if (fmt == Format::csv) std::cout << "lambda,mu,value\n";
    if (fmt == Format::text && rows.size() > 1 && cols.size() > 1) {
        // full table: header row of classes
        std::cout << "chi";
        for (const auto& m : cols) std::cout << '\t' << m.to_string();
        std::cout << '\n';
    }
    for (const auto& lam : rows) {
        if (fmt == Format::text && cols.size() > 1) std::cout << lam.to_string();
        for (const auto& mu : cols) {
            const Integer v = character(lam, mu);
            switch (fmt) {
                case Format::text:
                    if (cols.size() > 1)
                        std::cout << '\t' << v.get_str();
                    else
                        std::cout << "chi_" << lam.to_string() << mu.to_string()
                                  << " = " << v.get_str() << '\n';
                    break;
                case Format::csv:
                    csv_escape(std::cout, lam.to_string());
                    std::cout << ',';
                    csv_escape(std::cout, mu.to_string());
                    std::cout << ',' << v.get_str() << '\n';
                    break;
                case Format::jsonf:
                    entries.push_back({{"lambda", lam.to_string()},
                                       {"mu", mu.to_string()},
                                       {"value", v.get_str()}});
                    break;
            }
        }
        if (fmt == Format::text && cols.size() > 1) std::cout << '\n';
    }
    if (fmt == Format::jsonf)
        std::cout << json{{"command", "char"}, {"n", a.n},
                          {"entries", entries}}
                         .dump(2)
                  << '\n';
    return 0;
}

// ----------------------------------------------------------------- census

struct CensusArgs {
    GraphSource src;
    int r = -1;  // -1 = all r in 0..n
    std::string format = "text";
};

int cmd_census(const CensusArgs& a) {
    const Format fmt = parse_format(a.format);
    json results = json::array();
    if (fmt == Format::csv) std::cout << "graph6,r,type,count\n";

    for_each_input_graph(a.src, [&](const Graph& g) {
        const int n = g.n();
        if (a.r > n) throw std::invalid_argument("r exceeds the graph order");
        const int rlo = a.r < 0 ? 0 : a.r;
        const int rhi = a.r < 0 ? n : a.r;
        const std::string g6 = emit_graph6(g);
        for (int r = rlo; r <= rhi; ++r) {
            const OrientationCensus census = orientation_census(g, r);
            switch (fmt) {
                case Format::text: {
                    std::cout << g6 << "  r=" << r
                              << "  total=" << census.total().get_str();
                    for (const auto& [type, cnt] : census.counts)
                        std::cout << "  " << type.to_string() << ":"
                                  << cnt.get_str();
                    std::cout << '\n';
                    break;
                }
                case Format::csv:
                    for (const auto& [type, cnt] : census.counts) {
                        csv_escape(std::cout, g6);
                        std::cout << ',' << r << ',';
                        csv_escape(std::cout, type.to_string());
                        std::cout << ',' << cnt.get_str() << '\n';
                    }
                    break;
                case Format::jsonf: {
                    json types = json::array();
                    for (const auto& [type, cnt] : census.counts)
                        types.push_back({{"type", type.to_string()},
                                         {"count", cnt.get_str()}});
                    results.push_back({{"graph6", g6},
                                       {"r", r},
                                       {"total", census.total().get_str()},
                                       {"census", types}});
                    break;
                }
            }
        }
    });
    if (fmt == Format::jsonf)
        std::cout << json{{"command", "census"}, {"results", results}}.dump(2)
                  << '\n';
    return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    int max_n = 0;
    std::string beta, gamma;
    std::string format = "text";
    bool verbose = false;
    bool list = false;
};

int cmd_verify(const VerifyArgs& a) {
    const Format fmt = parse_format(a.format);
    if (a.list) {
        for (const auto& s : suite_names()) std::cout << s << '\n';
        return 0;
    }
    if (a.suite.empty())
        throw std::invalid_argument("verify needs --suite (or --list)");

    SuiteOptions opt;
    opt.max_n = a.max_n;
    if (!a.beta.empty()) opt.beta = parse_rational(a.beta);
    if (!a.gamma.empty()) opt.gamma = parse_rational(a.gamma);

    std::vector<std::string> names;
    if (a.suite == "all")
        names = suite_names();
    else
        names.push_back(a.suite);

    bool all_ok = true;
    json suites = json::array();
    if (fmt == Format::csv) std::cout << "suite,label,status,detail\n";

    for (const auto& name : names) {
        const SuiteReport rep = run_suite(name, opt);
        all_ok = all_ok && rep.ok();
        switch (fmt) {
            case Format::text:
                for (const auto& as : rep.assertions) {
                    if (as.skipped)
                        std::cout << "[skip] " << as.label << " — "
                                  << as.detail << '\n';
                    else if (!as.ok)
                        std::cout << "[FAIL] " << as.label
                                  << (as.detail.empty() ? "" : " — ")
                                  << as.detail << '\n';
                    else if (a.verbose)
                        std::cout << "[pass] " << as.label << '\n';
                }
                std::cout << "suite " << rep.suite << ": " << rep.passed()
                          << " passed, " << rep.failed() << " failed, "
                          << rep.skipped() << " skipped\n";
                break;
            case Format::csv:
                for (const auto& as : rep.assertions) {
                    std::cout << rep.suite << ',';
                    csv_escape(std::cout, as.label);
                    std::cout << ','
                              << (as.skipped ? "skip"
                                             : (as.ok ? "pass" : "fail"))
                              << ',';
                    csv_escape(std::cout, as.detail);
                    std::cout << '\n';
                }
                break;
            case Format::jsonf: {
                json asserts = json::array();
                for (const auto& as : rep.assertions)
                    asserts.push_back({{"label", as.label},
                                       {"ok", as.ok},
                                       {"skipped", as.skipped},
                                       {"detail", as.detail}});
                suites.push_back({{"suite", rep.suite},
                                  {"passed", rep.passed()},
                                  {"failed", rep.failed()},
                                  {"skipped", rep.skipped()},
                                  {"ok", rep.ok()},
                                  {"assertions", asserts}});
                break;
            }
        }
    }
    if (fmt == Format::jsonf) {
        json opts{{"max_n", a.max_n}};
        opts["beta"] = a.beta.empty() ? json() : json(a.beta);
        opts["gamma"] = a.gamma.empty() ? json() : json(a.gamma);
        std::cout << json{{"command", "verify"},
                          {"options", opts},
                          {"ok", all_ok},
                          {"suites", suites}}
                         .dump(2)
                  << '\n';
    }
    return all_ok ? 0 : 1;
}

// ----------------------------------------------------------------- search

struct SearchArgs {
    GraphSource src;
    std::string matrix = "A";
    std::vector<std::string> shapes{"hooks"};
    std::string format = "text";
};

// Groups input graphs by their immanantal polynomial tuple.  Input lines
// are taken verbatim: distinct graph6 lines are treated as distinct
// (non-isomorphic) graphs, repeated lines as repeats of one graph.
int cmd_search(const SearchArgs& a) {
    const Format fmt = parse_format(a.format);
    const MatrixSpec spec = MatrixSpec::parse(a.matrix);

    if (fmt == Format::csv) std::cout << "group,graph6\n";
    std::map<std::string, std::vector<std::string>> groups;  // key -> graph6
    for_each_input_graph(a.src, [&](const Graph& g) {
        const int n = g.n();
        const auto shapes = expand_shape_list(a.shapes, n);
        const SubsetClassSums sums =
            subset_class_sums(graph_matrix(g, spec), n);
        std::ostringstream key;
        key << 'n' << n;
        for (const auto& lam : shapes) {
            key << '|' << lam.to_string() << ':';
            for (int r = 0; r <= n; ++r)
                key << to_string(coeff_from_subset_sums(sums, lam, r)) << ',';
        }
        const std::string g6 = emit_graph6(g);
        auto& members = groups[key.str()];
        if (std::find(members.begin(), members.end(), g6) == members.end())
            members.push_back(g6);
    });

    json matches = json::array();
    int found = 0;
    for (const auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        ++found;
        switch (fmt) {
            case Format::text: {
                std::cout << "match:";
                for (const auto& g6 : members) std::cout << ' ' << g6;
                std::cout << '\n';
                break;
            }
            case Format::csv:
                for (const auto& g6 : members) {
                    std::cout << found << ',';
                    csv_escape(std::cout, g6);
                    std::cout << '\n';
                }
                break;
            case Format::jsonf:
                matches.push_back({{"graphs", members}});
                break;
        }
    }
    if (fmt == Format::text && found == 0) std::cout << "no matches\n";
    if (fmt == Format::jsonf)
        std::cout << json{{"command", "search"},
                          {"matrix", a.matrix},
                          {"matches", matches}}
                         .dump(2)
                  << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{
        "exact immanants and immanantal polynomials of beta*D(G) + "
        "gamma*A(G)"};
    app.require_subcommand(1);

    PolyArgs poly_args;
    auto* poly_cmd = app.add_subcommand(
        "poly", "immanantal polynomial coefficients c_0..c_n");
    add_graph_options(poly_cmd, poly_args.src);
    poly_cmd->add_option("--matrix", poly_args.matrix,
                         "D, A, L, Q, aalpha:p/q, or lincomb:b,g");
    poly_cmd->add_option("--lambda", poly_args.shapes,
                         "partition: '3,2,1', 'hook:K', 'hooks', or 'all'");
    poly_cmd->add_option("--format", poly_args.format, "text, csv, or json");

    CoeffArgs coeff_args;
    auto* coeff_cmd =
        app.add_subcommand("coeff", "one coefficient c_{lambda,r}");
    add_graph_options(coeff_cmd, coeff_args.src);
    coeff_cmd->add_option("--matrix", coeff_args.matrix,
                          "D, A, L, Q, aalpha:p/q, or lincomb:b,g");
    coeff_cmd->add_option("--lambda", coeff_args.shape,
                          "partition: '3,2,1' or 'hook:K'")
        ->required();
    coeff_cmd->add_option("--r", coeff_args.r, "coefficient index")
        ->required();
    coeff_cmd->add_option(
        "--method", coeff_args.method,
        "subset (default), closed (hook shapes), or orientations");
    coeff_cmd->add_option("--format", coeff_args.format,
                          "text, csv, or json");

    CharArgs char_args;
    auto* char_cmd = app.add_subcommand(
        "char", "symmetric group character values chi_lambda(mu)");
    char_cmd->add_option("--n", char_args.n, "symmetric group degree")
        ->required();
    char_cmd->add_option("--lambda", char_args.lambda,
                         "shape (all shapes when omitted)");
    char_cmd->add_option("--mu", char_args.mu,
                         "class (all classes when omitted)");
    char_cmd->add_option("--format", char_args.format, "text, csv, or json");

    CensusArgs census_args;
    auto* census_cmd = app.add_subcommand(
        "census", "orientation census by cycle type over r-subsets");
    add_graph_options(census_cmd, census_args.src);
    census_cmd->add_option("--r", census_args.r,
                           "subset size (all sizes when omitted)");
    census_cmd->add_option("--format", census_args.format,
                           "text, csv, or json");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", verify_args.suite,
                           "suite name or 'all' (see --list)");
    verify_cmd->add_option("--max-n", verify_args.max_n,
                           "cap the sweep's graph order");
    verify_cmd->add_option("--beta", verify_args.beta,
                           "replace the suite's (beta, gamma) sweep");
    verify_cmd->add_option("--gamma", verify_args.gamma,
                           "replace the suite's (beta, gamma) sweep");
    verify_cmd->add_flag("--verbose", verify_args.verbose,
                         "print passing assertions too");
    verify_cmd->add_flag("--list", verify_args.list, "list suite names");
    verify_cmd->add_option("--format", verify_args.format,
                           "text, csv, or json");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand(
        "search",
        "group input graphs with identical immanantal polynomials (input "
        "lines are taken as pairwise non-isomorphic)");
    add_graph_options(search_cmd, search_args.src);
    search_cmd->add_option("--matrix", search_args.matrix,
                           "D, A, L, Q, aalpha:p/q, or lincomb:b,g");
    search_cmd->add_option("--lambda", search_args.shapes,
                           "shapes to compare: '3,2,1', 'hook:K', 'hooks', "
                           "or 'all'");
    search_cmd->add_option("--format", search_args.format,
                           "text, csv, or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*poly_cmd) return cmd_poly(poly_args);
        if (*coeff_cmd) return cmd_coeff(coeff_args);
        if (*char_cmd) return cmd_char(char_args);
        if (*census_cmd) return cmd_census(census_args);
        if (*verify_cmd) return cmd_verify(verify_args);
        if (*search_cmd) return cmd_search(search_args);
    } catch (const tractability_error& e) {
        std::cerr << "tractability: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace immpoly
