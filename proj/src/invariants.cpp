#include "immpoly/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace immpoly {

Integer elementary_symmetric(const std::vector<int>& values, int r)
{
    if (r < 0) throw std::invalid_argument("elementary_symmetric needs r >= 0");
    if (r > static_cast<int>(values.size())) return 0;
    // DP over prod (1 + v x), keeping coefficients up to x^r.
    std::vector<Integer> e(r + 1, 0);
    e[0] = 1;
    int seen = 0;
    for (int v : values) {
        ++seen;
        for (int j = std::min(r, seen); j >= 1; --j) e[j] += Integer(v) * e[j - 1];
    }
    return e[r];
}

Integer graph_degree_elementary(const Graph& g, int r)
{
    return elementary_symmetric(g.degrees(), r);
}

std::vector<std::vector<int>> cycles_of_length(const Graph& g, int l)
{
    if (l < 3) throw std::invalid_argument("cycles need length >= 3");
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);

    // Root each cycle at its smallest vertex s and walk paths through
    // vertices > s; requiring path[1] < path.back() picks one of the two
    // traversal directions, so each cycle is produced exactly once.
    auto dfs = [&](auto&& self, int s, int v) -> void {
        if (static_cast<int>(path.size()) == l) {
            if (g.adjacent(v, s) && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (int w : g.neighbors(v)) {
            if (w <= s || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, s, w);
            path.pop_back();
            used[w] = 0;
        }
    };

    for (int s = 0; s < g.n(); ++s) {
        path.assign(1, s);
        used.assign(g.n(), 0);
        used[s] = 1;
        dfs(dfs, s, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::pair<int, int>>> matchings_of_size(const Graph& g,
                                                                int l)
{
    if (l != 1 && l != 2)
        throw std::invalid_argument("matchings_of_size supports l in {1,2}");
    std::vector<std::vector<std::pair<int, int>>> out;
    const auto& edges = g.edges();
    if (l == 1) {
        for (const auto& e : edges) out.push_back({e});
        return out;
    }
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a != c && a != d && b != c && b != d)
                out.push_back({edges[i], edges[j]});
        }
    return out;  // edge list is sorted, so pairs are already lex ordered
}

namespace {

Integer reduced_elementary(const Graph& g, const std::vector<char>& removed,
                           int r)
{
    std::vector<int> degs;
    degs.reserve(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) degs.push_back(g.degree(v));
    return elementary_symmetric(degs, r);
}

}  // namespace

Integer census_C(const Graph& g, int r, int l)
{
    if (l < 3 || l > 5)
        throw std::invalid_argument("census_C supports l in {3,4,5}");
    if (r < l) throw std::invalid_argument("census_C needs r >= l");
    Integer acc = 0;
    std::vector<char> removed(g.n(), 0);
    for (const auto& cyc : cycles_of_length(g, l)) {
        for (int v : cyc) removed[v] = 1;
        acc += reduced_elementary(g, removed, r - l);
        for (int v : cyc) removed[v] = 0;
    }
    return acc;
}

Integer census_M(const Graph& g, int r, int l)
{
    if (l != 1 && l != 2)
        throw std::invalid_argument("census_M supports l in {1,2}");
    if (r < 2 * l) throw std::invalid_argument("census_M needs r >= 2l");
    Integer acc = 0;
    std::vector<char> removed(g.n(), 0);
    for (const auto& match : matchings_of_size(g, l)) {
        for (const auto& [u, v] : match) removed[u] = removed[v] = 1;
        acc += reduced_elementary(g, removed, r - 2 * l);
        for (const auto& [u, v] : match) removed[u] = removed[v] = 0;
    }
    return acc;
}

std::vector<int> triangle_degree_sums(const Graph& g)
{
    std::vector<int> out;
    for (const auto& tri : cycles_of_length(g, 3))
        out.push_back(g.degree(tri[0]) + g.degree(tri[1]) + g.degree(tri[2]));
    return out;
}

int star_degree(const Graph& g)
{
    int total = 0;
    for (int c = 0; c < g.n(); ++c) {
        int pendants = 0;
        for (int v : g.neighbors(c))
            if (g.degree(v) == 1) ++pendants;
        if (pendants >= 1) total += pendants - 1;
    }
    return total;
}

InvariantBundle InvariantBundle::compute(const Graph& g)
{
    InvariantBundle b;
    b.n = g.n();
    b.m = g.m();
    b.F.resize(b.n + 1);
    for (int r = 0; r <= b.n; ++r) b.F[r] = graph_degree_elementary(g, r);
    b.cycles3 = cycles_of_length(g, 3);
    if (b.n >= 4) b.cycles4 = cycles_of_length(g, 4);
    if (b.n >= 5) b.cycles5 = cycles_of_length(g, 5);
    b.matchings1 = matchings_of_size(g, 1);
    b.matchings2 = matchings_of_size(g, 2);
    b.tri_degree_sums = triangle_degree_sums(g);
    b.star_deg = star_degree(g);
    return b;
}

}  // namespace immpoly
