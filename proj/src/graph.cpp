#include "immpoly/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace immpoly {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n)
{
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);

    degrees_.assign(n_, 0);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        degrees_[u]++;
        degrees_[v]++;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::path(int n)
{
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::star(int n)
{
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, n - 1);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n)
{
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph Graph::complete(int n)
{
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(int p, int q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("complete bipartite needs p, q >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return Graph(p + q, std::move(e));
}

bool Graph::adjacent(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("vertex out of range");
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::without_edge(int u, int v) const
{
    if (u > v) std::swap(u, v);
    auto edges = edges_;
    auto it = std::find(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end()) throw std::invalid_argument("edge not present");
    edges.erase(it);
    return Graph(n_, std::move(edges));
}

bool Graph::connected() const
{
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int visited = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++visited;
                q.push(v);
            }
        }
    }
    return visited == n_;
}

std::optional<std::vector<int>> Graph::bipartition() const
{
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj_[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::optional<int> Graph::regular_degree() const
{
    const int d = degrees_[0];
    for (int v = 1; v < n_; ++v)
        if (degrees_[v] != d) return std::nullopt;
    return d;
}

Graph parse_family_spec(const std::string& spec)
{
    const size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec needs name:args, got " + spec);
    const std::string name = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);

    auto parse_int = [&](const std::string& t) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(t, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad family size in " + spec);
        }
        if (pos != t.size())
            throw std::invalid_argument("bad family size in " + spec);
        return v;
    };

    if (name == "kbip") {
        const size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("kbip needs two sizes: " + spec);
        return Graph::complete_bipartite(parse_int(args.substr(0, comma)),
                                         parse_int(args.substr(comma + 1)));
    }
    const int n = parse_int(args);
    if (name == "path") return Graph::path(n);
    if (name == "star") return Graph::star(n);
    if (name == "cycle") return Graph::cycle(n);
    if (name == "complete") return Graph::complete(n);
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace immpoly
