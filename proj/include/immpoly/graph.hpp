#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace immpoly {

// Simple undirected graph on vertices 0..n-1.  Edges are stored sorted with
// u < v; duplicates and loops are rejected.
class Graph {
public:
    explicit Graph(int n, std::vector<std::pair<int, int>> edges = {});

    // Families use a fixed labeling so emitted graph6 strings are stable:
    //   path:      0-1-...-(n-1)
    //   star:      center is vertex n-1
    //   cycle:     0-1-...-(n-1)-0, needs n >= 3
    //   complete:  all pairs
    //   complete bipartite: blocks {0..p-1} and {p..p+q-1}
    static Graph path(int n);
    static Graph star(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph complete_bipartite(int p, int q);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return degrees_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    Graph without_edge(int u, int v) const;  // throws if absent

    bool connected() const;
    bool is_tree() const { return connected() && m() == n_ - 1; }
    // Two-coloring when bipartite (color per vertex, 0/1), nullopt otherwise.
    std::optional<std::vector<int>> bipartition() const;
    // Degree when regular, nullopt otherwise.
    std::optional<int> regular_degree() const;

    bool operator==(const Graph& o) const
    {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> adj_;
};

// "path:5", "star:4", "cycle:6", "complete:5", "kbip:3,4".
// Throws std::invalid_argument on malformed specs or invalid sizes.
Graph parse_family_spec(const std::string& spec);

}  // namespace immpoly
