#include "immpoly/zero_block.hpp"

#include <limits>
#include <queue>

namespace immpoly {

namespace {

// Hopcroft-Karp maximum matching between rows and columns joined where the
// matrix entry is nonzero.
struct HopcroftKarp {
    int n;
    const std::vector<std::vector<int>>& adj;  // rows -> columns
    std::vector<int> match_row, match_col, dist;
    static constexpr int kInf = std::numeric_limits<int>::max();

    HopcroftKarp(int n_, const std::vector<std::vector<int>>& adj_)
        : n(n_), adj(adj_), match_row(n_, -1), match_col(n_, -1), dist(n_, 0)
    {
    }

    bool bfs()
    {
        std::queue<int> q;
        for (int r = 0; r < n; ++r) {
            if (match_row[r] == -1) {
                dist[r] = 0;
                q.push(r);
            } else {
                dist[r] = kInf;
            }
        }
        bool reachable_free_col = false;
        while (!q.empty()) {
            int r = q.front();
            q.pop();
            for (int c : adj[r]) {
                int r2 = match_col[c];
                if (r2 == -1) {
                    reachable_free_col = true;
                } else if (dist[r2] == kInf) {
                    dist[r2] = dist[r] + 1;
                    q.push(r2);
                }
            }
        }
        return reachable_free_col;
    }

    bool dfs(int r)
    {
        for (int c : adj[r]) {
            int r2 = match_col[c];
            if (r2 == -1 || (dist[r2] == dist[r] + 1 && dfs(r2))) {
                match_row[r] = c;
                match_col[c] = r;
                return true;
            }
        }
        dist[r] = kInf;
        return false;
    }

    int run()
    {
        int matched = 0;
        while (bfs())
            for (int r = 0; r < n; ++r)
                if (match_row[r] == -1 && dfs(r)) ++matched;
        return matched;
    }
};

}  // namespace

std::optional<ZeroBlockWitness> vanishes_by_zero_block(const ExactMatrix& m)
{
    const int n = m.order();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sgn(m.at(i, j)) != 0) adj[i].push_back(j);

    HopcroftKarp hk(n, adj);
    if (hk.run() == n) return std::nullopt;

    // Koenig: alternating reachability from unmatched rows.  Visited rows
    // and unvisited columns form an independent set whose complement is a
    // minimum vertex cover; all entries in that block are zero.
    std::vector<char> row_vis(n, 0), col_vis(n, 0);
    std::queue<int> q;
    for (int r = 0; r < n; ++r)
        if (hk.match_row[r] == -1) {
            row_vis[r] = 1;
            q.push(r);
        }
    while (!q.empty()) {
        int r = q.front();
        q.pop();
        for (int c : adj[r]) {
            if (col_vis[c]) continue;
            col_vis[c] = 1;
            int r2 = hk.match_col[c];
            if (r2 != -1 && !row_vis[r2]) {
                row_vis[r2] = 1;
                q.push(r2);
            }
        }
    }

    ZeroBlockWitness w;
    for (int r = 0; r < n; ++r)
        if (row_vis[r]) w.rows.push_back(r);
    for (int c = 0; c < n; ++c)
        if (!col_vis[c]) w.cols.push_back(c);

    // |rows| + |cols| = 2n - cover >= n + 1; trim to exactly n + 1 keeping
    // both sides nonempty.
    while (static_cast<int>(w.rows.size() + w.cols.size()) > n + 1) {
        if (w.rows.size() >= w.cols.size() && w.rows.size() > 1)
            w.rows.pop_back();
        else
            w.cols.pop_back();
    }
    return w;
}

}  // namespace immpoly
