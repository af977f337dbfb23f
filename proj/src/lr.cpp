#include "immpoly/lr.hpp"

#include <stdexcept>

namespace immpoly {

namespace {

struct Cell {
    int row, col;
};

// Backtracking over the cells of lambda/mu in reverse reading order (each
// row right to left, rows top to bottom).  In that order the right
// neighbor and the cell above are already filled, so semistandardness is
// checked locally, and the prefix of the reverse reading word grows one
// letter at a time, so the lattice condition is checked incrementally.
struct LrCounter {
    std::vector<Cell> cells;
    std::vector<int> nu;          // content bound per letter (1-based)
    std::vector<int> count;       // letters used so far
    std::vector<std::vector<int>> fill;  // fill[row][col], 0 = empty
    long long found = 0;

    void rec(size_t idx)
    {
        if (idx == cells.size()) {
            ++found;
            return;
        }
        const auto [r, c] = cells[idx];
        const int right = (c + 1 < static_cast<int>(fill[r].size()))
                              ? fill[r][c + 1]
                              : 0;
        const int above = (r > 0 && c < static_cast<int>(fill[r - 1].size()))
                              ? fill[r - 1][c]
                              : 0;
        const int max_letter = static_cast<int>(nu.size());
        for (int e = above + 1; e <= max_letter; ++e) {
            if (right != 0 && e > right) continue;
            if (count[e] + 1 > nu[e - 1]) continue;
            if (e > 1 && count[e] + 1 > count[e - 1]) continue;  // lattice
            count[e]++;
            fill[r][c] = e;
            rec(idx + 1);
            fill[r][c] = 0;
            count[e]--;
        }
    }
};

}  // namespace

Integer littlewood_richardson(const Partition& lam, const Partition& mu,
                              const Partition& nu)
{
    if (mu.weight() + nu.weight() != lam.weight())
        throw std::invalid_argument(
            "littlewood_richardson: weight(mu) + weight(nu) != weight(lambda)");

    // mu must fit inside lambda.
    if (mu.num_parts() > lam.num_parts()) return 0;
    for (int i = 0; i < mu.num_parts(); ++i)
        if (mu.part(i) > lam.part(i)) return 0;

    if (nu.weight() == 0) return 1;  // lambda == mu, empty skew shape

    LrCounter ctr;
    ctr.nu = nu.parts();
    ctr.count.assign(nu.num_parts() + 1, 0);
    ctr.fill.resize(lam.num_parts());
    for (int r = 0; r < lam.num_parts(); ++r) {
        ctr.fill[r].assign(lam.part(r), 0);
        const int lo = (r < mu.num_parts()) ? mu.part(r) : 0;
        for (int c = lam.part(r) - 1; c >= lo; --c)
            ctr.cells.push_back({r, c});
    }
    ctr.rec(0);
    return Integer(static_cast<long>(ctr.found));
}

}  // namespace immpoly
