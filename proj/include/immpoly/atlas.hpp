#pragma once

#include <functional>
#include <string>
#include <vector>

#include "immpoly/graph.hpp"

namespace immpoly {

// Directory holding the shipped graph6 atlas files: the IMMPOLY_DATA_DIR
// environment variable when set, else the location configured at build
// time.
std::string atlas_data_dir();

// Streams the graphs of a graph6 file line by line (blank lines, '#'
// comments, and an optional ">>graph6<<" header are skipped) so sweeps over
// large files need not hold them in memory.
void for_each_graph6(const std::string& path,
                     const std::function<void(const Graph&)>& fn);

// Shipped atlases, loaded from atlas_data_dir().
//   all graphs:        n in [1, 7]
//   trees:             n in [1, 8]  (n <= 7 filtered from the full atlas)
//   connected cubic:   n in {6, 8}
std::vector<Graph> atlas_all_graphs(int n);
std::vector<Graph> atlas_connected_graphs(int n);
std::vector<Graph> atlas_trees(int n);
std::vector<Graph> atlas_cubic_graphs(int n);

}  // namespace immpoly
