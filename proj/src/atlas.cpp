#include "immpoly/atlas.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "immpoly/graph6.hpp"

#ifndef IMMPOLY_DEFAULT_DATA_DIR
#define IMMPOLY_DEFAULT_DATA_DIR "data"
#endif

namespace immpoly {

std::string atlas_data_dir() {
    if (const char* env = std::getenv("IMMPOLY_DATA_DIR"); env && *env)
        return env;
    return IMMPOLY_DEFAULT_DATA_DIR;
}

void for_each_graph6(const std::string& path,
                     const std::function<void(const Graph&)>& fn) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        fn(parse_graph6(line));
    }
}

namespace {

std::vector<Graph> load_atlas(const std::string& name) {
    std::vector<Graph> out;
    for_each_graph6(atlas_data_dir() + "/graphs/" + name,
                    [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace

std::vector<Graph> atlas_all_graphs(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("atlas_all_graphs: n must be in [1, 7]");
    std::ostringstream name;
    name << "all_n" << n << ".g6";
    return load_atlas(name.str());
}

std::vector<Graph> atlas_connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : atlas_all_graphs(n))
        if (g.connected()) out.push_back(g);
    return out;
}

std::vector<Graph> atlas_trees(int n) {
    if (n == 8) return load_atlas("trees_n8.g6");
    std::vector<Graph> out;
    for (const Graph& g : atlas_all_graphs(n))
        if (g.is_tree()) out.push_back(g);
    return out;
}

std::vector<Graph> atlas_cubic_graphs(int n) {
    if (n != 6 && n != 8)
        throw std::invalid_argument("atlas_cubic_graphs: n must be 6 or 8");
    std::ostringstream name;
    name << "cubic_n" << n << ".g6";
    return load_atlas(name.str());
}

}  // namespace immpoly
