#pragma once

#include <filesystem>
#include <vector>

#include "gnnbench/dataset.hpp"
#include "gnnbench/graph.hpp"
#include "gnnbench/harness.hpp"

namespace fixtures {

using gnnbench::Graph;

inline std::filesystem::path data_file(const char* name) { return std::filesystem::path(GNNBENCH_DATA_DIR) / name; }

inline const std::vector<Graph>& graph8c() {
    static const auto graphs = gnnbench::load_dataset(data_file("graph8c.g6"), gnnbench::DatasetFormat::graph6);
    return graphs;
}

inline const std::vector<Graph>& sr25() {
    static const auto graphs = gnnbench::load_dataset(data_file("sr25.g6"), gnnbench::DatasetFormat::graph6);
    return graphs;
}

/// The 312 1-WL-equivalent pairs of graph8c.
inline const std::vector<gnnbench::harness::IndexPair>& graph8c_wl1_pairs() {
    static const auto pairs = gnnbench::harness::expand_pairs(gnnbench::harness::wl1_buckets(graph8c()));
    return pairs;
}

inline std::vector<gnnbench::harness::IndexPair> all_pairs(std::size_t n) {
    std::vector<gnnbench::harness::IndexPair> out;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(std::size_t n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

/// Triangle 0-1-2 with pendant node 3 attached to node 2.
inline Graph paw() {
    Graph g = cycle(3);
    Graph out(4, g.edges());
    out.add_edge(2, 3);
    return out;
}

inline Graph two_triangles() {
    Graph g(6);
    for (std::size_t base : {0u, 3u}) {
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base, base + 2);
    }
    return g;
}

}  // namespace fixtures
