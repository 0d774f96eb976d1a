#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gnnbench/matrix.hpp"

namespace gnnbench {

/// Simple undirected graph stored as a dense symmetric 0/1 adjacency with zero diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

    /// Validates symmetry, zero diagonal and 0/1 entries.
    static Graph from_adjacency(const Matrix& adjacency);

    std::size_t n() const { return n_; }
    bool has_edge(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    Matrix adjacency() const;

    const std::optional<Matrix>& node_features() const { return features_; }
    void set_node_features(Matrix features);

    /// Relabels nodes: node v of this graph becomes node perm[v].
    Graph permuted(std::span<const std::size_t> perm) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::optional<Matrix> features_;
};

enum class LaplacianKind { combinatorial, normalized };

/// Column vector A * 1.
Matrix degree_vector(const Graph& g);
/// D - A, or I - D^{-1/2} A D^{-1/2} with D^{-1/2} entries 0 at isolated nodes.
Matrix laplacian(const Graph& g, LaplacianKind kind);

}  // namespace gnnbench
