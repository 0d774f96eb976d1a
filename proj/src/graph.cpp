#include "gnnbench/graph.hpp"

#include <cmath>

namespace gnnbench {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

Graph::Graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::from_adjacency(const Matrix& adjacency) {
    if (!adjacency.is_square()) throw std::invalid_argument("adjacency must be square");
    Graph g(adjacency.rows());
    for (std::size_t i = 0; i < g.n_; ++i) {
        if (adjacency(i, i) != 0.0) throw std::invalid_argument("adjacency has a nonzero diagonal entry");
        for (std::size_t j = 0; j < g.n_; ++j) {
            const double a = adjacency(i, j);
            if (a != 0.0 && a != 1.0) throw std::invalid_argument("adjacency entries must be 0 or 1");
            if (a != adjacency(j, i)) throw std::invalid_argument("adjacency is not symmetric");
            g.adj_[i * g.n_ + j] = a != 0.0 ? 1 : 0;
        }
    }
    return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    adj_[u * n_ + v] = 0;
    adj_[v * n_ + u] = 0;
}

std::size_t Graph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += adj_[v * n_ + u];
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t m = 0;
    for (std::uint8_t a : adj_) m += a;
    return m / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u)
        if (adj_[v * n_ + u]) out.push_back(u);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Matrix Graph::adjacency() const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < adj_.size(); ++i) m.data()[i] = adj_[i];
    return m;
}

void Graph::set_node_features(Matrix features) {
    if (features.rows() != n_) throw std::invalid_argument("node feature rows must equal node count");
    features_ = std::move(features);
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation length mismatch");
    Graph out(n_);
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v) out.adj_[perm[u] * n_ + perm[v]] = adj_[u * n_ + v];
    if (features_) {
        Matrix f(features_->rows(), features_->cols());
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t c = 0; c < f.cols(); ++c) f(perm[u], c) = (*features_)(u, c);
        out.features_ = std::move(f);
    }
    return out;
}

Matrix degree_vector(const Graph& g) {
    Matrix d(g.n(), 1);
    for (std::size_t v = 0; v < g.n(); ++v) d(v, 0) = static_cast<double>(g.degree(v));
    return d;
}

Matrix laplacian(const Graph& g, LaplacianKind kind) {
    const std::size_t n = g.n();
    Matrix l(n, n);
    if (kind == LaplacianKind::combinatorial) {
        for (std::size_t i = 0; i < n; ++i) {
            l(i, i) = static_cast<double>(g.degree(i));
            for (std::size_t j = 0; j < n; ++j)
                if (g.has_edge(i, j)) l(i, j) = -1.0;
        }
        return l;
    }
    std::vector<double> inv_sqrt(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = g.degree(i);
        if (d > 0) inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    for (std::size_t i = 0; i < n; ++i) {
        l(i, i) = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            if (g.has_edge(i, j)) l(i, j) = -inv_sqrt[i] * inv_sqrt[j];
    }
    return l;
}

}  // namespace gnnbench
