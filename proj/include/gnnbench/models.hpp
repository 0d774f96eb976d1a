#pragma once

// Random-weight forward passes for message-passing models of the form
// H' = relu(sum_s C_s H W_s + b), plus readout to a fixed-length embedding.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gnnbench/graph.hpp"
#include "gnnbench/matrix.hpp"
#include "gnnbench/spectral.hpp"

namespace gnnbench::models {

enum class ModelKind { mlp, gcn, graphsage, gin, gat, chebnet, gnnml1, gnnml3 };
enum class Readout { sum, max, sum_max };

inline constexpr std::array kAllModels{ModelKind::mlp,  ModelKind::gcn,     ModelKind::graphsage, ModelKind::gin,
                                       ModelKind::gat,  ModelKind::chebnet, ModelKind::gnnml1,    ModelKind::gnnml3};

std::string_view model_name(ModelKind k);
ModelKind parse_model(std::string_view name);
std::string_view readout_name(Readout r);
Readout parse_readout(std::string_view name);

struct ModelSpec {
    ModelKind kind = ModelKind::gin;
    unsigned layers = 3;
    /// Output width of each layer. GAT splits it across heads; GNNML3 layers
    /// emit 2 * width (convolution part concatenated with the product part).
    std::size_t width = 64;
    unsigned gat_heads = 3;
    double gat_slope = 0.2;
    unsigned cheb_k = 3;
    double cheb_shift = 0.0;  // Chebnet on L + shift * I
    double gin_eps = 0.1;
    spectral::SupportSpec supports{};
    Readout readout = Readout::sum;
    std::size_t out_dim = 10;
    bool biases = true;
};

/// Widths giving roughly 30K parameters on one input feature.
ModelSpec default_spec(ModelKind k);
std::size_t parameter_count(const ModelSpec& spec, std::size_t in_dim = 1);
/// Throws std::invalid_argument on inconsistent settings.
void validate(const ModelSpec& spec);

struct Linear {
    Matrix w;  // in x out
    Matrix b;  // 1 x out, or empty
    Matrix apply(const Matrix& x) const;
};

struct LayerWeights {
    /// One matrix per support (GNNML1: the four terms; GAT: one per head).
    std::vector<Matrix> w;
    Matrix bias;  // 1 x out, or empty
    /// GAT attention vectors, one (2 * head width) x 1 column per head.
    std::vector<Matrix> att;
    /// GIN: [post-convolution dense layer]. GNNML3: [mlp1, mlp2, mlp3, mlp4, mlp5, mlp6].
    std::vector<Linear> aux;
};

struct WeightSet {
    std::uint64_t seed = 0;
    std::vector<LayerWeights> layers;
    Matrix readout;  // readout width x out_dim
};

/// Uniform init with half-width sqrt(6 / (fan_in + fan_out)); biases uniform
/// with half-width 1 / sqrt(fan_in). Bit-exact for a given seed.
WeightSet make_weights(const ModelSpec& spec, std::uint64_t seed, std::size_t in_dim = 1);

/// Seed-independent inputs to the forward pass.
struct PreparedGraph {
    std::size_t n = 0;
    Matrix x;                              // node features
    Matrix adjacency;
    std::vector<Matrix> supports;          // static supports
    std::optional<spectral::SupportSet> support_set;  // GNNML3
};

/// GCN (D+I)^{-1/2}(A+I)(D+I)^{-1/2}; GraphSage [I, D^{-1}A]; GIN A+(1+eps)I;
/// Chebnet Chebyshev terms of 2L/lambda_max - I; MLP [I]. Empty for GAT and GNNML kinds.
std::vector<Matrix> static_supports(const ModelSpec& spec, const Graph& g);
std::vector<Matrix> static_supports(ModelKind kind, const Graph& g);

/// Node features default to the degree column.
PreparedGraph prepare(const ModelSpec& spec, const Graph& g);

/// Attention support over the self-loop-augmented neighbourhood, rows normalized.
Matrix gat_support(const Matrix& adjacency, const Matrix& h, const Matrix& w, const Matrix& a, double slope = 0.2);

/// GNNML3 learned supports for one layer: m x S edge values.
Matrix learned_support_values(const spectral::SupportSet& set, const LayerWeights& lw);

Matrix forward(const ModelSpec& spec, const WeightSet& weights, const PreparedGraph& pg);
Matrix forward(const ModelSpec& spec, const WeightSet& weights, const Graph& g);

using Embedding = std::vector<double>;

Embedding readout(const ModelSpec& spec, const WeightSet& weights, const Matrix& h);
Embedding embed(const ModelSpec& spec, const WeightSet& weights, const PreparedGraph& pg);
Embedding embed(const ModelSpec& spec, const Graph& g, std::uint64_t seed);

double manhattan(std::span<const double> a, std::span<const double> b);

/// Run i of an experiment uses seed base ^ splitmix64(i).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t run_seed(std::uint64_t base, std::uint64_t run);

/// True iff the embeddings differ by more than threshold (Manhattan) for some seed.
bool pair_distinguished(const ModelSpec& spec, const Graph& g, const Graph& h, std::span<const std::uint64_t> seeds,
                        double threshold);

}  // namespace gnnbench::models
