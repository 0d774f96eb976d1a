#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gnnbench/graph.hpp"
#include "gnnbench/matrix.hpp"

namespace gnnbench::spectral {

struct SpectralBasis {
    Matrix u;                    // columns are orthonormal eigenvectors
    std::vector<double> lambda;  // ascending
};

enum class SweepOrder { row_major, reversed, shuffled };

struct EigOptions {
    SweepOrder order = SweepOrder::row_major;
    std::uint64_t shuffle_seed = 0;
    double tol = 1e-12;  // off-diagonal Frobenius norm, relative to max(1, ||B||_F)
    unsigned max_sweeps = 100;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
SpectralBasis eig_sym(const Matrix& b, const EigOptions& opts = {});

std::vector<double> frequency_response(std::span<const double> lambda, double b, double center);

struct BandCenters {
    std::vector<double> centers;
    bool allpass = false;
    /// Total support count: centers plus the all-pass support if present.
    std::size_t count() const { return centers.size() + (allpass ? 1 : 0); }
};

/// With the all-pass support, S-1 centers lambda_min + (s-1)/(S-1) * range for
/// s = 1..S-1; without it, the inclusive S-point grid. A degenerate range
/// yields the single center lambda_min.
BandCenters band_centers(double lambda_min, double lambda_max, std::size_t s, bool include_allpass);

enum class BasisKind { normalized_laplacian, adjacency };
enum class MaskKind { adjacency_plus_identity, full };

struct SupportSpec {
    BasisKind basis = BasisKind::normalized_laplacian;
    double b = 5.0;
    std::size_t count = 5;
    bool include_allpass = true;
    MaskKind mask = MaskKind::adjacency_plus_identity;
};

struct SupportSet {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> mask_index;  // row-major
    Matrix features;                                              // m x S
};

Matrix basis_matrix(const Graph& g, BasisKind kind);
Matrix mask_matrix(const Graph& g, MaskKind kind);

/// Dense supports U diag(phi_s(lambda)) U^T, all-pass first. When a degenerate
/// spectrum produces fewer centers than requested, the last center is repeated
/// so that every graph yields exactly spec.count supports.
std::vector<Matrix> dense_supports(const Graph& g, const SupportSpec& spec, const EigOptions& opts = {});
SupportSet build_supports(const Graph& g, const SupportSpec& spec, const EigOptions& opts = {});

std::vector<std::pair<std::size_t, std::size_t>> mask_positions(const Matrix& mask);
std::vector<double> sparse2vec(const Matrix& mask, const Matrix& dense);
Matrix vec2sparse(std::span<const double> v, const Matrix& mask);
/// Scatter into an n x n matrix from precomputed positions.
Matrix vec2sparse(std::span<const double> v, std::span<const std::pair<std::size_t, std::size_t>> positions,
                  std::size_t n);

/// Maclaurin coefficients alpha_0..alpha_k of exp(-b (x - center)^2).
std::vector<double> maclaurin_coefficients(double b, double center, unsigned k);
/// max |support - sum_{i<=k} alpha_i basis^i|.
double maclaurin_residual(const Matrix& support, const Matrix& basis, double b, double center, unsigned k);

/// Largest normalized-Laplacian eigenvalue.
double lambda_max(const Graph& g);

}  // namespace gnnbench::spectral
