#include "gnnbench/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gnnbench::spectral {

namespace {

double off_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

std::vector<std::pair<std::size_t, std::size_t>> sweep_pairs(std::size_t n, const EigOptions& opts) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) pairs.emplace_back(p, q);
    if (opts.order == SweepOrder::reversed) {
        std::reverse(pairs.begin(), pairs.end());
    } else if (opts.order == SweepOrder::shuffled) {
        std::mt19937_64 rng(opts.shuffle_seed);
        std::shuffle(pairs.begin(), pairs.end(), rng);
    }
    return pairs;
}

}  // namespace

SpectralBasis eig_sym(const Matrix& b, const EigOptions& opts) {
    if (!b.is_square()) throw std::invalid_argument("eig_sym: matrix must be square");
    if (!b.is_symmetric(1e-12)) throw std::invalid_argument("eig_sym: matrix must be symmetric");
    const std::size_t n = b.rows();
    Matrix a = b;
    Matrix v = Matrix::identity(n);

    double frob = 0.0;
    for (double x : b.data()) frob += x * x;
    const double target = opts.tol * std::max(1.0, std::sqrt(frob));
    const auto pairs = sweep_pairs(n, opts);

    for (unsigned sweep = 0; sweep < opts.max_sweeps && off_norm(a) > target; ++sweep) {
        for (auto [p, q] : pairs) {
            const double apq = a(p, q);
            if (apq == 0.0) continue;
            const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
            const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            for (std::size_t k = 0; k < n; ++k) {
                const double akp = a(k, p);
                const double akq = a(k, q);
                a(k, p) = c * akp - s * akq;
                a(k, q) = s * akp + c * akq;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const double apk = a(p, k);
                const double aqk = a(q, k);
                a(p, k) = c * apk - s * aqk;
                a(q, k) = s * apk + c * aqk;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const double vkp = v(k, p);
                const double vkq = v(k, q);
                v(k, p) = c * vkp - s * vkq;
                v(k, q) = s * vkp + c * vkq;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
    SpectralBasis out{Matrix(n, n), std::vector<double>(n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.lambda[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < n; ++r) out.u(r, c) = v(r, order[c]);
    }
    return out;
}

std::vector<double> frequency_response(std::span<const double> lambda, double b, double center) {
    if (!(b > 0.0)) throw std::invalid_argument("bandwidth must be positive");
    std::vector<double> out(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const double d = lambda[i] - center;
        out[i] = std::exp(-b * d * d);
    }
    return out;
}

BandCenters band_centers(double lambda_min, double lambda_max, std::size_t s, bool include_allpass) {
    if (s == 0) throw std::invalid_argument("support count must be at least 1");
    BandCenters out;
    out.allpass = include_allpass;
    const std::size_t bands = include_allpass ? s - 1 : s;
    if (lambda_max - lambda_min <= 0.0) {
        if (bands > 0) out.centers.push_back(lambda_min);
        return out;
    }
    if (bands == 0) return out;
    // The grid denominator is S-1 in both modes; without the all-pass support the last point lands on lambda_max.
    const double denom = s > 1 ? static_cast<double>(s - 1) : 1.0;
    for (std::size_t i = 0; i < bands; ++i)
        out.centers.push_back(lambda_min + static_cast<double>(i) / denom * (lambda_max - lambda_min));
    return out;
}

Matrix basis_matrix(const Graph& g, BasisKind kind) {
    return kind == BasisKind::adjacency ? g.adjacency() : laplacian(g, LaplacianKind::normalized);
}

Matrix mask_matrix(const Graph& g, MaskKind kind) {
    if (kind == MaskKind::full) return Matrix::ones(g.n(), g.n());
    return g.adjacency() + Matrix::identity(g.n());
}

std::vector<Matrix> dense_supports(const Graph& g, const SupportSpec& spec, const EigOptions& opts) {
    if (spec.count == 0) throw std::invalid_argument("support count must be at least 1");
    if (!(spec.b > 0.0)) throw std::invalid_argument("bandwidth must be positive");
    const std::size_t n = g.n();
    const SpectralBasis basis = eig_sym(basis_matrix(g, spec.basis), opts);
    BandCenters bc = band_centers(basis.lambda.front(), basis.lambda.back(), spec.count, spec.include_allpass);
    while (bc.count() < spec.count) bc.centers.push_back(bc.centers.empty() ? basis.lambda.front() : bc.centers.back());

    std::vector<Matrix> out;
    out.reserve(spec.count);
    if (bc.allpass) out.push_back(Matrix::identity(n));
    for (double f : bc.centers) {
        const auto phi = frequency_response(basis.lambda, spec.b, f);
        Matrix c(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < n; ++k) acc += basis.u(i, k) * phi[k] * basis.u(j, k);
                c(i, j) = acc;
                c(j, i) = acc;
            }
        out.push_back(std::move(c));
    }
    return out;
}

SupportSet build_supports(const Graph& g, const SupportSpec& spec, const EigOptions& opts) {
    const auto dense = dense_supports(g, spec, opts);
    const Matrix mask = mask_matrix(g, spec.mask);
    SupportSet out;
    out.n = g.n();
    out.mask_index = mask_positions(mask);
    out.features = Matrix(out.mask_index.size(), dense.size());
    for (std::size_t s = 0; s < dense.size(); ++s)
        for (std::size_t e = 0; e < out.mask_index.size(); ++e) {
            const auto [r, c] = out.mask_index[e];
            out.features(e, s) = dense[s](r, c);
        }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> mask_positions(const Matrix& mask) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t r = 0; r < mask.rows(); ++r)
        for (std::size_t c = 0; c < mask.cols(); ++c)
            if (mask(r, c) != 0.0) pos.emplace_back(r, c);
    return pos;
}

std::vector<double> sparse2vec(const Matrix& mask, const Matrix& dense) {
    if (mask.rows() != dense.rows() || mask.cols() != dense.cols())
        throw std::invalid_argument("sparse2vec: mask and matrix shapes differ");
    std::vector<double> out;
    for (std::size_t r = 0; r < mask.rows(); ++r)
        for (std::size_t c = 0; c < mask.cols(); ++c)
            if (mask(r, c) != 0.0) out.push_back(dense(r, c));
    return out;
}

Matrix vec2sparse(std::span<const double> v, const Matrix& mask) {
    const auto pos = mask_positions(mask);
    if (pos.size() != v.size()) throw std::invalid_argument("vec2sparse: vector length does not match mask");
    Matrix out(mask.rows(), mask.cols());
    for (std::size_t e = 0; e < pos.size(); ++e) out(pos[e].first, pos[e].second) = v[e];
    return out;
}

Matrix vec2sparse(std::span<const double> v, std::span<const std::pair<std::size_t, std::size_t>> positions,
                  std::size_t n) {
    if (positions.size() != v.size()) throw std::invalid_argument("vec2sparse: vector length does not match mask");
    Matrix out(n, n);
    for (std::size_t e = 0; e < positions.size(); ++e) out(positions[e].first, positions[e].second) = v[e];
    return out;
}

std::vector<double> maclaurin_coefficients(double b, double center, unsigned k) {
    // exp(-b(x-f)^2) = exp(-b f^2) * exp(h(x)), h = 2bf x - b x^2, and E' = h' E gives
    // (i+1) e_{i+1} = 2bf e_i - 2b e_{i-1}.
    std::vector<double> e(k + 1, 0.0);
    e[0] = 1.0;
    if (k >= 1) e[1] = 2.0 * b * center;
    for (unsigned i = 1; i < k; ++i) e[i + 1] = (2.0 * b * center * e[i] - 2.0 * b * e[i - 1]) / (i + 1);
    const double scale = std::exp(-b * center * center);
    for (double& x : e) x *= scale;
    return e;
}

double maclaurin_residual(const Matrix& support, const Matrix& basis, double b, double center, unsigned k) {
    if (!basis.is_square() || support.rows() != basis.rows() || support.cols() != basis.cols())
        throw std::invalid_argument("maclaurin_residual: shape mismatch");
    const auto alpha = maclaurin_coefficients(b, center, k);
    Matrix power_i = Matrix::identity(basis.rows());
    Matrix series(basis.rows(), basis.cols());
    for (unsigned i = 0; i <= k; ++i) {
        if (i > 0) power_i = matmul(power_i, basis);
        series += power_i * alpha[i];
    }
    return max_abs_diff(support, series);
}

double lambda_max(const Graph& g) {
    return eig_sym(laplacian(g, LaplacianKind::normalized)).lambda.back();
}

}  // namespace gnnbench::spectral
