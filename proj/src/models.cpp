#include "gnnbench/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace gnnbench::models {

std::string_view model_name(ModelKind k) {
    switch (k) {
        case ModelKind::mlp: return "mlp";
        case ModelKind::gcn: return "gcn";
        case ModelKind::graphsage: return "graphsage";
        case ModelKind::gin: return "gin";
        case ModelKind::gat: return "gat";
        case ModelKind::chebnet: return "chebnet";
        case ModelKind::gnnml1: return "gnnml1";
        case ModelKind::gnnml3: return "gnnml3";
    }
    return "?";
}

ModelKind parse_model(std::string_view name) {
    for (auto k : kAllModels)
        if (model_name(k) == name) return k;
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

std::string_view readout_name(Readout r) {
    switch (r) {
        case Readout::sum: return "sum";
        case Readout::max: return "max";
        case Readout::sum_max: return "sum-max";
    }
    return "?";
}

Readout parse_readout(std::string_view name) {
    for (auto r : {Readout::sum, Readout::max, Readout::sum_max})
        if (readout_name(r) == name) return r;
    throw std::invalid_argument("unknown readout '" + std::string(name) + "'");
}

ModelSpec default_spec(ModelKind k) {
    ModelSpec s;
    s.kind = k;
    switch (k) {
        case ModelKind::mlp:
        case ModelKind::gcn: s.width = 120; break;
        case ModelKind::graphsage: s.width = 85; break;
        case ModelKind::gin: s.width = 76; break;
        case ModelKind::gat: s.width = 117; break;
        case ModelKind::chebnet: s.width = 70; break;
        case ModelKind::gnnml1: s.width = 60; break;
        case ModelKind::gnnml3: s.width = 32; break;
    }
    return s;
}

void validate(const ModelSpec& spec) {
    if (spec.layers == 0) throw std::invalid_argument("model needs at least one layer");
    if (spec.width == 0) throw std::invalid_argument("layer width must be positive");
    if (spec.out_dim == 0) throw std::invalid_argument("embedding size must be positive");
    if (spec.kind == ModelKind::chebnet && spec.cheb_k < 2) throw std::invalid_argument("Chebnet needs k >= 2");
    if (spec.kind == ModelKind::gat && (spec.gat_heads == 0 || spec.width % spec.gat_heads != 0))
        throw std::invalid_argument("GAT width must be a positive multiple of the head count");
    if (spec.kind == ModelKind::gnnml3 && spec.supports.count == 0)
        throw std::invalid_argument("GNNML3 needs at least one support");
}

namespace {

std::size_t layer_out(const ModelSpec& spec) { return spec.kind == ModelKind::gnnml3 ? 2 * spec.width : spec.width; }

std::size_t support_terms(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::graphsage: return 2;
        case ModelKind::chebnet: return spec.cheb_k;
        case ModelKind::gnnml1: return 4;
        case ModelKind::gnnml3: return spec.supports.count;
        case ModelKind::gat: return spec.gat_heads;
        default: return 1;
    }
}

class Init {
public:
    Init(std::uint64_t seed, bool biases) : rng_(seed), biases_(biases) {}

    Matrix weight(std::size_t in, std::size_t out) {
        const double h = std::sqrt(6.0 / static_cast<double>(in + out));
        return fill(in, out, h);
    }
    Matrix bias(std::size_t in, std::size_t out) {
        if (!biases_) return {};
        return fill(1, out, 1.0 / std::sqrt(static_cast<double>(in)));
    }
    Linear linear(std::size_t in, std::size_t out) {
        Linear l;
        l.w = weight(in, out);
        l.b = bias(in, out);
        return l;
    }

private:
    Matrix fill(std::size_t r, std::size_t c, double half) {
        std::uniform_real_distribution<double> dist(-half, half);
        Matrix m(r, c);
        for (double& v : m.data()) v = dist(rng_);
        return m;
    }
    std::mt19937_64 rng_;
    bool biases_;
};

std::size_t count(const Matrix& m) { return m.size(); }
std::size_t count(const Linear& l) { return l.w.size() + l.b.size(); }

}  // namespace

WeightSet make_weights(const ModelSpec& spec, std::uint64_t seed, std::size_t in_dim) {
    validate(spec);
    if (in_dim == 0) throw std::invalid_argument("input feature width must be positive");
    Init init(seed, spec.biases);
    WeightSet ws;
    ws.seed = seed;
    std::size_t d = in_dim;
    const std::size_t w = spec.width;
    for (unsigned l = 0; l < spec.layers; ++l) {
        LayerWeights lw;
        switch (spec.kind) {
            case ModelKind::gat: {
                const std::size_t hw = w / spec.gat_heads;
                for (unsigned h = 0; h < spec.gat_heads; ++h) {
                    lw.w.push_back(init.weight(d, hw));
                    lw.att.push_back(init.weight(2 * hw, 1));
                }
                lw.bias = init.bias(d, w);
                break;
            }
            case ModelKind::gnnml3: {
                const std::size_t s = spec.supports.count;
                for (int k = 0; k < 3; ++k) lw.aux.push_back(init.linear(s, 2 * s));
                lw.aux.push_back(init.linear(4 * s, s));
                for (std::size_t k = 0; k < s; ++k) lw.w.push_back(init.weight(d, w));
                lw.bias = init.bias(d, w);
                lw.aux.push_back(init.linear(d, w));
                lw.aux.push_back(init.linear(d, w));
                break;
            }
            default: {
                for (std::size_t k = 0; k < support_terms(spec); ++k) lw.w.push_back(init.weight(d, w));
                lw.bias = init.bias(d, w);
                if (spec.kind == ModelKind::gin) lw.aux.push_back(init.linear(w, w));
                break;
            }
        }
        ws.layers.push_back(std::move(lw));
        d = layer_out(spec);
    }
    const std::size_t rdim = spec.readout == Readout::sum_max ? 2 * d : d;
    ws.readout = init.weight(rdim, spec.out_dim);
    return ws;
}

std::size_t parameter_count(const ModelSpec& spec, std::size_t in_dim) {
    const WeightSet ws = make_weights(spec, 0, in_dim);
    std::size_t total = count(ws.readout);
    for (const auto& lw : ws.layers) {
        for (const auto& m : lw.w) total += count(m);
        for (const auto& m : lw.att) total += count(m);
        for (const auto& a : lw.aux) total += count(a);
        total += count(lw.bias);
    }
    return total;
}

namespace {

void add_bias(Matrix& m, const Matrix& b) {
    if (b.empty()) return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += b(0, c);
}

void relu_inplace(Matrix& m) {
    for (double& v : m.data()) v = v > 0.0 ? v : 0.0;
}

void sigmoid_inplace(Matrix& m) {
    for (double& v : m.data()) v = 1.0 / (1.0 + std::exp(-v));
}

}  // namespace

Matrix Linear::apply(const Matrix& x) const {
    Matrix y = matmul(x, w);
    add_bias(y, b);
    return y;
}

std::vector<Matrix> static_supports(const ModelSpec& spec, const Graph& g) {
    const std::size_t n = g.n();
    const Matrix a = g.adjacency();
    const Matrix eye = Matrix::identity(n);
    switch (spec.kind) {
        case ModelKind::mlp: return {eye};
        case ModelKind::gcn: {
            Matrix c = a + eye;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    c(i, j) /= std::sqrt((g.degree(i) + 1.0) * (g.degree(j) + 1.0));
            return {c};
        }
        case ModelKind::graphsage: {
            Matrix c = a;
            for (std::size_t i = 0; i < n; ++i) {
                const auto d = g.degree(i);
                if (d == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) /= static_cast<double>(d);
            }
            return {eye, c};
        }
        case ModelKind::gin: return {a + eye * (1.0 + spec.gin_eps)};
        case ModelKind::chebnet: {
            Matrix l = laplacian(g, LaplacianKind::normalized) + eye * spec.cheb_shift;
            const double lmax = spectral::eig_sym(l).lambda.back();
            if (!(lmax > 0.0)) throw std::invalid_argument("Chebnet needs a positive largest eigenvalue");
            std::vector<Matrix> out{eye, l * (2.0 / lmax) - eye};
            while (out.size() < spec.cheb_k) {
                const std::size_t k = out.size();
                out.push_back(matmul(out[1], out[k - 1]) * 2.0 - out[k - 2]);
            }
            out.resize(spec.cheb_k);
            return out;
        }
        case ModelKind::gat:
        case ModelKind::gnnml1:
        case ModelKind::gnnml3: return {};
    }
    return {};
}

std::vector<Matrix> static_supports(ModelKind kind, const Graph& g) { return static_supports(default_spec(kind), g); }

PreparedGraph prepare(const ModelSpec& spec, const Graph& g) {
    validate(spec);
    if (g.n() == 0) throw std::invalid_argument("graph must have at least one node");
    PreparedGraph pg;
    pg.n = g.n();
    pg.x = g.node_features() ? *g.node_features() : degree_vector(g);
    pg.adjacency = g.adjacency();
    pg.supports = static_supports(spec, g);
    if (spec.kind == ModelKind::gnnml3) pg.support_set = spectral::build_supports(g, spec.supports);
    return pg;
}

Matrix gat_support(const Matrix& adjacency, const Matrix& h, const Matrix& w, const Matrix& a, double slope) {
    const std::size_t n = adjacency.rows();
    if (h.rows() != n) throw std::invalid_argument("gat_support: feature rows must equal node count");
    const Matrix hw = matmul(h, w);
    const std::size_t k = hw.cols();
    if (a.rows() != 2 * k || a.cols() != 1) throw std::invalid_argument("gat_support: attention vector shape");
    std::vector<double> p(n, 0.0), q(n, 0.0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < k; ++c) {
            p[v] += hw(v, c) * a(c, 0);
            q[v] += hw(v, c) * a(k + c, 0);
        }
    Matrix out(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        double peak = -std::numeric_limits<double>::infinity();
        for (std::size_t u = 0; u < n; ++u) {
            if (u != v && adjacency(v, u) == 0.0) continue;
            double z = p[v] + q[u];
            z = z > 0.0 ? z : slope * z;
            out(v, u) = z;
            peak = std::max(peak, z);
        }
        double total = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            if (u != v && adjacency(v, u) == 0.0) continue;
            out(v, u) = std::exp(out(v, u) - peak);
            total += out(v, u);
        }
        for (std::size_t u = 0; u < n; ++u) out(v, u) /= total;
    }
    return out;
}

Matrix learned_support_values(const spectral::SupportSet& set, const LayerWeights& lw) {
    if (lw.aux.size() != 6) throw std::invalid_argument("GNNML3 layer weights are incomplete");
    Matrix x1 = lw.aux[0].apply(set.features);
    Matrix x2 = lw.aux[1].apply(set.features);
    Matrix x3 = lw.aux[2].apply(set.features);
    sigmoid_inplace(x1);
    sigmoid_inplace(x2);
    sigmoid_inplace(x3);
    Matrix c = lw.aux[3].apply(hconcat(x1, hadamard(x2, x3)));
    relu_inplace(c);
    return c;
}

namespace {

// Row-wise model: identical input rows give identical output rows, so only distinct rows are propagated.
Matrix forward_mlp(const WeightSet& weights, const Matrix& x) {
    std::map<std::vector<double>, std::size_t> index;
    std::vector<std::size_t> row_of(x.rows());
    std::vector<double> uniq;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        std::vector<double> key(x.row(r).begin(), x.row(r).end());
        auto [it, fresh] = index.emplace(std::move(key), index.size());
        if (fresh) uniq.insert(uniq.end(), x.row(r).begin(), x.row(r).end());
        row_of[r] = it->second;
    }
    Matrix h(index.size(), x.cols(), std::move(uniq));
    for (const auto& lw : weights.layers) {
        h = matmul(h, lw.w[0]);
        add_bias(h, lw.bias);
        relu_inplace(h);
    }
    Matrix out(x.rows(), h.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
        std::copy(h.row(row_of[r]).begin(), h.row(row_of[r]).end(), out.row(r).begin());
    return out;
}

}  // namespace

Matrix forward(const ModelSpec& spec, const WeightSet& weights, const PreparedGraph& pg) {
    if (weights.layers.size() != spec.layers) throw std::invalid_argument("weight set does not match the model depth");
    if (spec.kind == ModelKind::mlp) return forward_mlp(weights, pg.x);
    if (spec.kind == ModelKind::gnnml3 && !pg.support_set) throw std::invalid_argument("GNNML3 requires a support set");

    Matrix h = pg.x;
    for (const auto& lw : weights.layers) {
        if (!lw.w.empty() && lw.w[0].rows() != h.cols()) throw std::invalid_argument("layer input width mismatch");
        Matrix next;
        switch (spec.kind) {
            case ModelKind::gcn:
            case ModelKind::gin:
            case ModelKind::graphsage:
            case ModelKind::chebnet: {
                for (std::size_t s = 0; s < lw.w.size(); ++s) {
                    Matrix term = matmul(pg.supports[s], matmul(h, lw.w[s]));
                    if (s == 0) next = std::move(term);
                    else next += term;
                }
                add_bias(next, lw.bias);
                relu_inplace(next);
                if (spec.kind == ModelKind::gin) {
                    next = lw.aux[0].apply(next);
                    relu_inplace(next);
                }
                break;
            }
            case ModelKind::gat: {
                for (std::size_t k = 0; k < lw.w.size(); ++k) {
                    const Matrix c = gat_support(pg.adjacency, h, lw.w[k], lw.att[k], spec.gat_slope);
                    Matrix head = matmul(c, matmul(h, lw.w[k]));
                    next = k == 0 ? std::move(head) : hconcat(next, head);
                }
                add_bias(next, lw.bias);
                relu_inplace(next);
                break;
            }
            case ModelKind::gnnml1: {
                next = matmul(h, lw.w[0]);
                next += matmul(pg.adjacency, matmul(h, lw.w[1]));
                next += hadamard(matmul(h, lw.w[2]), matmul(h, lw.w[3]));
                add_bias(next, lw.bias);
                relu_inplace(next);
                break;
            }
            case ModelKind::gnnml3: {
                const auto& set = *pg.support_set;
                const Matrix vals = learned_support_values(set, lw);
                Matrix conv(pg.n, spec.width);
                for (std::size_t s = 0; s < lw.w.size(); ++s) {
                    const Matrix p = matmul(h, lw.w[s]);
                    for (std::size_t e = 0; e < set.mask_index.size(); ++e) {
                        const double v = vals(e, s);
                        if (v == 0.0) continue;
                        const auto [r, c] = set.mask_index[e];
                        auto dst = conv.row(r);
                        auto src = p.row(c);
                        for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += v * src[j];
                    }
                }
                add_bias(conv, lw.bias);
                next = hconcat(conv, hadamard(lw.aux[4].apply(h), lw.aux[5].apply(h)));
                relu_inplace(next);
                break;
            }
            case ModelKind::mlp: break;
        }
        h = std::move(next);
    }
    return h;
}

Matrix forward(const ModelSpec& spec, const WeightSet& weights, const Graph& g) {
    return forward(spec, weights, prepare(spec, g));
}

Embedding readout(const ModelSpec& spec, const WeightSet& weights, const Matrix& h) {
    const std::size_t d = h.cols();
    std::vector<double> pooled;
    if (spec.readout != Readout::max) {
        std::vector<double> s(d, 0.0);
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t c = 0; c < d; ++c) s[c] += h(r, c);
        pooled.insert(pooled.end(), s.begin(), s.end());
    }
    if (spec.readout != Readout::sum) {
        std::vector<double> m(d, -std::numeric_limits<double>::infinity());
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t c = 0; c < d; ++c) m[c] = std::max(m[c], h(r, c));
        pooled.insert(pooled.end(), m.begin(), m.end());
    }
    if (pooled.size() != weights.readout.rows()) throw std::invalid_argument("readout width mismatch");
    Embedding out(weights.readout.cols(), 0.0);
    for (std::size_t i = 0; i < pooled.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += pooled[i] * weights.readout(i, j);
    return out;
}

Embedding embed(const ModelSpec& spec, const WeightSet& weights, const PreparedGraph& pg) {
    return readout(spec, weights, forward(spec, weights, pg));
}

Embedding embed(const ModelSpec& spec, const Graph& g, std::uint64_t seed) {
    const PreparedGraph pg = prepare(spec, g);
    return embed(spec, make_weights(spec, seed, pg.x.cols()), pg);
}

double manhattan(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("embedding sizes differ");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t run_seed(std::uint64_t base, std::uint64_t run) { return base ^ splitmix64(run); }

bool pair_distinguished(const ModelSpec& spec, const Graph& g, const Graph& h, std::span<const std::uint64_t> seeds,
                        double threshold) {
    if (seeds.empty()) throw std::invalid_argument("pair_distinguished needs at least one seed");
    const PreparedGraph pg = prepare(spec, g);
    const PreparedGraph ph = prepare(spec, h);
    if (pg.x.cols() != ph.x.cols()) return true;
    for (auto seed : seeds) {
        const WeightSet ws = make_weights(spec, seed, pg.x.cols());
        if (manhattan(embed(spec, ws, pg), embed(spec, ws, ph)) > threshold) return true;
    }
    return false;
}

}  // namespace gnnbench::models
