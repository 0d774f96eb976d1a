#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "gnnbench/golden.hpp"
#include "gnnbench/models.hpp"
#include "properties.hpp"

using namespace gnnbench;
using namespace gnnbench::models;

namespace {

std::vector<std::uint64_t> seeds(std::size_t n) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(run_seed(0, i));
    return out;
}

// Graph-level sum of node outputs, a permutation-invariant summary of forward().
std::vector<double> column_sums(const Matrix& h) {
    std::vector<double> s(h.cols(), 0.0);
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) s[c] += h(r, c);
    return s;
}

}  // namespace

TEST_SUITE("models") {

TEST_CASE("model and readout names round-trip") {
    for (auto k : kAllModels) CHECK(parse_model(model_name(k)) == k);
    for (auto r : {Readout::sum, Readout::max, Readout::sum_max}) CHECK(parse_readout(readout_name(r)) == r);
    CHECK(readout_name(Readout::sum_max) == "sum-max");
    CHECK_THROWS_AS(parse_model("ppgn"), std::invalid_argument);
    CHECK_THROWS_AS(parse_readout("mean"), std::invalid_argument);
}

TEST_CASE("default widths give about 30K parameters") {
    const std::map<ModelKind, std::size_t> expected{
        {ModelKind::mlp, 30480},     {ModelKind::gcn, 30480},     {ModelKind::graphsage, 30175},
        {ModelKind::gin, 30172},     {ModelKind::gat, 29718},     {ModelKind::chebnet, 30520},
        {ModelKind::gnnml1, 29820},  {ModelKind::gnnml3, 30679}};
    for (auto k : kAllModels) {
        const std::size_t p = parameter_count(default_spec(k));
        CHECK_MESSAGE(p == expected.at(k), model_name(k));
        CHECK(p >= 28500);
        CHECK(p <= 31500);
    }
}

TEST_CASE("parameter count matches generated weights") {
    for (auto k : kAllModels) {
        ModelSpec spec = default_spec(k);
        spec.width = k == ModelKind::gat ? 12 : 8;
        for (std::size_t in_dim : {1u, 3u}) {
            const WeightSet w = make_weights(spec, 5, in_dim);
            std::size_t total = w.readout.size();
            for (const auto& lw : w.layers) {
                for (const auto& m : lw.w) total += m.size();
                for (const auto& m : lw.att) total += m.size();
                total += lw.bias.size();
                for (const auto& lin : lw.aux) total += lin.w.size() + lin.b.size();
            }
            CHECK_MESSAGE(total == parameter_count(spec, in_dim), model_name(k));
        }
    }
}

TEST_CASE("spec validation") {
    ModelSpec s = default_spec(ModelKind::chebnet);
    s.cheb_k = 1;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = default_spec(ModelKind::gat);
    s.width = 100;  // not a multiple of 3 heads
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = default_spec(ModelKind::gin);
    s.width = 0;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = default_spec(ModelKind::gnnml3);
    s.supports.count = 0;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
}

TEST_CASE("static supports") {
    const Graph k3 = fixtures::complete(3);
    const auto gcn = static_supports(ModelKind::gcn, k3);
    REQUIRE(gcn.size() == 1);
    for (double v : gcn[0].data()) CHECK(v == doctest::Approx(1.0 / 3.0));

    const auto sage = static_supports(ModelKind::graphsage, k3);
    REQUIRE(sage.size() == 2);
    CHECK(sage[0] == Matrix::identity(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(sage[1](i, j) == doctest::Approx(i == j ? 0.0 : 0.5));

    const auto gin = static_supports(ModelKind::gin, k3);
    REQUIRE(gin.size() == 1);
    CHECK(gin[0](0, 0) == doctest::Approx(1.1));
    CHECK(gin[0](0, 1) == 1.0);

    const auto mlp = static_supports(ModelKind::mlp, k3);
    REQUIRE(mlp.size() == 1);
    CHECK(mlp[0] == Matrix::identity(3));
    CHECK(static_supports(ModelKind::gat, k3).empty());

    const auto cheb_d = static_supports(ModelKind::chebnet, golden::decalin());
    const auto cheb_b = static_supports(ModelKind::chebnet, golden::bicyclopentyl());
    REQUIRE(cheb_d.size() == 3);
    CHECK(cheb_d[0] == Matrix::identity(10));
    CHECK(std::abs(cheb_d[1].sum() - -9.9327) <= 1e-3);
    CHECK(std::abs(cheb_b[1].sum() - -9.9269) <= 1e-3);
    // Chebyshev recurrence for the third term.
    const Matrix t2 = matmul(cheb_d[1], cheb_d[1]) * 2.0 - cheb_d[0];
    CHECK(max_abs_diff(cheb_d[2], t2) <= 1e-12);

    ModelSpec shifted = default_spec(ModelKind::chebnet);
    shifted.cheb_shift = 0.1;
    CHECK(std::abs(static_supports(shifted, golden::decalin())[1].sum() - cheb_d[1].sum()) > 1e-6);
}

TEST_CASE("GAT attention support") {
    const Graph k3 = fixtures::complete(3);
    const Matrix ones = Matrix::ones(3, 2);
    const Matrix w(2, 2, {0.3, -1.0, 0.7, 2.0});
    const Matrix a(4, 1, {1.0, -2.0, 0.5, 0.25});
    const Matrix c = gat_support(k3.adjacency(), ones, w, a);
    for (double v : c.data()) CHECK(v == doctest::Approx(1.0 / 3.0));

    const Graph p4 = fixtures::path(4);
    const Matrix uniform = gat_support(p4.adjacency(), Matrix::ones(4, 2), w, a);
    CHECK(uniform(0, 0) == doctest::Approx(0.5));
    CHECK(uniform(1, 2) == doctest::Approx(1.0 / 3.0));
    CHECK(uniform(0, 2) == 0.0);

    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd(0.0, 2.0);
    for (int t = 0; t < 50; ++t) {
        const Graph g = testing::random_graph(rng, 3 + t % 8, 0.4);
        Matrix h(g.n(), 3), ww(3, 4), aa(8, 1);
        for (double& v : h.data()) v = nd(rng);
        for (double& v : ww.data()) v = nd(rng);
        for (double& v : aa.data()) v = nd(rng);
        const Matrix s = gat_support(g.adjacency(), h, ww, aa);
        for (std::size_t r = 0; r < g.n(); ++r) {
            double total = 0.0;
            for (double v : s.row(r)) total += v;
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("GNNML1 layer with identity weights") {
    ModelSpec spec = default_spec(ModelKind::gnnml1);
    spec.layers = 1;
    spec.width = 1;
    spec.biases = false;
    WeightSet w = make_weights(spec, 1);
    for (auto& m : w.layers[0].w) m = Matrix::identity(1);
    PreparedGraph pg = prepare(spec, fixtures::complete(3));
    pg.x = Matrix::ones(3, 1);
    const Matrix h = forward(spec, w, pg);
    REQUIRE(h.rows() == 3);
    for (double v : h.data()) CHECK(v == 4.0);
}

TEST_CASE("MLP sees only the degree multiset") {
    // Equal sorted degree sequences, different graphs.
    const Graph c6 = fixtures::cycle(6);
    const Graph tt = fixtures::two_triangles();
    const auto spec = default_spec(ModelKind::mlp);
    for (auto s : seeds(5)) {
        const auto w = make_weights(spec, s);
        const auto a = column_sums(forward(spec, w, c6));
        const auto b = column_sums(forward(spec, w, tt));
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]));
    }
    CHECK(manhattan(embed(spec, golden::decalin(), 3), embed(spec, golden::bicyclopentyl(), 3)) <= 1e-9);
}

TEST_CASE("GNNML3 with only the all-pass support propagates nothing between nodes") {
    ModelSpec spec = default_spec(ModelKind::gnnml3);
    spec.supports.count = 1;
    // C6 and two triangles share the degree multiset.
    for (auto s : seeds(5)) {
        const auto a = embed(spec, fixtures::cycle(6), s);
        const auto b = embed(spec, fixtures::two_triangles(), s);
        CHECK(manhattan(a, b) <= 1e-9);
    }
    const auto p = prepare(spec, fixtures::path(4));
    REQUIRE(p.support_set.has_value());
    CHECK(p.support_set->features.cols() == 1);
}

TEST_CASE("GNNML3 requires a support set") {
    const auto spec = default_spec(ModelKind::gnnml3);
    PreparedGraph pg = prepare(spec, fixtures::path(3));
    pg.support_set.reset();
    CHECK_THROWS_AS(forward(spec, make_weights(spec, 1), pg), std::invalid_argument);
}

TEST_CASE("weights are regenerated bit-exactly from the seed") {
    for (auto k : kAllModels) {
        const auto spec = default_spec(k);
        const auto a = make_weights(spec, 123), b = make_weights(spec, 123), c = make_weights(spec, 124);
        CHECK(a.readout == b.readout);
        CHECK(a.layers[0].w[0] == b.layers[0].w[0]);
        CHECK_FALSE(a.readout == c.readout);
        // Uniform init bounds.
        const auto& w0 = a.layers[0].w[0];
        const double bound = std::sqrt(6.0 / static_cast<double>(w0.rows() + w0.cols()));
        CHECK(max_abs(w0) <= bound);
    }
}

TEST_CASE("readout variants") {
    for (auto r : {Readout::sum, Readout::max, Readout::sum_max}) {
        ModelSpec spec = default_spec(ModelKind::gin);
        spec.readout = r;
        const auto e = embed(spec, golden::decalin(), 7);
        CHECK(e.size() == 10);
        CHECK(std::all_of(e.begin(), e.end(), [](double v) { return std::isfinite(v); }));
    }
    CHECK(run_seed(5, 0) == (5 ^ splitmix64(0)));
    CHECK(manhattan(std::vector<double>{1, -2}, std::vector<double>{0, 1}) == 4.0);
}

TEST_CASE("embeddings are deterministic and permutation invariant") {
    const auto res = testing::embed_determinism_and_invariance(71);
    CHECK(res.cases >= 100);
    CHECK_MESSAGE(res.pass(), res.summary());
}

TEST_CASE("GIN cannot separate the Decalin pair") {
    const auto spec = default_spec(ModelKind::gin);
    const auto d = prepare(spec, golden::decalin());
    const auto b = prepare(spec, golden::bicyclopentyl());
    for (auto s : seeds(100)) {
        const auto w = make_weights(spec, s);
        CHECK(manhattan(embed(spec, w, d), embed(spec, w, b)) <= 1e-6);
    }
}

TEST_CASE("pair_distinguished") {
    const auto ml3 = default_spec(ModelKind::gnnml3);
    CHECK(pair_distinguished(ml3, golden::decalin(), golden::bicyclopentyl(), seeds(100), 1e-3));
    const auto& sr = fixtures::sr25();
    CHECK_FALSE(pair_distinguished(ml3, sr[0], sr[1], seeds(100), 1e-3));
    CHECK_FALSE(pair_distinguished(ml3, sr[3], sr[11], seeds(20), 1e-3));
    for (auto k : kAllModels)
        CHECK_FALSE(pair_distinguished(default_spec(k), golden::rook(), golden::rook(), seeds(5), 0.0));
    CHECK_THROWS_AS(pair_distinguished(ml3, sr[0], sr[1], {}, 1e-3), std::invalid_argument);
}

TEST_CASE("1-WL-bounded models never separate 1-WL-equivalent graph8c pairs") {
    const auto res = testing::hierarchy_consistency(fixtures::graph8c(), fixtures::graph8c_wl1_pairs(), 100, 1e-3, 0);
    CHECK(res.cases == 6 * 312);
    CHECK_MESSAGE(res.pass(), res.summary());
}

}  // TEST_SUITE
