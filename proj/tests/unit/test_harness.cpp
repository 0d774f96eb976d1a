#include <doctest.h>

#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "gnnbench/golden.hpp"
#include "gnnbench/harness.hpp"
#include "gnnbench/models.hpp"
#include "gnnbench/wl.hpp"

using namespace gnnbench;
using namespace gnnbench::harness;

namespace {

// The first graph8c graphs plus every member of the first 1-WL buckets.
std::vector<Graph> mixed_subset(std::size_t plain, std::size_t limit) {
    const auto& g8 = fixtures::graph8c();
    std::set<std::uint32_t> keep;
    for (std::uint32_t i = 0; i < plain; ++i) keep.insert(i);
    for (const auto& bucket : wl1_buckets(g8)) {
        if (keep.size() + bucket.size() > limit) break;
        keep.insert(bucket.begin(), bucket.end());
    }
    std::vector<Graph> out;
    for (auto i : keep) out.push_back(g8[i]);
    return out;
}

ExperimentConfig quick_config(unsigned runs) {
    ExperimentConfig cfg = ExperimentConfig::defaults();
    cfg.runs = runs;
    cfg.pair_cap = std::numeric_limits<std::size_t>::max();
    return cfg;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("WL census") {
    const auto g8 = wl_census(fixtures::graph8c());
    CHECK(g8.graph_count == 11117);
    CHECK(g8.pair_count == 11117ull * 11116 / 2);
    REQUIRE(g8.find("1wl"));
    CHECK(g8.find("1wl")->undistinguished == 312);
    CHECK(g8.find("2fwl")->undistinguished == 0);
    CHECK(g8.find("1wl")->pairs.size() == 312);

    const auto sr = wl_census(fixtures::sr25());
    CHECK(sr.find("1wl")->undistinguished == 105);
    CHECK(sr.find("2fwl")->undistinguished == 105);

    const std::vector<Graph> one{golden::rook()};
    const auto single = wl_census(one);
    CHECK(single.find("1wl")->undistinguished == 0);
    CHECK(single.pair_count == 0);
    CHECK(wl_census(fixtures::graph8c(), 1, 10).find("1wl")->pairs.size() == 10);
    CHECK(g8.find("ppgn") == nullptr);
}

TEST_CASE("lambda census") {
    CHECK(lambda_census(fixtures::graph8c()) == 19);
    CHECK(lambda_census(fixtures::sr25()) == 105);
    const std::vector<Graph> pair{golden::cospectral_g(), golden::decalin()};
    CHECK(lambda_census(pair) == 0);
}

TEST_CASE("buckets and pair expansion") {
    const std::vector<std::vector<std::uint32_t>> buckets{{0, 2, 5}, {1, 4}};
    CHECK(pairs_in(buckets) == 4);
    CHECK(expand_pairs(buckets) == std::vector<IndexPair>{{0, 2}, {0, 5}, {1, 4}, {2, 5}});
    CHECK(pairs_in({}) == 0);
    const auto& b = wl1_buckets(fixtures::graph8c());
    CHECK(pairs_in(b) == 312);
    CHECK(wl1_buckets(fixtures::graph8c(), 3) == b);
}

TEST_CASE("MLP leaves exactly the degree-multiset pairs undistinguished") {
    const std::vector<Graph> subset(fixtures::graph8c().begin(), fixtures::graph8c().begin() + 2000);
    const auto mlp = undistinguished_pairs(models::default_spec(models::ModelKind::mlp), subset, quick_config(20));
    CHECK(mlp.error.empty());
    CHECK(mlp.undistinguished == degree_multiset_pairs(subset));
    CHECK(mlp.undistinguished > 0);
}

TEST_CASE("grid engine agrees with all-pairs comparison") {
    const auto graphs = mixed_subset(300, 500);
    REQUIRE(graphs.size() >= 350);
    const auto cfg = quick_config(8);
    for (auto k : models::kAllModels) {
        const auto spec = models::default_spec(k);
        const auto fast = undistinguished_pairs(spec, graphs, cfg);
        const auto slow = undistinguished_pairs_naive(spec, graphs, cfg);
        CHECK_MESSAGE(fast.undistinguished == slow.undistinguished, models::model_name(k));
        CHECK(fast.pairs == slow.pairs);
        CHECK(fast.parameters == slow.parameters);
    }
}

TEST_CASE("results do not depend on the thread count") {
    const auto graphs = mixed_subset(200, 300);
    auto one = quick_config(5);
    auto four = one;
    four.threads = 4;
    for (auto k : {models::ModelKind::gin, models::ModelKind::gnnml3}) {
        const auto spec = models::default_spec(k);
        CHECK(undistinguished_pairs(spec, graphs, one).pairs == undistinguished_pairs(spec, graphs, four).pairs);
    }
    CHECK(wl1_buckets(graphs, 1) == wl1_buckets(graphs, 4));
}

TEST_CASE("bounded models never beat 1-WL and 2-FWL never loses to 1-WL") {
    const auto graphs = mixed_subset(300, 500);
    const auto census = wl_census(graphs);
    const auto wl1 = census.find("1wl")->undistinguished;
    CHECK(census.find("2fwl")->undistinguished <= wl1);
    const auto cfg = quick_config(10);
    for (auto k : {models::ModelKind::mlp, models::ModelKind::gcn, models::ModelKind::graphsage, models::ModelKind::gin,
                   models::ModelKind::gat, models::ModelKind::gnnml1})
        CHECK_MESSAGE(undistinguished_pairs(models::default_spec(k), graphs, cfg).undistinguished >= wl1,
                      models::model_name(k));
}

TEST_CASE("distinguishability run reports every model") {
    auto cfg = quick_config(3);
    const auto rep = distinguishability_run(fixtures::sr25(), cfg, "sr25");
    CHECK(rep.dataset == "sr25");
    CHECK(rep.pair_count == 105);
    REQUIRE(rep.methods.size() == 8);
    for (const auto& m : rep.methods) {
        CHECK(m.error.empty());
        CHECK(m.undistinguished == 105);
        CHECK(m.parameters.has_value());
    }
    const std::vector<Graph> none;
    CHECK(distinguishability_run(none, cfg).methods.front().undistinguished == 0);
}

TEST_CASE("close_pairs matches brute force") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.01, 0.01);
    for (int t = 0; t < 20; ++t) {
        std::vector<models::Embedding> emb(120, models::Embedding(4));
        for (auto& e : emb)
            for (double& v : e) v = u(rng);
        // Some exact duplicates and non-finite values.
        emb[5] = emb[7];
        emb[9][0] = std::numeric_limits<double>::quiet_NaN();
        emb[10][2] = std::numeric_limits<double>::infinity();
        emb[11] = emb[10];
        std::vector<std::uint32_t> which;
        for (std::uint32_t i = 0; i < emb.size(); i += 1 + t % 2) which.push_back(i);
        const double threshold = 0.004;
        std::vector<IndexPair> brute;
        for (std::size_t a = 0; a < which.size(); ++a)
            for (std::size_t b = a + 1; b < which.size(); ++b)
                if (models::manhattan(emb[which[a]], emb[which[b]]) <= threshold) brute.emplace_back(which[a], which[b]);
        CHECK(close_pairs(emb, which, threshold) == brute);
    }
}

TEST_CASE("parallel_for covers every index and rethrows") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](const auto& h) { return h.load() == 1; }));
    CHECK_THROWS_AS(parallel_for(100, 3, [](std::size_t i) {
                        if (i == 42) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
    parallel_for(0, 2, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("config parsing") {
    const auto cfg = parse_config(R"(
# comment
runs = 7
threshold = 0.01
seed = 42
threads = 2
pair_cap = 5
models = gin, gnnml3
gin.width = 33
gin.eps = 0.25
gnnml3.count = 4
gnnml3.basis = adj
gnnml3.allpass = false
readout = sum-max
biases = false
)");
    CHECK(cfg.runs == 7);
    CHECK(cfg.threshold == 0.01);
    CHECK(cfg.base_seed == 42);
    CHECK(cfg.threads == 2);
    CHECK(cfg.pair_cap == 5);
    REQUIRE(cfg.models.size() == 2);
    CHECK(cfg.models[0].kind == models::ModelKind::gin);
    CHECK(cfg.models[0].width == 33);
    CHECK(cfg.models[0].gin_eps == 0.25);
    CHECK(cfg.models[1].supports.count == 4);
    CHECK(cfg.models[1].supports.basis == spectral::BasisKind::adjacency);
    CHECK_FALSE(cfg.models[1].supports.include_allpass);
    for (const auto& m : cfg.models) {
        CHECK(m.readout == models::Readout::sum_max);
        CHECK_FALSE(m.biases);
    }
    CHECK(parse_config("models = all").models.size() == 8);

    for (const char* bad : {"runs = 0", "threshold = -1", "runs = x", "nonsense = 1", "models = ppgn", "no equals sign",
                            "biases = maybe", "gnnml3.basis = lap", "chebnet.k = 1"})
        CHECK_THROWS_AS_MESSAGE(parse_config(bad), std::invalid_argument, bad);
    CHECK_THROWS(load_config(fixtures::data_file("missing.conf")));
}

TEST_CASE("render_config round-trips") {
    for (const char* text : {"", "models = all\nthreshold = 0.1\ngin.eps = 0.1", "models = gat,chebnet\ngat.slope = 0.3"}) {
        const auto cfg = parse_config(text);
        const auto again = parse_config(render_config(cfg));
        CHECK(render_config(again) == render_config(cfg));
        CHECK(again.threshold == cfg.threshold);
        REQUIRE(again.models.size() == cfg.models.size());
        for (std::size_t i = 0; i < cfg.models.size(); ++i) {
            CHECK(again.models[i].width == cfg.models[i].width);
            CHECK(again.models[i].gin_eps == cfg.models[i].gin_eps);
            CHECK(again.models[i].gat_slope == cfg.models[i].gat_slope);
        }
    }
    CHECK(render_config(parse_config("threshold = 0.1")).find("threshold = 0.1\n") != std::string::npos);
}

TEST_CASE("report rendering") {
    PairReport empty;
    empty.dataset = "none";
    CHECK(report_render(empty, Format::text).find("dataset: none") != std::string::npos);
    CHECK(report_render(empty, Format::csv) == "method,none\n");

    PairReport a;
    a.dataset = "graph8c";
    a.graph_count = 3;
    a.pair_count = 3;
    MethodResult gin;
    gin.method = "gin";
    gin.undistinguished = 2;
    gin.pairs = {{0, 1}, {1, 2}};
    gin.parameters = 30172;
    gin.seconds = 1.5;
    MethodResult broken;
    broken.method = "gat";
    broken.error = "bad, \"quoted\"";
    a.methods = {gin, broken};
    PairReport b = a;
    b.dataset = "sr25";
    b.methods = {gin};

    const std::vector<PairReport> both{a, b};
    CHECK(report_render(both, Format::csv) == "method,graph8c,sr25\ngin,2,2\ngat,error,\n");
    const auto text = report_render(a, Format::text);
    CHECK(text.find("error: bad") != std::string::npos);
    CHECK(text.find("30172") != std::string::npos);

    const auto back = report_from_json(report_render(a, Format::json));
    CHECK(back.dataset == a.dataset);
    CHECK(back.graph_count == 3);
    REQUIRE(back.methods.size() == 2);
    CHECK(back.methods[0].pairs == gin.pairs);
    CHECK(back.methods[0].parameters == gin.parameters);
    CHECK(back.methods[0].seconds == 1.5);
    CHECK(back.methods[1].error == broken.error);
    CHECK_FALSE(back.methods[1].parameters.has_value());
    CHECK(report_render(both, Format::json).find("\"reports\"") != std::string::npos);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

}  // TEST_SUITE
