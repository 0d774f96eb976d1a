#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gnnbench/dataset.hpp"
#include "gnnbench/graph.hpp"
#include "gnnbench/models.hpp"

namespace gnnbench::harness {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware concurrency).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

struct MethodResult {
    std::string method;
    std::uint64_t undistinguished = 0;
    std::vector<IndexPair> pairs;  // capped sample, ascending
    std::optional<std::size_t> parameters;
    double seconds = 0.0;
    std::string error;  // non-empty when the method failed
};

struct PairReport {
    std::string dataset;
    std::size_t graph_count = 0;
    std::uint64_t pair_count = 0;
    std::vector<MethodResult> methods;

    const MethodResult* find(std::string_view method) const;
};

/// Groups of graph indices sharing a 1-WL canonical signature (size >= 2 only).
std::vector<std::vector<std::uint32_t>> wl1_buckets(std::span<const Graph> graphs, unsigned threads = 1);
std::uint64_t pairs_in(const std::vector<std::vector<std::uint32_t>>& buckets);
std::vector<IndexPair> expand_pairs(const std::vector<std::vector<std::uint32_t>>& buckets);

/// Rows "1wl" and "2fwl"; 2-FWL is refined only inside 1-WL buckets.
PairReport wl_census(std::span<const Graph> graphs, unsigned threads = 1, std::size_t pair_cap = 1000);

/// 1-WL-equivalent pairs whose normalized-Laplacian lambda_max differ by at most tol.
std::uint64_t lambda_census(std::span<const Graph> graphs, unsigned threads = 1, double tol = 1e-6);

/// Pairs with identical sorted degree sequences.
std::uint64_t degree_multiset_pairs(std::span<const Graph> graphs);

struct ExperimentConfig {
    std::vector<models::ModelSpec> models;
    unsigned runs = 100;
    double threshold = 1e-3;
    std::uint64_t base_seed = 0;
    unsigned threads = 1;
    std::size_t pair_cap = 1000;

    static ExperimentConfig defaults();
};

/// Key-value text: `key = value` lines, `#` comments. Keys: runs, threshold,
/// seed, threads, pair_cap, models (comma list or "all"), readout, biases, and per
/// model `<name>.width`, `<name>.layers`; plus gat.heads, gat.slope,
/// chebnet.k, chebnet.shift, gin.eps, gnnml3.b, gnnml3.count, gnnml3.basis
/// (nlap|adj), gnnml3.allpass.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = ExperimentConfig::defaults());
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = ExperimentConfig::defaults());
std::string render_config(const ExperimentConfig& cfg);

/// Embeddings of every graph for one seed; row i belongs to graph i.
std::vector<models::Embedding> embed_all(const models::ModelSpec& spec, std::span<const models::PreparedGraph> graphs,
                                         std::span<const std::uint32_t> which, std::uint64_t seed, unsigned threads);

/// Pairs (i < j) with Manhattan distance <= threshold, found by grid hashing on
/// the two leading coordinates with cells of width threshold.
std::vector<IndexPair> close_pairs(std::span<const models::Embedding> emb, std::span<const std::uint32_t> which,
                                   double threshold);

/// Pairs whose distance stays <= threshold in every run.
MethodResult undistinguished_pairs(const models::ModelSpec& spec, std::span<const Graph> graphs,
                                   const ExperimentConfig& cfg);
/// Same result from all O(N^2) distances each run; for cross-checking on small datasets.
MethodResult undistinguished_pairs_naive(const models::ModelSpec& spec, std::span<const Graph> graphs,
                                         const ExperimentConfig& cfg);

PairReport distinguishability_run(std::span<const Graph> graphs, const ExperimentConfig& cfg,
                                  std::string dataset = "dataset");

enum class Format { text, json, csv };
Format parse_format(std::string_view name);

std::string report_render(const PairReport& report, Format format);
/// Several datasets side by side: one row per method, one column per dataset.
std::string report_render(std::span<const PairReport> reports, Format format);
/// Inverse of the JSON rendering of a single report.
PairReport report_from_json(std::string_view json);

}  // namespace gnnbench::harness
