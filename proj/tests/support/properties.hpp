#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each check returns how many cases ran and how many failed.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gnnbench/graph.hpp"
#include "gnnbench/harness.hpp"
#include "gnnbench/matlang.hpp"

namespace gnnbench::testing {

struct PropertyResult {
    explicit PropertyResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool pass() const { return cases > 0 && failures == 0; }
    void record(bool ok, const std::string& detail);
    std::string summary() const;
};

/// G(n, p) with at least one edge.
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);
std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n);

PropertyResult wl_permutation_invariance(std::uint64_t seed, std::size_t graphs = 50, std::size_t perms_per_graph = 2);
PropertyResult embed_determinism_and_invariance(std::uint64_t seed, std::size_t cases = 104, double tol = 1e-9);

/// Every 1-WL-bounded model (MLP, GCN, GraphSage, GIN, GAT, GNNML1) keeps
/// every listed pair within the threshold for all seeds.
PropertyResult hierarchy_consistency(std::span<const Graph> graphs, std::span<const harness::IndexPair> pairs,
                                     std::size_t seeds = 100, double threshold = 1e-3, unsigned threads = 1);

/// Spectral supports: symmetric, spectral norm <= 1, permutation equivariant.
PropertyResult support_properties(std::uint64_t seed, std::size_t cases = 100, double tol = 1e-8);
/// Supports unchanged when the eigensolver sweeps in a different order.
PropertyResult support_basis_invariance(std::uint64_t seed, std::size_t cases = 100, double tol = 1e-8);
PropertyResult sparse_roundtrip(std::uint64_t seed, std::size_t cases = 100);
/// Gaussian filters on the path P2 (adjacency basis) against their truncated
/// power series: order 20 within 1e-6 and nonincreasing in the order.
PropertyResult maclaurin_p2(std::uint64_t seed, std::size_t cases = 100);

/// Closed-form graphlet counts against exhaustive enumeration.
PropertyResult graphlet_oracle(std::uint64_t seed, std::size_t cases = 500);

/// Sentences of the given fragment take equal values (1e-6 relative) on every pair.
PropertyResult fragment_soundness(std::span<const Graph> graphs, std::span<const harness::IndexPair> pairs,
                                  matlang::Fragment fragment, std::size_t max_sentences = 500, unsigned threads = 1);

}  // namespace gnnbench::testing
