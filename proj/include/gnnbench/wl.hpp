#pragma once

// Weisfeiler-Lehman color refinement: 1-WL on nodes, 2-WL and 2-FWL on
// ordered node pairs, and a 3-tensor square statistic.
//
// Colors are structure-determined: every round, the distinct refinement
// signatures of a graph are sorted and ranked, so equal-history graphs get
// equal color ids without refining them jointly. The canonical signature is
// the concatenation of every round's sorted signature histogram.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gnnbench/graph.hpp"

namespace gnnbench::wl {

enum class Test { wl1, wl2, fwl2 };

std::string_view test_name(Test t);

struct ColorPartition {
    unsigned arity = 1;
    /// Per node (arity 1) or per ordered pair v*n+u (arity 2); contiguous ids from 0.
    std::vector<std::uint32_t> colors;
    /// histogram[c] = number of nodes or pairs with color c.
    std::vector<std::size_t> histogram;
    unsigned iterations = 0;
};

struct Canonical {
    ColorPartition partition;
    /// Rendered histogram of round t (round 0 is the initial coloring).
    std::vector<std::string> rounds;
    std::string signature;
};

struct PairVerdict {
    bool equivalent = true;
    /// First round whose histograms differ; set iff !equivalent.
    std::optional<unsigned> separating_iteration;
    Test test = Test::wl1;
};

/// init, if given, must have n entries; any integer labels.
Canonical wl1_canonical(const Graph& g, std::optional<std::span<const std::uint32_t>> init = std::nullopt);
Canonical wl2_canonical(const Graph& g);
Canonical fwl2_canonical(const Graph& g);
Canonical canonical(Test t, const Graph& g);

PairVerdict compare(const Canonical& a, const Canonical& b, Test t);
PairVerdict wl1_equivalent(const Graph& g, const Graph& h);
PairVerdict wl2_equivalent(const Graph& g, const Graph& h);
PairVerdict fwl2_equivalent(const Graph& g, const Graph& h);

/// State tensor T over triples: 8 where i = j = k, otherwise the 3-bit code
/// [ij] + 2[ik] + 4[jk] (pairs with a repeated index count as unconnected).
/// Returns the sum of (T^2)_{ijk} = sum_s T_{sjk} T_{isk} T_{ijs} over cells with T = 0.
double fwl3_tensor_statistic(const Graph& g);

}  // namespace gnnbench::wl
