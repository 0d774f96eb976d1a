#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "gnnbench/graph.hpp"

namespace gnnbench::graphlets {

enum class PatternKind { three_star, triangle, tailed_triangle, four_cycle };

std::string_view pattern_name(PatternKind k);
/// Accepts "3star", "tri", "tailedtri", "4cycle".
PatternKind parse_pattern(std::string_view name);

/// Closed forms over adjacency powers; counts are non-induced subgraph counts.
std::int64_t count_3star(const Graph& g);
std::int64_t count_triangle(const Graph& g);
std::int64_t count_4cycle(const Graph& g);
std::int64_t count_tailed_triangle(const Graph& g);
std::int64_t count(const Graph& g, PatternKind k);

inline constexpr std::size_t kEnumerationMaxNodes = 16;

/// Exhaustive enumeration over 3- and 4-node subsets. Throws for n > 16.
std::int64_t enumerate_pattern(const Graph& g, PatternKind k);

/// 1' A diag(exp(-A^2 1)) A 1, evaluated through the expression language.
double custom_sentence(const Graph& g);

}  // namespace gnnbench::graphlets
