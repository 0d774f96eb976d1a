#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gnnbench/graph.hpp"

namespace gnnbench {

/// Malformed graph6 text. offset() is the zero-based byte position of the problem.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Malformed dataset record. line() is one-based (graph6 line or JSON record index + 1).
class DatasetError : public std::runtime_error {
public:
    DatasetError(const std::string& what, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Largest order representable with the single-byte graph6 header.
inline constexpr std::size_t kGraph6MaxNodes = 62;

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

enum class DatasetFormat { graph6, edgelist_json };

DatasetFormat parse_dataset_format(std::string_view name);

std::vector<Graph> parse_graph6_lines(std::string_view text);
/// JSON array of {"n": int, "edges": [[u, v], ...]} records.
std::vector<Graph> parse_edgelist_json(std::string_view text);

std::vector<Graph> load_dataset(const std::filesystem::path& path, DatasetFormat format);

}  // namespace gnnbench
