#include "gnnbench/dataset.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gnnbench {

namespace {

constexpr int kBias = 63;
constexpr int kMaxChar = 126;

}  // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset) {}

DatasetError::DatasetError(const std::string& what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) throw Graph6Error("header marker is not supported", 0);
    if (text.empty()) throw Graph6Error("empty input", 0);

    for (std::size_t i = 0; i < text.size(); ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > kMaxChar) throw Graph6Error("character outside [63,126]", i);
    }
    const int header = static_cast<unsigned char>(text[0]) - kBias;
    if (header == 63) throw Graph6Error("multi-byte size header (n > 62) is not supported", 0);
    if (header == 0) throw Graph6Error("graph must have at least one node", 0);
    const auto n = static_cast<std::size_t>(header);

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (text.size() - 1 < payload) throw Graph6Error("truncated edge payload", text.size());
    if (text.size() - 1 > payload) throw Graph6Error("unexpected trailing characters", 1 + payload);

    Graph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = static_cast<unsigned char>(text[payload]) - kBias;
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (last & pad_mask) throw Graph6Error("nonzero padding bits", payload);
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.n();
    if (n > kGraph6MaxNodes) throw std::invalid_argument("encode_graph6: n > 62 is not supported");
    std::string out;
    out.push_back(static_cast<char>(kBias + n));
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

DatasetFormat parse_dataset_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return DatasetFormat::graph6;
    if (name == "edgelist-json" || name == "json") return DatasetFormat::edgelist_json;
    throw std::invalid_argument("unknown dataset format '" + std::string(name) + "'");
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> graphs;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw DatasetError(e.what(), line_no);
        }
    }
    return graphs;
}

std::vector<Graph> parse_edgelist_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DatasetError(std::string("invalid JSON: ") + e.what(), 1);
    }
    if (!doc.is_array()) throw DatasetError("edge-list document must be a JSON array", 1);

    std::vector<Graph> graphs;
    graphs.reserve(doc.size());
    for (std::size_t idx = 0; idx < doc.size(); ++idx) {
        const auto& rec = doc[idx];
        const std::size_t line = idx + 1;
        try {
            if (!rec.is_object() || !rec.contains("n") || !rec["n"].is_number_integer())
                throw DatasetError("record needs an integer field 'n'", line);
            const auto n = rec["n"].get<long long>();
            if (n <= 0) throw DatasetError("'n' must be positive", line);
            Graph g(static_cast<std::size_t>(n));
            if (rec.contains("edges")) {
                for (const auto& e : rec["edges"]) {
                    if (!e.is_array() || e.size() != 2) throw DatasetError("edge must be a [u, v] pair", line);
                    const auto u = e[0].get<long long>();
                    const auto v = e[1].get<long long>();
                    if (u < 0 || v < 0 || u >= n || v >= n) throw DatasetError("edge endpoint out of range", line);
                    if (u == v) throw DatasetError("self-loop", line);
                    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
                }
            }
            graphs.push_back(std::move(g));
        } catch (const nlohmann::json::exception& e) {
            throw DatasetError(e.what(), line);
        }
    }
    return graphs;
}

std::vector<Graph> load_dataset(const std::filesystem::path& path, DatasetFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dataset file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return format == DatasetFormat::graph6 ? parse_graph6_lines(text) : parse_edgelist_json(text);
}

}  // namespace gnnbench
