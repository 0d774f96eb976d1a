#include "gnnbench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "gnnbench/spectral.hpp"
#include "gnnbench/wl.hpp"

namespace gnnbench::harness {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

const MethodResult* PairReport::find(std::string_view method) const {
    for (const auto& m : methods)
        if (m.method == method) return &m;
    return nullptr;
}

namespace {

std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }

template <typename Key>
std::vector<std::vector<std::uint32_t>> group_by(std::span<const std::uint32_t> members, const std::vector<Key>& keys) {
    std::vector<std::uint32_t> order(members.begin(), members.end());
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    std::vector<std::vector<std::uint32_t>> groups;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && keys[order[j]] == keys[order[i]]) ++j;
        if (j - i >= 2) {
            std::vector<std::uint32_t> g(order.begin() + static_cast<std::ptrdiff_t>(i),
                                         order.begin() + static_cast<std::ptrdiff_t>(j));
            std::sort(g.begin(), g.end());
            groups.push_back(std::move(g));
        }
        i = j;
    }
    std::sort(groups.begin(), groups.end());
    return groups;
}

std::vector<std::uint32_t> iota_indices(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0u);
    return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<std::vector<std::uint32_t>> wl1_buckets(std::span<const Graph> graphs, unsigned threads) {
    std::vector<std::string> sigs(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) {
        // Prefix with n so graphs of different order never share a bucket.
        sigs[i] = std::to_string(graphs[i].n()) + ":" + wl::wl1_canonical(graphs[i]).signature;
    });
    const auto all = iota_indices(graphs.size());
    return group_by(std::span<const std::uint32_t>(all), sigs);
}

std::uint64_t pairs_in(const std::vector<std::vector<std::uint32_t>>& buckets) {
    std::uint64_t total = 0;
    for (const auto& b : buckets) total += choose2(b.size());
    return total;
}

std::vector<IndexPair> expand_pairs(const std::vector<std::vector<std::uint32_t>>& buckets) {
    std::vector<IndexPair> out;
    for (const auto& b : buckets)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) out.emplace_back(b[i], b[j]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

MethodResult from_buckets(std::string method, const std::vector<std::vector<std::uint32_t>>& buckets, std::size_t cap) {
    MethodResult r;
    r.method = std::move(method);
    r.undistinguished = pairs_in(buckets);
    r.pairs = expand_pairs(buckets);
    if (r.pairs.size() > cap) r.pairs.resize(cap);
    return r;
}

}  // namespace

PairReport wl_census(std::span<const Graph> graphs, unsigned threads, std::size_t pair_cap) {
    PairReport rep;
    rep.graph_count = graphs.size();
    rep.pair_count = choose2(graphs.size());

    auto t0 = std::chrono::steady_clock::now();
    const auto buckets = wl1_buckets(graphs, threads);
    rep.methods.push_back(from_buckets("1wl", buckets, pair_cap));
    rep.methods.back().seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::vector<std::uint32_t> members;
    for (const auto& b : buckets) members.insert(members.end(), b.begin(), b.end());
    std::vector<std::string> sigs(graphs.size());
    parallel_for(members.size(), threads, [&](std::size_t k) {
        sigs[members[k]] = wl::fwl2_canonical(graphs[members[k]]).signature;
    });
    std::vector<std::vector<std::uint32_t>> refined;
    for (const auto& b : buckets) {
        auto sub = group_by(std::span<const std::uint32_t>(b), sigs);
        refined.insert(refined.end(), sub.begin(), sub.end());
    }
    std::sort(refined.begin(), refined.end());
    rep.methods.push_back(from_buckets("2fwl", refined, pair_cap));
    rep.methods.back().seconds = seconds_since(t0);
    return rep;
}

std::uint64_t lambda_census(std::span<const Graph> graphs, unsigned threads, double tol) {
    const auto buckets = wl1_buckets(graphs, threads);
    std::vector<std::uint32_t> members;
    for (const auto& b : buckets) members.insert(members.end(), b.begin(), b.end());
    std::vector<double> lmax(graphs.size(), 0.0);
    parallel_for(members.size(), threads, [&](std::size_t k) { lmax[members[k]] = spectral::lambda_max(graphs[members[k]]); });
    std::uint64_t total = 0;
    for (const auto& b : buckets)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) total += std::abs(lmax[b[i]] - lmax[b[j]]) <= tol ? 1 : 0;
    return total;
}

std::uint64_t degree_multiset_pairs(std::span<const Graph> graphs) {
    std::map<std::vector<std::size_t>, std::uint64_t> groups;
    for (const auto& g : graphs) {
        std::vector<std::size_t> d(g.n());
        for (std::size_t v = 0; v < g.n(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        ++groups[d];
    }
    std::uint64_t total = 0;
    for (const auto& [_, c] : groups) total += choose2(c);
    return total;
}

// ---------------------------------------------------------------------------
// Configuration

ExperimentConfig ExperimentConfig::defaults() {
    ExperimentConfig cfg;
    for (auto k : models::kAllModels) cfg.models.push_back(models::default_spec(k));
    return cfg;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view v, std::size_t line) {
    std::istringstream is{std::string(v)};
    T out{};
    is >> out;
    if (!is || !is.eof()) throw std::invalid_argument("config line " + std::to_string(line) + ": bad value '" + std::string(v) + "'");
    return out;
}

bool parse_bool(std::string_view v, std::size_t line) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("config line " + std::to_string(line) + ": expected a boolean");
}

}  // namespace

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
    struct Entry {
        std::string key, value;
        std::size_t line;
    };
    std::vector<Entry> entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        entries.push_back({std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), line_no});
    }

    std::map<models::ModelKind, models::ModelSpec> specs;
    for (auto k : models::kAllModels) specs[k] = models::default_spec(k);
    std::vector<models::ModelKind> selected;
    for (const auto& s : base.models) {
        specs[s.kind] = s;
        selected.push_back(s.kind);
    }
    for (const auto& e : entries) {
        if (e.key != "models") continue;
        selected.clear();
        std::string_view rest = e.value;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto name = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (name.empty()) continue;
            if (name == "all") {
                selected.assign(models::kAllModels.begin(), models::kAllModels.end());
                continue;
            }
            try {
                selected.push_back(models::parse_model(name));
            } catch (const std::invalid_argument& err) {
                throw std::invalid_argument("config line " + std::to_string(e.line) + ": " + err.what());
            }
        }
    }

    ExperimentConfig cfg = base;
    for (const auto& e : entries) {
        const std::string& k = e.key;
        const std::string_view v = e.value;
        if (k == "models") continue;
        if (k == "runs") cfg.runs = parse_number<unsigned>(v, e.line);
        else if (k == "threshold") cfg.threshold = parse_number<double>(v, e.line);
        else if (k == "seed") cfg.base_seed = parse_number<std::uint64_t>(v, e.line);
        else if (k == "threads") cfg.threads = parse_number<unsigned>(v, e.line);
        else if (k == "pair_cap") cfg.pair_cap = parse_number<std::size_t>(v, e.line);
        else if (k == "readout") {
            const auto r = models::parse_readout(v);
            for (auto& [_, s] : specs) s.readout = r;
        } else if (k == "biases") {
            const bool b = parse_bool(v, e.line);
            for (auto& [_, s] : specs) s.biases = b;
        } else if (k == "gat.heads") specs[models::ModelKind::gat].gat_heads = parse_number<unsigned>(v, e.line);
        else if (k == "gat.slope") specs[models::ModelKind::gat].gat_slope = parse_number<double>(v, e.line);
        else if (k == "chebnet.k") specs[models::ModelKind::chebnet].cheb_k = parse_number<unsigned>(v, e.line);
        else if (k == "chebnet.shift") specs[models::ModelKind::chebnet].cheb_shift = parse_number<double>(v, e.line);
        else if (k == "gin.eps") specs[models::ModelKind::gin].gin_eps = parse_number<double>(v, e.line);
        else if (k == "gnnml3.b") specs[models::ModelKind::gnnml3].supports.b = parse_number<double>(v, e.line);
        else if (k == "gnnml3.count") specs[models::ModelKind::gnnml3].supports.count = parse_number<std::size_t>(v, e.line);
        else if (k == "gnnml3.allpass") specs[models::ModelKind::gnnml3].supports.include_allpass = parse_bool(v, e.line);
        else if (k == "gnnml3.basis") {
            auto& s = specs[models::ModelKind::gnnml3].supports;
            if (v == "nlap") s.basis = spectral::BasisKind::normalized_laplacian;
            else if (v == "adj") s.basis = spectral::BasisKind::adjacency;
            else throw std::invalid_argument("config line " + std::to_string(e.line) + ": basis must be nlap or adj");
        } else if (const auto dot = k.find('.'); dot != std::string::npos &&
                                                 (k.substr(dot + 1) == "width" || k.substr(dot + 1) == "layers")) {
            models::ModelKind kind;
            try {
                kind = models::parse_model(k.substr(0, dot));
            } catch (const std::invalid_argument& err) {
                throw std::invalid_argument("config line " + std::to_string(e.line) + ": " + err.what());
            }
            if (k.substr(dot + 1) == "width") specs[kind].width = parse_number<std::size_t>(v, e.line);
            else specs[kind].layers = parse_number<unsigned>(v, e.line);
        } else {
            throw std::invalid_argument("config line " + std::to_string(e.line) + ": unknown key '" + k + "'");
        }
    }
    cfg.models.clear();
    for (auto kind : selected) {
        models::validate(specs[kind]);
        cfg.models.push_back(specs[kind]);
    }
    if (cfg.runs == 0) throw std::invalid_argument("runs must be at least 1");
    if (!(cfg.threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

namespace {

// Shortest text that parses back to the same double.
std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string render_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "runs = " << cfg.runs << "\nthreshold = " << shortest(cfg.threshold) << "\nseed = " << cfg.base_seed
       << "\nthreads = " << cfg.threads << "\npair_cap = " << cfg.pair_cap << "\nmodels = ";
    for (std::size_t i = 0; i < cfg.models.size(); ++i) os << (i ? "," : "") << models::model_name(cfg.models[i].kind);
    os << '\n';
    for (const auto& s : cfg.models) {
        const auto name = models::model_name(s.kind);
        os << name << ".width = " << s.width << '\n' << name << ".layers = " << s.layers << '\n';
        switch (s.kind) {
            case models::ModelKind::gat: os << "gat.heads = " << s.gat_heads << "\ngat.slope = " << shortest(s.gat_slope) << '\n'; break;
            case models::ModelKind::chebnet: os << "chebnet.k = " << s.cheb_k << "\nchebnet.shift = " << shortest(s.cheb_shift) << '\n'; break;
            case models::ModelKind::gin: os << "gin.eps = " << shortest(s.gin_eps) << '\n'; break;
            case models::ModelKind::gnnml3:
                os << "gnnml3.b = " << shortest(s.supports.b) << "\ngnnml3.count = " << s.supports.count << "\ngnnml3.basis = "
                   << (s.supports.basis == spectral::BasisKind::adjacency ? "adj" : "nlap")
                   << "\ngnnml3.allpass = " << (s.supports.include_allpass ? "true" : "false") << '\n';
                break;
            default: break;
        }
    }
    if (!cfg.models.empty()) {
        os << "readout = " << models::readout_name(cfg.models.front().readout) << '\n';
        os << "biases = " << (cfg.models.front().biases ? "true" : "false") << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Distinguishability

std::vector<models::Embedding> embed_all(const models::ModelSpec& spec, std::span<const models::PreparedGraph> graphs,
                                         std::span<const std::uint32_t> which, std::uint64_t seed, unsigned threads) {
    std::vector<models::Embedding> out(graphs.size());
    if (which.empty()) return out;
    const models::WeightSet ws = models::make_weights(spec, seed, graphs[which.front()].x.cols());
    parallel_for(which.size(), threads, [&](std::size_t k) { out[which[k]] = models::embed(spec, ws, graphs[which[k]]); });
    return out;
}

namespace {

struct Cell {
    std::int64_t x, y;
    bool operator==(const Cell&) const = default;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        return std::hash<std::uint64_t>{}(models::splitmix64(static_cast<std::uint64_t>(c.x)) ^
                                          static_cast<std::uint64_t>(c.y));
    }
};

std::int64_t cell_coord(double v, double width) {
    const double q = std::floor(v / width);
    constexpr double lim = 4.0e18;
    return static_cast<std::int64_t>(std::clamp(q, -lim, lim));
}

bool finite(const models::Embedding& e) {
    return std::all_of(e.begin(), e.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

std::vector<IndexPair> close_pairs(std::span<const models::Embedding> emb, std::span<const std::uint32_t> which,
                                   double threshold) {
    std::unordered_map<Cell, std::vector<std::uint32_t>, CellHash> grid;
    std::vector<std::uint32_t> live;
    for (auto i : which) {
        const auto& e = emb[i];
        if (!finite(e)) continue;  // a non-finite distance is never <= threshold
        live.push_back(i);
        const double y = e.size() > 1 ? e[1] : 0.0;
        grid[{cell_coord(e[0], threshold), cell_coord(y, threshold)}].push_back(i);
    }
    std::vector<IndexPair> out;
    for (auto i : live) {
        const auto& e = emb[i];
        const Cell c{cell_coord(e[0], threshold), cell_coord(e.size() > 1 ? e[1] : 0.0, threshold)};
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = grid.find({c.x + dx, c.y + dy});
                if (it == grid.end()) continue;
                for (auto j : it->second)
                    if (j > i && models::manhattan(e, emb[j]) <= threshold) out.emplace_back(i, j);
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<models::PreparedGraph> prepare_all(const models::ModelSpec& spec, std::span<const Graph> graphs,
                                               unsigned threads) {
    std::vector<models::PreparedGraph> out(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) { out[i] = models::prepare(spec, graphs[i]); });
    for (const auto& pg : out)
        if (pg.x.cols() != out.front().x.cols()) throw std::invalid_argument("graphs have different feature widths");
    return out;
}

// Degree column unless the first graph carries its own features.
std::size_t input_width(std::span<const Graph> graphs) {
    if (graphs.empty() || !graphs.front().node_features()) return 1;
    return graphs.front().node_features()->cols();
}

MethodResult finish(const models::ModelSpec& spec, std::vector<IndexPair> pairs, std::size_t cap, std::size_t in_dim) {
    MethodResult r;
    r.method = std::string(models::model_name(spec.kind));
    r.undistinguished = pairs.size();
    if (pairs.size() > cap) pairs.resize(cap);
    r.pairs = std::move(pairs);
    r.parameters = models::parameter_count(spec, in_dim);
    return r;
}

}  // namespace

MethodResult undistinguished_pairs(const models::ModelSpec& spec, std::span<const Graph> graphs,
                                   const ExperimentConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    if (graphs.size() < 2) {
        MethodResult r = finish(spec, {}, cfg.pair_cap, input_width(graphs));
        r.seconds = seconds_since(t0);
        return r;
    }
    const auto prepared = prepare_all(spec, graphs, cfg.threads);
    const auto all = iota_indices(graphs.size());

    auto emb = embed_all(spec, prepared, all, models::run_seed(cfg.base_seed, 0), cfg.threads);
    std::vector<IndexPair> cands = close_pairs(emb, all, cfg.threshold);
    for (unsigned run = 1; run < cfg.runs && !cands.empty(); ++run) {
        std::vector<std::uint32_t> active;
        for (auto [i, j] : cands) {
            active.push_back(i);
            active.push_back(j);
        }
        std::sort(active.begin(), active.end());
        active.erase(std::unique(active.begin(), active.end()), active.end());
        emb = embed_all(spec, prepared, active, models::run_seed(cfg.base_seed, run), cfg.threads);
        std::erase_if(cands, [&](const IndexPair& p) { return !(models::manhattan(emb[p.first], emb[p.second]) <= cfg.threshold); });
    }
    MethodResult r = finish(spec, std::move(cands), cfg.pair_cap, input_width(graphs));
    r.seconds = seconds_since(t0);
    return r;
}

MethodResult undistinguished_pairs_naive(const models::ModelSpec& spec, std::span<const Graph> graphs,
                                         const ExperimentConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = graphs.size();
    std::vector<bool> alive(n * n, true);
    std::vector<IndexPair> pairs;
    if (n >= 2) {
        const auto prepared = prepare_all(spec, graphs, cfg.threads);
        const auto all = iota_indices(n);
        for (unsigned run = 0; run < cfg.runs; ++run) {
            const auto emb = embed_all(spec, prepared, all, models::run_seed(cfg.base_seed, run), cfg.threads);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (alive[i * n + j] && !(models::manhattan(emb[i], emb[j]) <= cfg.threshold)) alive[i * n + j] = false;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (alive[i * n + j]) pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
    MethodResult r = finish(spec, std::move(pairs), cfg.pair_cap, input_width(graphs));
    r.seconds = seconds_since(t0);
    return r;
}

PairReport distinguishability_run(std::span<const Graph> graphs, const ExperimentConfig& cfg, std::string dataset) {
    PairReport rep;
    rep.dataset = std::move(dataset);
    rep.graph_count = graphs.size();
    rep.pair_count = graphs.empty() ? 0 : choose2(graphs.size());
    for (const auto& spec : cfg.models) {
        try {
            rep.methods.push_back(undistinguished_pairs(spec, graphs, cfg));
        } catch (const std::exception& e) {
            MethodResult r;
            r.method = std::string(models::model_name(spec.kind));
            r.error = e.what();
            rep.methods.push_back(std::move(r));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Rendering

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

nlohmann::ordered_json to_json(const PairReport& r) {
    nlohmann::ordered_json j;
    j["dataset"] = r.dataset;
    j["graph_count"] = r.graph_count;
    j["pair_count"] = r.pair_count;
    j["methods"] = nlohmann::ordered_json::array();
    for (const auto& m : r.methods) {
        nlohmann::ordered_json mj;
        mj["method"] = m.method;
        mj["undistinguished"] = m.undistinguished;
        mj["parameters"] = m.parameters ? nlohmann::ordered_json(*m.parameters) : nlohmann::ordered_json(nullptr);
        mj["seconds"] = m.seconds;
        mj["error"] = m.error;
        auto pairs = nlohmann::ordered_json::array();
        for (auto [a, b] : m.pairs) pairs.push_back({a, b});
        mj["pairs"] = std::move(pairs);
        j["methods"].push_back(std::move(mj));
    }
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> method_order(std::span<const PairReport> reports) {
    std::vector<std::string> order;
    for (const auto& r : reports)
        for (const auto& m : r.methods)
            if (std::find(order.begin(), order.end(), m.method) == order.end()) order.push_back(m.method);
    return order;
}

std::string cell_value(const PairReport& r, const std::string& method) {
    const auto* m = r.find(method);
    if (!m) return "";
    if (!m->error.empty()) return "error";
    return std::to_string(m->undistinguished);
}

}  // namespace

std::string report_render(const PairReport& report, Format format) {
    switch (format) {
        case Format::json: return to_json(report).dump(2) + "\n";
        case Format::csv: return report_render(std::span<const PairReport>(&report, 1), Format::csv);
        case Format::text: {
            std::ostringstream os;
            os << "dataset: " << report.dataset << "  graphs: " << report.graph_count << "  pairs: " << report.pair_count
               << '\n';
            os << std::left << std::setw(16) << "method" << std::right << std::setw(16) << "undistinguished"
               << std::setw(12) << "parameters" << std::setw(10) << "seconds" << '\n';
            for (const auto& m : report.methods) {
                os << std::left << std::setw(16) << m.method << std::right;
                if (!m.error.empty()) {
                    os << "  error: " << m.error << '\n';
                    continue;
                }
                os << std::setw(16) << m.undistinguished << std::setw(12)
                   << (m.parameters ? std::to_string(*m.parameters) : std::string("-")) << std::setw(10) << std::fixed
                   << std::setprecision(2) << m.seconds << '\n';
                os.unsetf(std::ios::fixed);
            }
            return os.str();
        }
    }
    return {};
}

std::string report_render(std::span<const PairReport> reports, Format format) {
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r));
        return j.dump(2) + "\n";
    }
    const auto methods = method_order(reports);
    std::ostringstream os;
    if (format == Format::csv) {
        os << "method";
        for (const auto& r : reports) os << ',' << csv_field(r.dataset);
        os << '\n';
        for (const auto& m : methods) {
            os << csv_field(m);
            for (const auto& r : reports) os << ',' << cell_value(r, m);
            os << '\n';
        }
        return os.str();
    }
    os << std::left << std::setw(16) << "method" << std::right;
    for (const auto& r : reports) os << std::setw(14) << r.dataset;
    os << '\n';
    for (const auto& m : methods) {
        os << std::left << std::setw(16) << m << std::right;
        for (const auto& r : reports) os << std::setw(14) << cell_value(r, m);
        os << '\n';
    }
    return os.str();
}

PairReport report_from_json(std::string_view json) {
    const auto j = nlohmann::json::parse(json);
    PairReport r;
    r.dataset = j.at("dataset").get<std::string>();
    r.graph_count = j.at("graph_count").get<std::size_t>();
    r.pair_count = j.at("pair_count").get<std::uint64_t>();
    for (const auto& mj : j.at("methods")) {
        MethodResult m;
        m.method = mj.at("method").get<std::string>();
        m.undistinguished = mj.at("undistinguished").get<std::uint64_t>();
        if (!mj.at("parameters").is_null()) m.parameters = mj.at("parameters").get<std::size_t>();
        m.seconds = mj.at("seconds").get<double>();
        m.error = mj.at("error").get<std::string>();
        for (const auto& p : mj.at("pairs")) m.pairs.emplace_back(p.at(0).get<std::uint32_t>(), p.at(1).get<std::uint32_t>());
        r.methods.push_back(std::move(m));
    }
    return r;
}

}  // namespace gnnbench::harness
