#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gnnbench/dataset.hpp"
#include "gnnbench/golden.hpp"
#include "gnnbench/graphlets.hpp"
#include "gnnbench/harness.hpp"
#include "gnnbench/matlang.hpp"
#include "gnnbench/models.hpp"
#include "gnnbench/spectral.hpp"
#include "gnnbench/wl.hpp"

namespace fs = std::filesystem;
using namespace gnnbench;
using json = nlohmann::ordered_json;

namespace {

// Bad input from the command line: reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string config_path;
    std::optional<unsigned> threads;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "text";
    std::string input_format = "auto";
};

class Session {
public:
    explicit Session(const Globals& g) : g_(g) {}

    harness::Format format() const { return harness::parse_format(g_.format); }

    void emit(const std::string& text) const {
        if (g_.out_path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream os(g_.out_path);
        if (!os) throw UsageError("cannot write " + g_.out_path);
        os << text;
    }

    const std::vector<Graph>& dataset(const std::string& path) {
        if (auto it = cache_.find(path); it != cache_.end()) return it->second;
        if (!fs::exists(path)) throw UsageError("no such file: " + path);
        DatasetFormat fmt = DatasetFormat::graph6;
        if (g_.input_format == "auto") {
            if (fs::path(path).extension() == ".json") fmt = DatasetFormat::edgelist_json;
        } else {
            fmt = parse_dataset_format(g_.input_format);
        }
        return cache_.emplace(path, load_dataset(path, fmt)).first->second;
    }

    /// "file" or "file:i"; a bare file must hold exactly one graph unless index is given.
    const Graph& graph(const std::string& ref, std::optional<std::size_t> index = std::nullopt) {
        auto [path, idx] = split_ref(ref);
        if (!idx) idx = index;
        const auto& graphs = dataset(path);
        if (!idx) {
            if (graphs.size() != 1) throw UsageError(ref + " holds " + std::to_string(graphs.size()) + " graphs; use file:i");
            idx = 0;
        }
        if (*idx >= graphs.size()) throw UsageError(ref + ": index out of range (" + std::to_string(graphs.size()) + " graphs)");
        return graphs[*idx];
    }

    static std::pair<std::string, std::optional<std::size_t>> split_ref(const std::string& ref) {
        const auto colon = ref.rfind(':');
        if (colon == std::string::npos || colon + 1 == ref.size()) return {ref, std::nullopt};
        const std::string tail = ref.substr(colon + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos) return {ref, std::nullopt};
        return {ref.substr(0, colon), std::stoull(tail)};
    }

    std::string config_text() const {
        if (g_.config_path.empty()) return {};
        std::ifstream is(g_.config_path);
        if (!is) throw UsageError("cannot read config " + g_.config_path);
        std::ostringstream buf;
        buf << is.rdbuf();
        return buf.str() + "\n";
    }

    harness::ExperimentConfig config(const std::string& models = {}) const {
        std::string text = config_text();
        if (!models.empty()) text += "models = " + models + "\n";
        harness::ExperimentConfig cfg;
        try {
            cfg = harness::parse_config(text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (g_.threads) cfg.threads = *g_.threads;
        if (g_.seed) cfg.base_seed = *g_.seed;
        return cfg;
    }

    models::ModelSpec spec(models::ModelKind kind) const {
        return config(std::string(models::model_name(kind))).models.front();
    }

    std::uint64_t seed() const { return config().base_seed; }

private:
    const Globals& g_;
    std::map<std::string, std::vector<Graph>> cache_;
};

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

std::string fmt_double(double v, int precision = 10) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

int cmd_census(Session& s, const std::vector<std::string>& files) {
    const auto cfg = s.config();
    std::vector<harness::PairReport> reports;
    for (const auto& f : files) {
        auto rep = harness::wl_census(s.dataset(f), cfg.threads, cfg.pair_cap);
        rep.dataset = stem(f);
        reports.push_back(std::move(rep));
    }
    s.emit(reports.size() == 1 ? harness::report_render(reports.front(), s.format())
                               : harness::report_render(reports, s.format()));
    return 0;
}

int cmd_lambda_census(Session& s, const std::vector<std::string>& files, double tol) {
    const auto cfg = s.config();
    json out = json::array();
    std::ostringstream text, csv;
    csv << "dataset,count\n";
    for (const auto& f : files) {
        const auto n = harness::lambda_census(s.dataset(f), cfg.threads, tol);
        out.push_back({{"dataset", stem(f)}, {"tolerance", tol}, {"count", n}});
        text << stem(f) << ": " << n << " 1-WL-equivalent pairs with equal lambda_max\n";
        csv << stem(f) << ',' << n << '\n';
    }
    switch (s.format()) {
        case harness::Format::json: s.emit(out.dump(2) + "\n"); break;
        case harness::Format::csv: s.emit(csv.str()); break;
        case harness::Format::text: s.emit(text.str()); break;
    }
    return 0;
}

struct DistinguishArgs {
    std::vector<std::string> files;
    std::string models;
    std::optional<unsigned> runs;
    std::optional<double> threshold;
    bool naive = false;
};

int cmd_distinguish(Session& s, const DistinguishArgs& a) {
    auto cfg = s.config(a.models);
    if (a.runs) cfg.runs = *a.runs;
    if (a.threshold) cfg.threshold = *a.threshold;
    if (cfg.runs == 0 || !(cfg.threshold > 0.0)) throw UsageError("runs must be >= 1 and threshold > 0");
    bool failed = false;
    std::vector<harness::PairReport> reports;
    for (const auto& f : a.files) {
        const auto& graphs = s.dataset(f);
        harness::PairReport rep;
        if (a.naive) {
            rep.dataset = stem(f);
            rep.graph_count = graphs.size();
            rep.pair_count = graphs.size() < 2 ? 0 : graphs.size() * (graphs.size() - 1) / 2;
            for (const auto& spec : cfg.models) rep.methods.push_back(harness::undistinguished_pairs_naive(spec, graphs, cfg));
        } else {
            rep = harness::distinguishability_run(graphs, cfg, stem(f));
        }
        const bool has_mlp = std::any_of(cfg.models.begin(), cfg.models.end(),
                                         [](const auto& m) { return m.kind == models::ModelKind::mlp; });
        if (has_mlp) {
            harness::MethodResult oracle;
            oracle.method = "degree-oracle";
            oracle.undistinguished = harness::degree_multiset_pairs(graphs);
            rep.methods.push_back(std::move(oracle));
        }
        for (const auto& m : rep.methods) failed = failed || !m.error.empty();
        reports.push_back(std::move(rep));
    }
    s.emit(reports.size() == 1 ? harness::report_render(reports.front(), s.format())
                               : harness::report_render(reports, s.format()));
    return failed ? 1 : 0;
}

int cmd_golden(Session& s) {
    const auto report = golden::run_suite();
    if (s.format() == harness::Format::json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual},
                              {"tolerance", c.tolerance}, {"pass", c.pass}});
        s.emit(json{{"checks", checks}, {"failures", report.failures()}, {"seconds", report.seconds}}.dump(2) + "\n");
    } else if (s.format() == harness::Format::csv) {
        std::ostringstream os;
        os << "name,expected,actual,tolerance,pass\n";
        for (const auto& c : report.checks)
            os << '"' << c.name << "\"," << fmt_double(c.expected) << ',' << fmt_double(c.actual) << ','
               << c.tolerance << ',' << (c.pass ? 1 : 0) << '\n';
        s.emit(os.str());
    } else {
        std::ostringstream os;
        for (const auto& c : report.checks)
            os << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << fmt_double(c.expected) << ", got "
               << fmt_double(c.actual) << " (tol " << c.tolerance << ")\n";
        os << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed in "
           << fmt_double(report.seconds, 3) << " s\n";
        s.emit(os.str());
    }
    return report.all_pass() ? 0 : 1;
}

matlang::Fragment parse_fragment(const std::string& name) {
    if (name == "L1") return matlang::Fragment::L1;
    if (name == "L2") return matlang::Fragment::L2;
    if (name == "L3") return matlang::Fragment::L3;
    throw UsageError("fragment must be L1, L2 or L3");
}

std::string fragment_label(const matlang::OpSet& ops) {
    static const char* names[] = {"L1", "L2", "L3"};
    return std::string(names[static_cast<int>(ops.base)]) + (ops.enriched ? "+" : "");
}

struct EvalArgs {
    std::string expr;
    std::string graph;
    std::optional<std::size_t> index;
    std::string fragment;
    bool enriched = false;
};

int cmd_eval(Session& s, const EvalArgs& a) {
    matlang::ExprPtr e;
    try {
        e = matlang::parse(a.expr);
    } catch (const matlang::SyntaxError& err) {
        throw UsageError(std::string("syntax error at offset ") + std::to_string(err.position()) + ": " + err.what());
    }
    const auto minimal = matlang::minimal_fragment(*e);
    std::optional<bool> verdict;
    matlang::OpSet ops;
    if (!a.fragment.empty()) {
        ops = {parse_fragment(a.fragment), a.enriched};
        verdict = matlang::fragment_check(*e, ops);
    }

    auto [path, idx] = Session::split_ref(a.graph);
    if (!idx) idx = a.index;
    const auto& graphs = s.dataset(path);
    std::vector<std::size_t> which;
    if (idx) {
        if (*idx >= graphs.size()) throw UsageError("graph index out of range");
        which.push_back(*idx);
    } else {
        for (std::size_t i = 0; i < graphs.size(); ++i) which.push_back(i);
    }

    json values = json::array();
    std::ostringstream text;
    text << "expression: " << matlang::to_string(*e) << '\n';
    for (auto i : which) {
        const Graph& g = graphs[i];
        const auto shape = matlang::shape_check(*e, g.n());
        const Matrix m = matlang::eval(*e, matlang::Binding{{"A", g.adjacency()}}, g.n());
        if (shape.is_sentence()) {
            values.push_back({{"graph", i}, {"value", m(0, 0)}});
            text << "graph " << i << ": " << fmt_double(m(0, 0), 17) << '\n';
        } else {
            values.push_back({{"graph", i}, {"rows", m.rows()}, {"cols", m.cols()},
                              {"values", std::vector<double>(m.data().begin(), m.data().end())}});
            text << "graph " << i << " (" << m.rows() << "x" << m.cols() << "):\n" << to_string(m, 6) << '\n';
        }
    }
    text << "minimal fragment: " << fragment_label(minimal) << '\n';
    if (verdict) text << "in " << fragment_label(ops) << ": " << (*verdict ? "yes" : "no") << '\n';

    if (s.format() == harness::Format::json) {
        json j{{"expression", matlang::to_string(*e)}, {"minimal_fragment", fragment_label(minimal)}, {"results", values}};
        if (verdict) j["fragment"] = {{"name", fragment_label(ops)}, {"allowed", *verdict}};
        s.emit(j.dump(2) + "\n");
    } else {
        s.emit(text.str());
    }
    return 0;
}

int cmd_wl(Session& s, const std::string& test, const std::string& a, const std::string& b) {
    const Graph& g = s.graph(a);
    const Graph& h = s.graph(b);
    json j{{"test", test}, {"a", a}, {"b", b}};
    std::ostringstream text;
    if (test == "3fwl-stat") {
        const double x = wl::fwl3_tensor_statistic(g), y = wl::fwl3_tensor_statistic(h);
        j["a_value"] = x;
        j["b_value"] = y;
        j["equivalent"] = x == y;
        text << "3fwl-stat: " << fmt_double(x, 17) << " vs " << fmt_double(y, 17) << " -> "
             << (x == y ? "equal" : "differ") << '\n';
    } else {
        wl::PairVerdict v;
        if (test == "1wl") v = wl::wl1_equivalent(g, h);
        else if (test == "2wl") v = wl::wl2_equivalent(g, h);
        else if (test == "2fwl") v = wl::fwl2_equivalent(g, h);
        else throw UsageError("test must be 1wl, 2wl, 2fwl or 3fwl-stat");
        j["equivalent"] = v.equivalent;
        j["separating_iteration"] = v.separating_iteration ? json(*v.separating_iteration) : json(nullptr);
        text << test << ": ";
        if (v.equivalent) text << "equivalent\n";
        else text << "distinguished at iteration " << *v.separating_iteration << '\n';
    }
    s.emit(s.format() == harness::Format::json ? j.dump(2) + "\n" : text.str());
    return 0;
}

struct SupportsArgs {
    std::string graph;
    std::string basis = "nlap";
    std::string mask = "adj";
    double b = 5.0;
    std::size_t count = 5;
    bool no_allpass = false;
};

int cmd_supports(Session& s, const SupportsArgs& a) {
    spectral::SupportSpec spec;
    if (a.basis == "nlap") spec.basis = spectral::BasisKind::normalized_laplacian;
    else if (a.basis == "adj") spec.basis = spectral::BasisKind::adjacency;
    else throw UsageError("basis must be nlap or adj");
    if (a.mask == "adj") spec.mask = spectral::MaskKind::adjacency_plus_identity;
    else if (a.mask == "full") spec.mask = spectral::MaskKind::full;
    else throw UsageError("mask must be adj or full");
    if (!(a.b > 0.0) || a.count == 0) throw UsageError("need b > 0 and count >= 1");
    spec.b = a.b;
    spec.count = a.count;
    spec.include_allpass = !a.no_allpass;

    const Graph& g = s.graph(a.graph);
    const auto set = spectral::build_supports(g, spec);
    if (s.format() == harness::Format::json) {
        json mask = json::array(), feats = json::array();
        for (std::size_t r = 0; r < set.mask_index.size(); ++r) {
            mask.push_back({set.mask_index[r].first, set.mask_index[r].second});
            const auto row = set.features.row(r);
            feats.push_back(std::vector<double>(row.begin(), row.end()));
        }
        s.emit(json{{"n", set.n}, {"basis", a.basis}, {"b", a.b}, {"count", a.count}, {"allpass", spec.include_allpass},
                    {"mask", mask}, {"features", feats}}
                   .dump(2) +
               "\n");
        return 0;
    }
    const char sep = s.format() == harness::Format::csv ? ',' : ' ';
    std::ostringstream os;
    os << "i" << sep << "j";
    for (std::size_t c = 0; c < set.features.cols(); ++c) os << sep << "s" << c;
    os << '\n';
    for (std::size_t r = 0; r < set.mask_index.size(); ++r) {
        os << set.mask_index[r].first << sep << set.mask_index[r].second;
        for (double v : set.features.row(r)) os << sep << fmt_double(v, 8);
        os << '\n';
    }
    s.emit(os.str());
    return 0;
}

struct CountArgs {
    std::string graph;
    std::optional<std::size_t> index;
    std::string pattern = "all";
    bool oracle = false;
};

int cmd_count(Session& s, const CountArgs& a) {
    std::vector<graphlets::PatternKind> kinds;
    if (a.pattern == "all") {
        kinds = {graphlets::PatternKind::three_star, graphlets::PatternKind::triangle,
                 graphlets::PatternKind::tailed_triangle, graphlets::PatternKind::four_cycle};
    } else {
        try {
            kinds.push_back(graphlets::parse_pattern(a.pattern));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    auto [path, idx] = Session::split_ref(a.graph);
    if (!idx) idx = a.index;
    const auto& graphs = s.dataset(path);
    std::vector<std::size_t> which;
    if (idx) {
        if (*idx >= graphs.size()) throw UsageError("graph index out of range");
        which.push_back(*idx);
    } else {
        for (std::size_t i = 0; i < graphs.size(); ++i) which.push_back(i);
    }

    bool mismatch = false;
    json rows = json::array();
    std::ostringstream text, csv;
    text << std::left << std::setw(8) << "graph";
    csv << "graph";
    for (auto k : kinds) {
        const std::string name(graphlets::pattern_name(k));
        text << std::right << std::setw(12) << name;
        csv << ',' << name;
        if (a.oracle) {
            text << std::setw(12) << name + "*";
            csv << ',' << name << "_enum";
        }
    }
    text << '\n';
    csv << '\n';
    for (auto i : which) {
        const Graph& g = graphs[i];
        json row{{"graph", i}};
        text << std::left << std::setw(8) << i << std::right;
        csv << i;
        for (auto k : kinds) {
            const auto closed = graphlets::count(g, k);
            const std::string name(graphlets::pattern_name(k));
            row[name] = closed;
            text << std::setw(12) << closed;
            csv << ',' << closed;
            if (a.oracle) {
                const auto enumerated = graphlets::enumerate_pattern(g, k);
                mismatch = mismatch || enumerated != closed;
                row[name + "_enum"] = enumerated;
                text << std::setw(12) << enumerated;
                csv << ',' << enumerated;
            }
        }
        text << '\n';
        csv << '\n';
        rows.push_back(std::move(row));
    }
    if (a.oracle) text << (mismatch ? "oracle: MISMATCH\n" : "oracle: all counts agree\n");
    switch (s.format()) {
        case harness::Format::json: s.emit(json{{"counts", rows}, {"oracle_agrees", !mismatch}}.dump(2) + "\n"); break;
        case harness::Format::csv: s.emit(csv.str()); break;
        case harness::Format::text: s.emit(text.str()); break;
    }
    return mismatch ? 1 : 0;
}

int cmd_embed(Session& s, const std::string& model, const std::string& graph, unsigned seeds) {
    models::ModelKind kind;
    try {
        kind = models::parse_model(model);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto spec = s.spec(kind);
    const auto base = s.seed();
    const Graph& g = s.graph(graph);
    const std::size_t in_dim = g.node_features() ? g.node_features()->cols() : 1;
    const auto pg = models::prepare(spec, g);
    json runs = json::array();
    std::ostringstream text;
    for (unsigned i = 0; i < seeds; ++i) {
        const auto seed = models::run_seed(base, i);
        const auto emb = models::embed(spec, models::make_weights(spec, seed, in_dim), pg);
        runs.push_back({{"run", i}, {"seed", seed}, {"embedding", emb}});
        text << i;
        for (double v : emb) text << ' ' << fmt_double(v, 17);
        text << '\n';
    }
    if (s.format() == harness::Format::json)
        s.emit(json{{"model", model}, {"graph", graph}, {"width", spec.width},
                    {"parameters", models::parameter_count(spec, in_dim)}, {"base_seed", base}, {"runs", runs}}
                   .dump(2) +
               "\n");
    else
        s.emit(text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph expressiveness testbench"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config_path, "Experiment config file (key = value lines)");
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
    app.add_option("--seed", g.seed, "Base seed");
    app.add_option("--out", g.out_path, "Write output to this path");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--input-format", g.input_format, "Dataset format (auto picks json by extension)")
        ->check(CLI::IsMember({"auto", "graph6", "json"}));

    std::vector<std::string> census_files;
    auto* census = app.add_subcommand("census", "1-WL and 2-FWL equivalent pair counts");
    census->add_option("--dataset,dataset", census_files, "Dataset files")->required();

    std::vector<std::string> lambda_files;
    double lambda_tol = 1e-6;
    auto* lambda = app.add_subcommand("lambda-census", "1-WL-equivalent pairs with equal lambda_max");
    lambda->add_option("--dataset,dataset", lambda_files, "Dataset files")->required();
    lambda->add_option("--tol", lambda_tol, "Eigenvalue tolerance");

    DistinguishArgs dist;
    auto* distinguish = app.add_subcommand("distinguish", "Random-weight distinguishability run");
    distinguish->add_option("--dataset,dataset", dist.files, "Dataset files")->required();
    distinguish->add_option("--models", dist.models, "Comma list of models, or all");
    distinguish->add_option("--runs", dist.runs, "Independent runs");
    distinguish->add_option("--threshold", dist.threshold, "Manhattan distance threshold");
    distinguish->add_flag("--naive", dist.naive, "Compare all pairs every run");

    auto* goldencmd = app.add_subcommand("golden", "Reference-pair numeric checks");

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate a matrix-language expression");
    eval->add_option("--expr", ev.expr, "Expression")->required();
    eval->add_option("--graph", ev.graph, "Graph file or file:i")->required();
    eval->add_option("--index", ev.index, "Graph index within the file");
    eval->add_option("--fragment", ev.fragment, "Check membership in L1, L2 or L3");
    eval->add_flag("--enriched", ev.enriched, "Allow +, scalar multiples and element-wise functions");

    std::string wl_test = "1wl", wl_a, wl_b;
    auto* wlcmd = app.add_subcommand("wl", "Weisfeiler-Lehman equivalence of two graphs");
    wlcmd->add_option("--test", wl_test, "1wl, 2wl, 2fwl or 3fwl-stat");
    wlcmd->add_option("--a", wl_a, "First graph (file:i)")->required();
    wlcmd->add_option("--b", wl_b, "Second graph (file:i)")->required();

    SupportsArgs sup;
    auto* supports = app.add_subcommand("supports", "Spectral supports of a graph as edge features");
    supports->add_option("--graph", sup.graph, "Graph (file:i)")->required();
    supports->add_option("--basis", sup.basis, "nlap or adj");
    supports->add_option("--mask", sup.mask, "adj (A + I) or full");
    supports->add_option("--b", sup.b, "Bandwidth");
    supports->add_option("--count", sup.count, "Number of supports");
    supports->add_flag("--no-allpass", sup.no_allpass, "Omit the all-pass support");

    CountArgs cnt;
    auto* count = app.add_subcommand("count", "Graphlet counts from closed forms");
    count->add_option("--graph", cnt.graph, "Graph file or file:i")->required();
    count->add_option("--index", cnt.index, "Graph index within the file");
    count->add_option("--pattern", cnt.pattern, "all, 3star, tri, tailedtri or 4cycle");
    count->add_flag("--oracle", cnt.oracle, "Cross-check by exhaustive enumeration");

    std::string emb_model = "gnnml3", emb_graph;
    unsigned emb_seeds = 1;
    auto* embed = app.add_subcommand("embed", "Graph embeddings for a sequence of seeds");
    embed->add_option("--model", emb_model, "Model name");
    embed->add_option("--graph", emb_graph, "Graph (file:i)")->required();
    embed->add_option("--seeds", emb_seeds, "Number of runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Session s(g);
    try {
        if (*census) return cmd_census(s, census_files);
        if (*lambda) return cmd_lambda_census(s, lambda_files, lambda_tol);
        if (*distinguish) return cmd_distinguish(s, dist);
        if (*goldencmd) return cmd_golden(s);
        if (*eval) return cmd_eval(s, ev);
        if (*wlcmd) return cmd_wl(s, wl_test, wl_a, wl_b);
        if (*supports) return cmd_supports(s, sup);
        if (*count) return cmd_count(s, cnt);
        if (*embed) return cmd_embed(s, emb_model, emb_graph, emb_seeds);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Graph6Error& e) {
        std::cerr << "error: graph6 byte " << e.offset() << ": " << e.what() << '\n';
        return 2;
    } catch (const DatasetError& e) {
        std::cerr << "error: record " << e.line() << ": " << e.what() << '\n';
        return 2;
    } catch (const matlang::ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const matlang::EvalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
