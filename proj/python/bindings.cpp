#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gnnbench/dataset.hpp"
#include "gnnbench/golden.hpp"
#include "gnnbench/graph.hpp"
#include "gnnbench/graphlets.hpp"
#include "gnnbench/harness.hpp"
#include "gnnbench/matlang.hpp"
#include "gnnbench/models.hpp"
#include "gnnbench/spectral.hpp"
#include "gnnbench/wl.hpp"

namespace py = pybind11;
using namespace gnnbench;

namespace {

py::array_t<double> to_numpy(const Matrix& m) {
    py::array_t<double> out({m.rows(), m.cols()});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
    return out;
}

Matrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
    Matrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    auto view = a.unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = view(r, c);
    return m;
}

wl::Test parse_test(const std::string& name) {
    if (name == "1wl") return wl::Test::wl1;
    if (name == "2wl") return wl::Test::wl2;
    if (name == "2fwl") return wl::Test::fwl2;
    throw std::invalid_argument("unknown test '" + name + "' (expected 1wl, 2wl or 2fwl)");
}

spectral::SupportSpec support_spec(const std::string& basis, double b, std::size_t count, bool allpass,
                                   const std::string& mask) {
    spectral::SupportSpec spec;
    if (basis == "adj") spec.basis = spectral::BasisKind::adjacency;
    else if (basis != "nlap") throw std::invalid_argument("basis must be nlap or adj");
    if (mask == "full") spec.mask = spectral::MaskKind::full;
    else if (mask != "adj") throw std::invalid_argument("mask must be adj or full");
    spec.b = b;
    spec.count = count;
    spec.include_allpass = allpass;
    return spec;
}

harness::ExperimentConfig experiment(const std::string& config, unsigned threads) {
    auto cfg = harness::parse_config(config);
    cfg.threads = threads;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph expressiveness testbench: WL tests, matrix language, spectral supports and random-weight GNNs.";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<DatasetError>(m, "DatasetError", PyExc_ValueError);
    py::register_exception<matlang::SyntaxError>(m, "SyntaxError", PyExc_ValueError);
    py::register_exception<matlang::ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<matlang::EvalError>(m, "EvalError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
                 return Graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_static("from_adjacency", [](const py::array_t<double>& a) { return Graph::from_adjacency(from_numpy(a)); })
        .def_static("from_graph6", &parse_graph6)
        .def("to_graph6", &encode_graph6)
        .def_property_readonly("n", &Graph::n)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("adjacency", [](const Graph& g) { return to_numpy(g.adjacency()); })
        .def("permuted", [](const Graph& g, const std::vector<std::size_t>& p) { return g.permuted(p); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("load_dataset", [](const std::string& path, const std::string& format) {
        return load_dataset(path, parse_dataset_format(format));
    }, py::arg("path"), py::arg("format") = "graph6");
    m.def("parse_graph6_lines", &parse_graph6_lines);
    m.def("parse_edgelist_json", &parse_edgelist_json);

    m.def("eval_sentence", [](const std::string& text, const Graph& g) {
        return matlang::eval_sentence(*matlang::parse(text), g);
    }, py::arg("expr"), py::arg("graph"));
    m.def("eval_expr", [](const std::string& text, const Graph& g) {
        return to_numpy(matlang::eval(*matlang::parse(text), matlang::Binding{{"A", g.adjacency()}}, g.n()));
    }, py::arg("expr"), py::arg("graph"));
    m.def("minimal_fragment", [](const std::string& text) {
        const auto f = matlang::minimal_fragment(*matlang::parse(text));
        const char* base = f.base == matlang::Fragment::L1 ? "L1" : f.base == matlang::Fragment::L2 ? "L2" : "L3";
        return py::make_tuple(base, f.enriched);
    });

    m.def("wl_signature", [](const Graph& g, const std::string& test) {
        return wl::canonical(parse_test(test), g).signature;
    }, py::arg("graph"), py::arg("test") = "1wl");
    m.def("wl_equivalent", [](const Graph& g, const Graph& h, const std::string& test) {
        const auto t = parse_test(test);
        return wl::compare(wl::canonical(t, g), wl::canonical(t, h), t).equivalent;
    }, py::arg("g"), py::arg("h"), py::arg("test") = "1wl");
    m.def("fwl3_tensor_statistic", &wl::fwl3_tensor_statistic);

    m.def("eig_sym", [](const py::array_t<double>& a) {
        const auto basis = spectral::eig_sym(from_numpy(a));
        return py::make_tuple(basis.lambda, to_numpy(basis.u));
    });
    m.def("lambda_max", &spectral::lambda_max);
    m.def("dense_supports", [](const Graph& g, const std::string& basis, double b, std::size_t count, bool allpass,
                               const std::string& mask) {
        std::vector<py::array_t<double>> out;
        for (const auto& s : spectral::dense_supports(g, support_spec(basis, b, count, allpass, mask))) out.push_back(to_numpy(s));
        return out;
    }, py::arg("graph"), py::arg("basis") = "nlap", py::arg("b") = 5.0, py::arg("count") = 5, py::arg("allpass") = true,
          py::arg("mask") = "adj");

    m.def("count_pattern", [](const Graph& g, const std::string& p) { return graphlets::count(g, graphlets::parse_pattern(p)); });
    m.def("enumerate_pattern", [](const Graph& g, const std::string& p) {
        return graphlets::enumerate_pattern(g, graphlets::parse_pattern(p));
    });
    m.def("custom_sentence", &graphlets::custom_sentence);

    m.def("model_names", [] {
        std::vector<std::string> out;
        for (auto k : models::kAllModels) out.emplace_back(models::model_name(k));
        return out;
    });
    m.def("parameter_count", [](const std::string& model) {
        return models::parameter_count(models::default_spec(models::parse_model(model)));
    });
    m.def("embed", [](const std::string& model, const Graph& g, std::uint64_t seed) {
        return models::embed(models::default_spec(models::parse_model(model)), g, seed);
    }, py::arg("model"), py::arg("graph"), py::arg("seed") = 0);
    m.def("run_seed", &models::run_seed);

    m.def("wl_census", [](const std::vector<Graph>& graphs, unsigned threads) {
        const auto rep = harness::wl_census(graphs, threads);
        return py::make_tuple(rep.find("1wl")->undistinguished, rep.find("2fwl")->undistinguished);
    }, py::arg("graphs"), py::arg("threads") = 1);
    m.def("lambda_census", &harness::lambda_census, py::arg("graphs"), py::arg("threads") = 1, py::arg("tol") = 1e-6);
    m.def("degree_multiset_pairs", &harness::degree_multiset_pairs);
    m.def("distinguish", [](const std::vector<Graph>& graphs, const std::string& config, unsigned threads,
                            const std::string& dataset) {
        const auto cfg = experiment(config, threads);
        py::gil_scoped_release release;
        return harness::report_render(harness::distinguishability_run(graphs, cfg, dataset), harness::Format::json);
    }, py::arg("graphs"), py::arg("config") = "", py::arg("threads") = 1, py::arg("dataset") = "dataset",
          "Runs the distinguishability experiment and returns the report as JSON text.");

    m.def("golden_suite", [] {
        std::vector<py::dict> out;
        for (const auto& c : golden::run_suite().checks) {
            py::dict d;
            d["name"] = c.name;
            d["expected"] = c.expected;
            d["actual"] = c.actual;
            d["tolerance"] = c.tolerance;
            d["pass"] = c.pass;
            out.push_back(d);
        }
        return out;
    });
}
