#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specgap/bounds.hpp"
#include "specgap/constructions.hpp"
#include "specgap/errors.hpp"
#include "specgap/graph6.hpp"
#include "specgap/optimize.hpp"
#include "specgap/search.hpp"
#include "specgap/spectral.hpp"

namespace py = pybind11;
using namespace specgap;

namespace {

std::vector<std::vector<double>> laplacian_rows(const Graph& g) {
    auto m = normalized_laplacian(g);
    std::vector<std::vector<double>> rows(m.size(), std::vector<double>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
    return rows;
}

double sturm_lambda_k(const Graph& g, int k) {
    return sturm_eigen_oracle(normalized_laplacian(g), k);
}

}  // namespace

PYBIND11_MODULE(_specgap, m) {
    m.doc() = "normalized Laplacian spectral gap toolkit";

    py::register_exception<InvalidGraph>(m, "InvalidGraphError");
    py::register_exception<FormatError>(m, "FormatError");
    py::register_exception<InvalidParams>(m, "InvalidParamsError");
    py::register_exception<SamplingFailure>(m, "SamplingFailureError");
    py::register_exception<DegreeZero>(m, "DegreeZeroError");
    py::register_exception<Disconnected>(m, "DisconnectedError");
    py::register_exception<NumericalFailure>(m, "NumericalFailureError");
    py::register_exception<DegenerateFunction>(m, "DegenerateFunctionError");
    py::register_exception<NotHarmonic>(m, "NotHarmonicError");
    py::register_exception<TooLarge>(m, "TooLargeError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edge_list(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("u"))
        .def("degrees", &Graph::degrees)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<GraphMetrics>(m, "GraphMetrics")
        .def_readonly("degrees", &GraphMetrics::degrees)
        .def_readonly("volume", &GraphMetrics::volume)
        .def_readonly("max_degree", &GraphMetrics::max_degree)
        .def_readonly("connected", &GraphMetrics::connected)
        .def_property_readonly("diameter", [](const GraphMetrics& m) -> py::object {
            if (m.diameter) return py::int_(*m.diameter);
            return py::none();
        });

    py::class_<SpectralResult>(m, "SpectralResult")
        .def_readonly("eigenvalues", &SpectralResult::eigenvalues)
        .def_readonly("lambda1", &SpectralResult::lambda1)
        .def_readonly("harmonic_f", &SpectralResult::harmonic_f)
        .def_readonly("relaxation_time", &SpectralResult::relaxation_time)
        .def_readonly("residual", &SpectralResult::residual);

    py::class_<HarmonicSplit>(m, "HarmonicSplit")
        .def_readonly("p_set", &HarmonicSplit::p_set)
        .def_readonly("n_set", &HarmonicSplit::n_set)
        .def_readonly("vol_p", &HarmonicSplit::vol_p)
        .def_readonly("vol_n", &HarmonicSplit::vol_n)
        .def_readonly("u", &HarmonicSplit::u)
        .def_readonly("v", &HarmonicSplit::v)
        .def_readonly("dist_uv", &HarmonicSplit::dist_uv);

    py::class_<LowerBounds>(m, "LowerBounds")
        .def_readonly("landau_odlyzko", &LowerBounds::landau_odlyzko)
        .def_readonly("chung", &LowerBounds::chung)
        .def_readonly("improved", &LowerBounds::improved);

    py::class_<BoundsReport>(m, "BoundsReport")
        .def_readonly("lambda1", &BoundsReport::lambda1)
        .def_readonly("lower", &BoundsReport::lower)
        .def_readonly("harmonic", &BoundsReport::harmonic)
        .def_readonly("split", &BoundsReport::split)
        .def_readonly("slack_landau_odlyzko", &BoundsReport::slack_landau_odlyzko)
        .def_readonly("slack_chung", &BoundsReport::slack_chung)
        .def_readonly("slack_improved", &BoundsReport::slack_improved)
        .def_readonly("slack_harmonic", &BoundsReport::slack_harmonic)
        .def_readonly("min_slack", &BoundsReport::min_slack);

    py::class_<TwoPointProblem>(m, "TwoPointProblem")
        .def_readonly("degrees", &TwoPointProblem::degrees)
        .def_readonly("f", &TwoPointProblem::f)
        .def_readonly("objective", &TwoPointProblem::objective)
        .def_readonly("assignment", &TwoPointProblem::assignment);

    py::class_<MinimizerInfo>(m, "MinimizerInfo")
        .def_readonly("graph6", &MinimizerInfo::graph6)
        .def_readonly("lambda1", &MinimizerInfo::lambda1)
        .def_readonly("e_np", &MinimizerInfo::e_np)
        .def_readonly("np_bridges", &MinimizerInfo::np_bridges);

    py::class_<SearchRecord>(m, "SearchRecord")
        .def_readonly("n", &SearchRecord::n)
        .def_readonly("alpha", &SearchRecord::alpha)
        .def_readonly("minimizers", &SearchRecord::minimizers)
        .def_readonly("graphs_scanned", &SearchRecord::graphs_scanned)
        .def_property_readonly("distinct_classes", [](const SearchRecord& r) -> py::object {
            if (r.distinct_classes) return py::int_(*r.distinct_classes);
            return py::none();
        });

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("r", &SweepRow::r)
        .def_readonly("s", &SweepRow::s)
        .def_readonly("lambda1", &SweepRow::lambda1)
        .def_readonly("scaled", &SweepRow::scaled);

    // graph_core
    m.def("metrics", &metrics, py::arg("graph"));
    m.def("bridges", &bridges, py::arg("graph"));
    m.def("cut_edges_between", &cut_edges_between, py::arg("graph"), py::arg("subset"));
    m.def("graph6_encode", &graph6_encode, py::arg("graph"));
    m.def("graph6_decode", [](const std::string& s) { return graph6_decode(s); },
          py::arg("bytes"));
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); },
          py::arg("text"));
    m.def("format_edge_list", &format_edge_list, py::arg("graph"));

    // constructions
    m.def("double_kite", &double_kite, py::arg("r"), py::arg("s"));
    m.def("joined_regular_pair", &joined_regular_pair, py::arg("n"), py::arg("D"), py::arg("d"));
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("hypercube", &hypercube, py::arg("d"));
    m.def("random_connected", &random_connected, py::arg("n"), py::arg("p"), py::arg("seed"));

    // spectral
    m.def("normalized_laplacian", &laplacian_rows, py::arg("graph"),
          "dense normalized Laplacian as nested lists");
    m.def("spectral_gap", &spectral_gap, py::arg("graph"));
    m.def("rayleigh_quotient",
          [](const Graph& g, const std::vector<double>& f) { return rayleigh_quotient(g, f); },
          py::arg("graph"), py::arg("f"));
    m.def("relaxation_time", &relaxation_time, py::arg("graph"));
    m.def("transition_gap_oracle", &transition_gap_oracle, py::arg("graph"),
          py::arg("tol") = 1e-6);
    m.def("sturm_eigen_oracle", &sturm_lambda_k, py::arg("graph"), py::arg("k") = 1,
          "k-th smallest normalized Laplacian eigenvalue by inertia bisection");

    // bounds
    m.def("lower_bounds", &lower_bounds, py::arg("graph"));
    m.def("vertex_transitive_bound", &vertex_transitive_bound, py::arg("k"), py::arg("D"));
    m.def("harmonic_split",
          [](const Graph& g, const std::vector<double>& f) { return harmonic_split(g, f); },
          py::arg("graph"), py::arg("f"));
    m.def("harmonic_lower_bound", &harmonic_lower_bound, py::arg("graph"));
    m.def("test_function_upper",
          [](const Graph& g, const std::vector<double>& f) { return test_function_upper(g, f); },
          py::arg("graph"), py::arg("f"));
    m.def("joined_pair_upper", &joined_pair_upper, py::arg("n"), py::arg("D"), py::arg("d"));
    m.def("amgm_combination", &amgm_combination, py::arg("vol_p"), py::arg("vol_n"));
    m.def("bounds_report", &bounds_report, py::arg("graph"));

    // optimize
    m.def("two_point_optimum", &two_point_optimum, py::arg("degrees"));
    m.def("numeric_minimize", &numeric_minimize, py::arg("degrees"), py::arg("seed") = 0);
    m.def("interior_critical_value", &interior_critical_value, py::arg("degrees"));

    // search
    m.def("canonical_graph6",
          [](const Graph& g) {
              return graph6_encode(mask_to_graph(g.vertex_count(), canonical_mask(g)));
          },
          py::arg("graph"), "graph6 of the lexicographically minimal relabeling");
    m.def("enumerate_connected",
          [](int n) {
              std::vector<std::string> out;
              for_each_connected(n, [&](const Graph& g) { out.push_back(graph6_encode(g)); });
              return out;
          },
          py::arg("n"), "graph6 of every connected labeled graph on n vertices");
    m.def("alpha", &alpha, py::arg("n"), py::arg("workers") = 0,
          py::arg("count_classes") = false);
    m.def("sweep_double_kite", &sweep_double_kite, py::arg("n"), py::arg("workers") = 0);
}
