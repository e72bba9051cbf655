#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "netcoh/closed_forms.hpp"
#include "netcoh/coherence.hpp"
#include "netcoh/generators.hpp"
#include "netcoh/sim.hpp"
#include "netcoh/spectral.hpp"

namespace py = pybind11;
using namespace netcoh;

namespace {

py::int_ to_py_int(const BigInt& v) { return py::cast(v.str()).cast<py::int_>(); }

py::object to_fraction(const ExactValue& v) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(numerator(v.value)), to_py_int(denominator(v.value)));
}

std::vector<CliqueSpawn> spawns_from_array(const py::array_t<std::int64_t>& arr) {
    auto buf = arr.unchecked<2>();
    if (buf.shape(1) != 4)
        throw std::invalid_argument("spawn array must have shape (k, 4)");
    std::vector<CliqueSpawn> spawns(buf.shape(0));
    for (py::ssize_t i = 0; i < buf.shape(0); ++i)
        spawns[i] = {static_cast<VertexId>(buf(i, 0)), static_cast<VertexId>(buf(i, 1)),
                     static_cast<VertexId>(buf(i, 2)), static_cast<VertexId>(buf(i, 3))};
    return spawns;
}

py::array_t<std::int64_t> spawns_to_array(const std::vector<CliqueSpawn>& spawns) {
    py::array_t<std::int64_t> arr({static_cast<py::ssize_t>(spawns.size()), py::ssize_t{4}});
    auto buf = arr.mutable_unchecked<2>();
    for (std::size_t i = 0; i < spawns.size(); ++i) {
        buf(i, 0) = spawns[i].first;
        buf(i, 1) = spawns[i].second;
        buf(i, 2) = spawns[i].parent_u;
        buf(i, 3) = spawns[i].parent_v;
    }
    return arr;
}

}  // namespace

PYBIND11_MODULE(_netcoh, m) {
    m.doc() = "First-order network coherence of noisy consensus dynamics";
    m.attr("__version__") = NETCOH_VERSION;
    m.attr("rng_id") = rng_id;

    py::register_exception<ParseError>(m, "EdgeListParseError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphStructureError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalFailure", PyExc_ArithmeticError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](VertexId n, const std::vector<Edge>& edges) {
                 return Graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("max_degree", &Graph::max_degree)
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 auto nb = g.neighbors(v);
                 return std::vector<VertexId>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("is_connected", &Graph::is_connected)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
            return s.str();
        });

    m.def("parse_edge_list",
          [](const std::string& text) { return Graph::from_edge_list(text); },
          py::arg("text"), "Parse edge-list text ('%'/'#' comment lines allowed).");
    m.def("read_edge_list", &Graph::from_edge_list_file, py::arg("path"));
    m.def("to_edge_list", &to_edge_list, py::arg("graph"));
    m.def("largest_connected_component", &largest_connected_component, py::arg("graph"));
    m.def("laplacian", &laplacian, py::arg("graph"));
    m.def("average_degree", &average_degree, py::arg("graph"));
    m.def("average_path_length", &average_path_length, py::arg("graph"));
    m.def("degree_distribution", &degree_distribution, py::arg("graph"));
    m.def("bfs_distances", &bfs_distances, py::arg("graph"), py::arg("source"));

    py::class_<LaplacianSpectrum>(m, "LaplacianSpectrum")
        .def_readonly("eigenvalues", &LaplacianSpectrum::eigenvalues)
        .def_readonly("zero_tolerance", &LaplacianSpectrum::zero_tolerance)
        .def("zero_count", &LaplacianSpectrum::zero_count)
        .def("connected", &LaplacianSpectrum::connected)
        .def("lambda_max", &LaplacianSpectrum::lambda_max)
        .def("lambda_1", &LaplacianSpectrum::lambda_1);

    m.def("spectrum", &spectrum, py::arg("graph"));
    m.def("pseudoinverse_trace", &pseudoinverse_trace, py::arg("graph"));
    m.def("pseudoinverse_trace_solve", &pseudoinverse_trace_solve, py::arg("graph"));
    m.def("laplacian_pseudoinverse", &laplacian_pseudoinverse, py::arg("graph"));
    m.def("resistance", &resistance, py::arg("graph"), py::arg("i"), py::arg("j"));
    m.def("resistance_matrix",
          [](const Graph& g) { return resistance_matrix(g).entries; }, py::arg("graph"));
    m.def("kirchhoff_index", py::overload_cast<const Graph&>(&kirchhoff_index),
          py::arg("graph"));
    m.def("multiplicative_degree_kirchhoff",
          py::overload_cast<const Graph&>(&multiplicative_degree_kirchhoff), py::arg("graph"));
    m.def("additive_degree_kirchhoff",
          py::overload_cast<const Graph&>(&additive_degree_kirchhoff), py::arg("graph"));
    m.def("foster_residual", py::overload_cast<const Graph&>(&foster_residual),
          py::arg("graph"));
    m.def("sum_rule_residual",
          py::overload_cast<const Graph&, VertexId, VertexId>(&sum_rule_residual),
          py::arg("graph"), py::arg("i"), py::arg("j"));

    py::class_<CoherenceReport>(m, "CoherenceReport")
        .def_readonly("n", &CoherenceReport::n)
        .def_readonly("m", &CoherenceReport::m)
        .def_readonly("rho", &CoherenceReport::rho)
        .def_readonly("mu", &CoherenceReport::mu)
        .def_readonly("h_fo", &CoherenceReport::h_fo)
        .def_readonly("lower_asymptotic", &CoherenceReport::lower_asymptotic)
        .def_readonly("lower_exact", &CoherenceReport::lower_exact)
        .def_readonly("upper", &CoherenceReport::upper)
        .def("as_dict",
             [](const CoherenceReport& r) {
                 py::dict d;
                 d["n"] = r.n;
                 d["m"] = r.m;
                 d["rho"] = r.rho;
                 d["mu"] = r.mu;
                 d["h_fo"] = r.h_fo;
                 d["lower_asymptotic"] = r.lower_asymptotic;
                 d["lower_exact"] = r.lower_exact;
                 d["upper"] = r.upper;
                 return d;
             })
        .def("__repr__", [](const CoherenceReport& r) {
            std::ostringstream s;
            s << "CoherenceReport(n=" << r.n << ", m=" << r.m << ", h_fo=" << r.h_fo << ")";
            return s.str();
        });

    m.def("first_order_coherence", &first_order_coherence, py::arg("graph"),
          py::call_guard<py::gil_scoped_release>());
    m.def("coherence_lower_bound",
          [](std::int64_t n, std::int64_t m_) {
              LowerBounds lb = coherence_lower_bound(n, m_);
              return py::make_tuple(lb.exact, lb.asymptotic);
          },
          py::arg("n"), py::arg("m"), "Returns (exact, asymptotic).");
    m.def("coherence_upper_bound", &coherence_upper_bound, py::arg("graph"));
    m.def("analyze", &analyze, py::arg("graph"), py::call_guard<py::gil_scoped_release>());

    m.def("ba_network", &ba_network, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("hdran", &hdran, py::arg("d"), py::arg("n"), py::arg("seed"));
    m.def("pseudofractal", &pseudofractal, py::arg("g"));
    m.def("clique4_motif", &clique4_motif, py::arg("g"));
    m.def("clique4_step",
          [](const Graph& tg) {
              Clique4Step step = clique4_step(tg);
              return py::make_tuple(step.graph, spawns_to_array(step.spawned));
          },
          py::arg("graph"),
          "Returns (next_graph, spawn array of rows [first, second, parent_u, parent_v]).");
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("star_graph", &star_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("ring_lattice", &ring_lattice, py::arg("n"), py::arg("k"));
    m.def("torus_grid", &torus_grid, py::arg("d"), py::arg("side"));
    m.def("derive_seed", &derive_seed, py::arg("base"), py::arg("stream"));

    py::class_<ExactValue>(m, "ExactValue")
        .def_property_readonly(
            "numerator", [](const ExactValue& v) { return to_py_int(numerator(v.value)); })
        .def_property_readonly(
            "denominator", [](const ExactValue& v) { return to_py_int(denominator(v.value)); })
        .def("as_fraction", &to_fraction)
        .def("__float__", &ExactValue::float_view)
        .def("__str__", &ExactValue::str)
        .def("__repr__", [](const ExactValue& v) { return "ExactValue(" + v.str() + ")"; })
        .def("__eq__", [](const ExactValue& a, const ExactValue& b) { return a == b; });

    py::class_<Clique4Indices>(m, "Clique4Indices")
        .def_readonly("kirchhoff", &Clique4Indices::kirchhoff)
        .def_readonly("multiplicative", &Clique4Indices::multiplicative)
        .def_readonly("additive", &Clique4Indices::additive)
        .def("__repr__", [](const Clique4Indices& v) {
            return "Clique4Indices(R=" + v.kirchhoff.str() + ", R*=" + v.multiplicative.str() +
                   ", R+=" + v.additive.str() + ")";
        });

    m.def("pseudofractal_kirchhoff", &pseudofractal_kirchhoff, py::arg("g"));
    m.def("pseudofractal_coherence", &pseudofractal_coherence, py::arg("g"));
    m.def("pseudofractal_coherence_alt", &pseudofractal_coherence_alt, py::arg("g"));
    m.def("pseudofractal_coherence_limit", &pseudofractal_coherence_limit);
    m.def("clique4_kirchhoff_indices", &clique4_kirchhoff_indices, py::arg("g"));
    m.def("clique4_kirchhoff_recursion_step", &clique4_kirchhoff_recursion_step,
          py::arg("prev"), py::arg("g_of_prev"));
    m.def("clique4_coherence", &clique4_coherence, py::arg("g"));
    m.def("clique4_coherence_limit", &clique4_coherence_limit);
    m.def("resistance_recursion_step",
          [](const Eigen::MatrixXd& omega, const py::array_t<std::int64_t>& spawns) {
              return resistance_recursion_step(omega, spawns_from_array(spawns));
          },
          py::arg("omega"), py::arg("spawns"));

    py::enum_<Scheme>(m, "Scheme")
        .value("euler_maruyama", Scheme::euler_maruyama)
        .value("exact_gaussian", Scheme::exact_gaussian);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init([](double dt, std::int64_t burn_in_steps, std::int64_t sample_steps,
                         int replicas, std::uint64_t seed, const std::string& scheme) {
                 SimConfig cfg;
                 cfg.dt = dt;
                 cfg.burn_in_steps = burn_in_steps;
                 cfg.sample_steps = sample_steps;
                 cfg.replicas = replicas;
                 cfg.seed = seed;
                 cfg.scheme = scheme_from_string(scheme);
                 return cfg;
             }),
             py::arg("dt") = 0.0, py::arg("burn_in_steps") = -1,
             py::arg("sample_steps") = 100000, py::arg("replicas") = 10, py::arg("seed") = 0,
             py::arg("scheme") = "exact_gaussian")
        .def_readwrite("dt", &SimConfig::dt)
        .def_readwrite("burn_in_steps", &SimConfig::burn_in_steps)
        .def_readwrite("sample_steps", &SimConfig::sample_steps)
        .def_readwrite("replicas", &SimConfig::replicas)
        .def_readwrite("seed", &SimConfig::seed)
        .def_property(
            "scheme", [](const SimConfig& c) { return to_string(c.scheme); },
            [](SimConfig& c, const std::string& s) { c.scheme = scheme_from_string(s); });

    py::class_<SimEstimate>(m, "SimEstimate")
        .def_readonly("h_fo_hat", &SimEstimate::h_fo_hat)
        .def_readonly("std_error", &SimEstimate::std_error)
        .def_readonly("analytic_h_fo", &SimEstimate::analytic_h_fo)
        .def_readonly("replica_means", &SimEstimate::replica_means)
        .def_readonly("rng", &SimEstimate::rng)
        .def_property_readonly("config", [](const SimEstimate& e) { return e.config; })
        .def("as_json", [](const SimEstimate& e) { return e.to_json().dump(); })
        .def("__repr__", [](const SimEstimate& e) {
            std::ostringstream s;
            s << "SimEstimate(h_fo_hat=" << e.h_fo_hat << ", std_error=" << e.std_error << ")";
            return s.str();
        });

    m.def("simulate_coherence", &simulate_coherence, py::arg("graph"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
}
