#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>

#include "trilow/accounting.hpp"
#include "trilow/conditioned.hpp"
#include "trilow/graph.hpp"
#include "trilow/harness.hpp"
#include "trilow/hypergeom.hpp"
#include "trilow/io.hpp"
#include "trilow/ks.hpp"
#include "trilow/normal.hpp"
#include "trilow/quasirandom.hpp"
#include "trilow/sampling.hpp"
#include "trilow/synergy.hpp"

namespace py = pybind11;

namespace {

trilow::ProcessParams make_params(int n, int64_t m, double eta) {
  trilow::ProcessParams p;
  p.n = n;
  p.m = m;
  p.eta = eta;
  return p;
}

py::dict quasirandom_dict(const trilow::QuasirandomReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["p0"] = r.p0;
  d["eps"] = r.eps_used;
  d["pass"] = r.pass();
  d["p1"] = r.p1;
  d["p2"] = r.p2;
  d["p3"] = r.p3;
  d["p4"] = r.p4;
  d["p5"] = r.p5;
  d["p6"] = r.p6;
  d["p1_codeg_sq_sum"] = r.p1_codeg_sq_sum;
  d["p1_threshold"] = r.p1_threshold;
  d["p2_far_count"] = r.p2_far_count;
  d["p2_max_distance"] = r.p2_max_distance;
  d["p3_max_deg_dev"] = r.p3_max_deg_dev;
  d["p4_max_codeg_dev"] = r.p4_max_codeg_dev;
  d["p5_max_edge_dev"] = r.p5_max_edge_dev;
  d["p6_max_bipartite_dev"] = r.p6_max_bipartite_dev;
  d["deg_codeg_threshold"] = r.deg_codeg_threshold;
  d["edge_dev_threshold"] = r.edge_dev_threshold;
  return d;
}

}  // namespace

PYBIND11_MODULE(_trilow, m) {
  m.doc() = "lower-tail triangle count construction toolkit";

  py::class_<trilow::Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", &trilow::Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &trilow::Graph::order)
      .def_property_readonly("m", &trilow::Graph::size)
      .def("has_edge", &trilow::Graph::has_edge, py::arg("u"), py::arg("w"))
      .def("add_edge", &trilow::Graph::add_edge, py::arg("u"), py::arg("w"))
      .def("degree", &trilow::Graph::degree, py::arg("u"))
      .def("codegree", &trilow::Graph::codegree, py::arg("u"), py::arg("w"))
      .def("edges", &trilow::Graph::edges)
      .def("complement", &trilow::Graph::complement)
      .def("__eq__", [](const trilow::Graph& a, const trilow::Graph& b) { return a == b; })
      .def("__repr__", [](const trilow::Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.order() << ", m=" << g.size() << ")";
        return out.str();
      });

  py::class_<trilow::FSplit>(m, "FSplit")
      .def_readonly("f_minus", &trilow::FSplit::f_minus)
      .def_readonly("f_plus", &trilow::FSplit::f_plus)
      .def_readonly("median_synergy", &trilow::FSplit::median_synergy)
      .def_readonly("p_used", &trilow::FSplit::p_used)
      .def_readonly("ties_to_minus", &trilow::FSplit::ties_to_minus)
      .def_readonly("ties_to_plus", &trilow::FSplit::ties_to_plus);

  m.def("sample_gnm", &trilow::sample_gnm, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("sample_gnp", &trilow::sample_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "two_phase_split",
      [](int n, int64_t m, double eta, uint64_t seed) {
        return trilow::two_phase_split(make_params(n, m, eta), seed);
      },
      py::arg("n"), py::arg("m"), py::arg("eta"), py::arg("seed"),
      "Uniform m-edge draw cut into the first m0 = floor((1-eta) m) edges and the rest.");

  m.def("default_density", &trilow::default_density, py::arg("g"));
  m.def("synergy", py::overload_cast<const trilow::Graph&, int, int, double>(&trilow::synergy),
        py::arg("g"), py::arg("u"), py::arg("w"), py::arg("p"));
  m.def("synergy", py::overload_cast<const trilow::Graph&, int, int>(&trilow::synergy),
        py::arg("g"), py::arg("u"), py::arg("w"));
  m.def("sigma_p", &trilow::sigma_p, py::arg("n"), py::arg("p"));
  m.def(
      "normalized_synergy_vector",
      [](const trilow::Graph& g, int u) { return trilow::normalized_synergy_vector(g, u).values; },
      py::arg("g"), py::arg("u"));
  m.def("split_f", &trilow::split_f, py::arg("g0"));
  m.def("f_plus_zero", &trilow::f_plus_zero, py::arg("g0"));

  m.def("count_triangles", &trilow::count_triangles, py::arg("g"));
  m.def(
      "count_triangles_by_class",
      [](const trilow::Graph& g0, const trilow::Graph& g1) {
        const auto c = trilow::count_triangles_by_class(g0, g1);
        return py::make_tuple(c.t30, c.t21, c.t12, c.t03);
      },
      py::arg("g0"), py::arg("g1"));
  m.def("graph_union", &trilow::graph_union, py::arg("g0"), py::arg("g1"));

  m.def(
      "ks_distance_to_normal",
      [](const std::vector<double>& x, double eps) {
        const trilow::KSReport r = trilow::ks_distance_to_normal(x, eps);
        py::dict d;
        d["distance"] = r.distance;
        d["argmax_t"] = r.argmax_t;
        d["n_points"] = r.n_points;
        d["close"] = r.close;
        return d;
      },
      py::arg("x"), py::arg("eps") = 1.0);
  m.def("std_normal_cdf", &trilow::std_normal_cdf, py::arg("t"));
  m.def("std_normal_quantile", &trilow::std_normal_quantile, py::arg("q"));

  m.def(
      "check_quasirandom",
      [](const trilow::Graph& g0, double c_d, uint64_t seed) {
        return quasirandom_dict(trilow::check_quasirandom(g0, c_d, seed));
      },
      py::arg("g0"), py::arg("c_d") = 1.0, py::arg("seed") = 1);

  m.def("sample_conditioned_g1", &trilow::sample_conditioned_g1, py::arg("split"), py::arg("m1"),
        py::arg("alpha"), py::arg("seed"));
  m.def("conditioned_k_minus", &trilow::conditioned_k_minus, py::arg("m1"), py::arg("alpha"));
  m.def("hypergeom_log_pmf", &trilow::hypergeom_log_pmf, py::arg("population"),
        py::arg("successes"), py::arg("draws"), py::arg("k"));
  m.def(
      "e_alpha_cost",
      [](int n, int64_t m, double eta, double alpha, double lambda) {
        const trilow::HyperTailResult r = trilow::e_alpha_cost_check(n, m, eta, alpha, lambda);
        py::dict d;
        d["exact_log_prob"] = r.exact_log_prob;
        d["stirling_estimate"] = r.stirling_estimate;
        d["lower_bound_cost"] = r.lower_bound_cost;
        d["log_gap"] = r.log_gap;
        d["in_regime"] = r.in_regime;
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("eta"), py::arg("alpha"), py::arg("lambda") = 0.4);
}
