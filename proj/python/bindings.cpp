#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsc/gen.hpp"
#include "hsc/json_io.hpp"
#include "hsc/matching.hpp"
#include "hsc/oracle.hpp"
#include "hsc/reach.hpp"
#include "hsc/select.hpp"

namespace py = pybind11;

namespace {

hsc::DirectedHypergraph make_hypergraph(
    std::uint32_t n, std::uint32_t k,
    const std::vector<std::pair<std::vector<hsc::NodeId>, std::vector<hsc::NodeId>>>& edges,
    const std::vector<std::pair<hsc::NodeId, hsc::NodeId>>& controls) {
  std::vector<hsc::Hyperedge> state;
  state.reserve(edges.size());
  for (const auto& [head, tail] : edges) {
    hsc::Hyperedge e;
    e.head = head;
    e.tail = tail;
    state.push_back(std::move(e));
  }
  return hsc::DirectedHypergraph::from_edges(n, k, std::move(state), controls);
}

py::dict verify_dict(const hsc::DirectedHypergraph& h,
                     const std::vector<hsc::NodeId>& drivers) {
  hsc::VerifyResult r = hsc::verify_structural_controllability(h, drivers);
  py::dict d;
  d["controllable"] = r.controllable;
  d["accessibility_ok"] = r.accessibility_ok;
  d["dilation_free"] = r.dilation_free;
  d["inaccessible"] = r.inaccessible;
  d["uncovered"] = r.uncovered;
  d["odd_order"] = r.odd_order;
  return d;
}

py::dict selection_dict(const hsc::SelectionResult& s) {
  py::dict d;
  d["method"] = hsc::method_name(s.method);
  d["drivers"] = s.drivers;
  d["lower_bound"] = s.lower_bound;
  d["controllable"] = s.controllable;
  d["runtime_ms"] = s.runtime_ms;
  py::list steps;
  for (const auto& st : s.steps) {
    py::dict sd;
    sd["node"] = st.node;
    sd["gain"] = st.gain;
    steps.append(std::move(sd));
  }
  d["steps"] = std::move(steps);
  return d;
}

hsc::GenConfig config_from_kwargs(std::uint32_t n, std::uint32_t k, double alpha,
                                  const std::string& topology,
                                  std::uint32_t modules, double p_intra,
                                  double rewire, std::uint32_t window) {
  hsc::GenConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.alpha = alpha;
  cfg.topology = hsc::topology_from_name(topology);
  cfg.modules = modules;
  cfg.p_intra = p_intra;
  cfg.rewire = rewire;
  cfg.window = window;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_hsc, m) {
  m.doc() = "structural controllability of directed hypergraphs (node ids are "
            "0-based here; JSON files render them 1-based)";

  py::register_exception<hsc::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<hsc::CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<hsc::DirectedHypergraph>(m, "Hypergraph")
      .def_property_readonly("n", &hsc::DirectedHypergraph::num_nodes)
      .def_property_readonly("k", &hsc::DirectedHypergraph::order)
      .def_property_readonly("num_controls", &hsc::DirectedHypergraph::num_controls)
      .def_property_readonly("num_state_edges",
                             &hsc::DirectedHypergraph::num_state_edges)
      .def("edges",
           [](const hsc::DirectedHypergraph& h) {
             py::list out;
             for (const auto& e : h.edges()) {
               py::dict d;
               d["head"] = e.head;
               d["tail"] = e.tail;
               d["is_control"] = e.is_control;
               out.append(std::move(d));
             }
             return out;
           })
      .def("to_json",
           [](const hsc::DirectedHypergraph& h) { return hsc::write_hypergraph(h); })
      .def("__eq__", [](const hsc::DirectedHypergraph& a,
                        const hsc::DirectedHypergraph& b) { return a == b; })
      .def("__repr__", [](const hsc::DirectedHypergraph& h) {
        return "Hypergraph(n=" + std::to_string(h.num_nodes()) +
               ", k=" + std::to_string(h.order()) +
               ", edges=" + std::to_string(h.num_state_edges()) +
               ", controls=" + std::to_string(h.num_controls()) + ")";
      });

  m.def("hypergraph", &make_hypergraph, py::arg("n"), py::arg("k"),
        py::arg("edges"),
        py::arg("controls") = std::vector<std::pair<hsc::NodeId, hsc::NodeId>>{},
        "Build a hypergraph from (head, tail) pairs; ids 0-based.");
  m.def("from_json",
        [](const std::string& text) { return hsc::read_hypergraph(text); },
        py::arg("text"), "Parse the 1-based JSON interchange format.");
  m.def("load",
        [](const std::string& path) { return hsc::load_hypergraph_file(path); },
        py::arg("path"));
  m.def("strip_controls", &hsc::strip_controls, py::arg("h"));
  m.def("with_drivers", &hsc::with_drivers, py::arg("h"), py::arg("drivers"));

  m.def("walk_reach",
        [](const hsc::DirectedHypergraph& h, const std::vector<hsc::NodeId>& seeds) {
          hsc::ReachResult r = hsc::walk_reach(h, seeds);
          py::dict d;
          d["accessible"] = r.accessible;
          py::list order;
          for (const auto& a : r.activation_order) {
            order.append(py::make_tuple(a.edge, a.step));
          }
          d["activation_order"] = std::move(order);
          return d;
        },
        py::arg("h"), py::arg("seeds"));
  m.def("inaccessible_set", &hsc::inaccessible_set, py::arg("h"), py::arg("seeds"));
  m.def("target_accessible", &hsc::target_accessible, py::arg("h"),
        py::arg("seeds"), py::arg("targets"));

  m.def("matching_lower_bound",
        [](const hsc::DirectedHypergraph& h) {
          hsc::LowerBound lb = hsc::matching_lower_bound(h);
          return py::make_tuple(lb.count, lb.uncovered);
        },
        py::arg("h"));
  m.def("has_dilation", &hsc::has_dilation_matching, py::arg("h"), py::arg("drivers"));
  m.def("find_dilation_exact",
        [](const hsc::DirectedHypergraph& h, const std::vector<hsc::NodeId>& drivers,
           std::uint32_t max_n) -> py::object {
          auto w = hsc::find_dilation_exact(h, drivers, max_n);
          if (!w) return py::none();
          py::dict d;
          d["nodes"] = w->nodes;
          d["distinct_heads"] = w->distinct_heads;
          return std::move(d);
        },
        py::arg("h"), py::arg("drivers"), py::arg("max_n") = 20);

  m.def("verify", &verify_dict, py::arg("h"), py::arg("drivers"),
        "Structural controllability verdict with diagnostics.");
  m.def("select",
        [](const hsc::DirectedHypergraph& h, const std::string& method) {
          return selection_dict(hsc::run_selection(h, hsc::method_from_name(method)));
        },
        py::arg("h"), py::arg("method"),
        "Driver selection: matching | greedy | mag | optimal.");

  m.def("generate",
        [](std::uint32_t n, std::uint32_t k, double alpha,
           const std::string& topology, std::uint64_t seed, std::uint32_t modules,
           double p_intra, double rewire, std::uint32_t window) {
          return hsc::generate(
              config_from_kwargs(n, k, alpha, topology, modules, p_intra, rewire, window),
              seed);
        },
        py::arg("n"), py::arg("k") = 4, py::arg("alpha") = 1.0,
        py::arg("topology") = "uniform", py::arg("seed") = 1,
        py::arg("modules") = 5, py::arg("p_intra") = 0.9,
        py::arg("rewire") = 0.1, py::arg("window") = 0);

  m.def("cross_validate",
        [](const hsc::DirectedHypergraph& h, const std::vector<hsc::NodeId>& drivers,
           std::uint32_t trials, std::uint64_t seed) {
          hsc::CrossValidation cv = hsc::cross_validate(
              hsc::pattern_from_hypergraph(h), drivers, trials, seed);
          py::dict d;
          d["fraction_full_rank"] = cv.fraction_full_rank;
          d["per_trial_ranks"] = cv.per_trial_ranks;
          d["structural_verdict"] = cv.structural_verdict;
          return d;
        },
        py::arg("h"), py::arg("drivers"), py::arg("trials") = 10,
        py::arg("seed") = 1,
        "Numeric rank of random realizations vs the structural verdict.");
}
