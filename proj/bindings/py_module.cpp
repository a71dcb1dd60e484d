#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clusternl/bell.hpp"
#include "clusternl/checks.hpp"
#include "clusternl/graph.hpp"
#include "clusternl/lhv.hpp"
#include "clusternl/pauli.hpp"
#include "clusternl/quantum.hpp"
#include "clusternl/report.hpp"

namespace py = pybind11;
using namespace clusternl;

namespace {

std::vector<std::string> argument_words(const GhzArgument& arg) {
  std::vector<std::string> out;
  out.reserve(arg.elements.size());
  for (const auto& e : arg.elements) out.push_back(element_str(e));
  return out;
}

SettingsChoice reference_choice(const std::string& name, const BellPolynomial& p) {
  if (name == "cluster4") return cluster4_reference_settings();
  if (name == "window5") return window5_reference_settings();
  if (name == "stabsum") return letter_settings(p);
  throw std::invalid_argument("no reference settings for " + name);
}

BellPolynomial polynomial_by_name(const std::string& name, const Graph* graph) {
  if (name == "cluster4") return cluster4_polynomial();
  if (name == "window5") return window5_polynomial();
  if (name == "mabk4") return mabk4_polynomial();
  if (name == "stabsum") {
    if (!graph) throw std::invalid_argument("stabsum needs a graph");
    return stabilizer_sum_polynomial(full_group(*graph));
  }
  throw std::invalid_argument("unknown inequality: " + name);
}

}  // namespace

PYBIND11_MODULE(_clusternl, m) {
  m.doc() = "cluster-state stabilizer groups, GHZ paradoxes and Bell bounds";
  m.attr("__version__") = kLibraryVersion;

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<NonHermitianError>(m, "NonHermitianError", PyExc_ValueError);
  py::register_exception<GroupTooLarge>(m, "GroupTooLarge", PyExc_RuntimeError);
  py::register_exception<SearchCeilingExceeded>(m, "SearchCeilingExceeded", PyExc_RuntimeError);
  py::register_exception<NoPathError>(m, "NoPathError", PyExc_ValueError);
  py::register_exception<UnsupportedArity>(m, "UnsupportedArity", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PauliString>(m, "PauliString")
      .def_static("parse", &PauliString::parse, py::arg("text"))
      .def_static("identity", &PauliString::identity, py::arg("n_sites"))
      .def_property_readonly("n_sites", &PauliString::n_sites)
      .def_property_readonly("phase_exp", &PauliString::phase_exp)
      .def("sign", &PauliString::sign)
      .def("is_hermitian", &PauliString::is_hermitian)
      .def("__str__", &PauliString::str)
      .def("__repr__", [](const PauliString& w) { return "PauliString('" + w.str() + "')"; })
      .def("__mul__", [](const PauliString& a, const PauliString& b) { return multiply(a, b); })
      .def("__eq__", [](const PauliString& a, const PauliString& b) { return a == b; })
      .def("commutes", [](const PauliString& a, const PauliString& b) { return commutes(a, b); });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("site_count"),
           py::arg("edges"))
      .def_property_readonly("site_count", &Graph::site_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("to_text", &Graph::to_text)
      .def_static("from_text", &Graph::from_text)
      .def("__repr__", [](const Graph& g) {
        return "Graph(sites=" + std::to_string(g.site_count()) +
               ", edges=" + std::to_string(g.edges().size()) + ")";
      });

  m.def("build_lattice", &build_lattice, py::arg("extents"));
  m.def("star_graph", &star_graph, py::arg("n_leaves"));
  m.def("parse_graph_spec", &parse_graph_spec, py::arg("spec"));

  py::class_<StabilizerElement>(m, "StabilizerElement")
      .def_readonly("word", &StabilizerElement::word)
      .def_readonly("sign", &StabilizerElement::sign)
      .def_readonly("generator_mask", &StabilizerElement::generator_mask)
      .def("__str__", [](const StabilizerElement& e) { return element_str(e); })
      .def("__repr__", [](const StabilizerElement& e) {
        return "StabilizerElement('" + element_str(e) + "')";
      });

  m.def("generator", &generator, py::arg("graph"), py::arg("site"));
  m.def(
      "full_group",
      [](const Graph& g, int limit) {
        return full_group(g, limit).elements();
      },
      py::arg("graph"), py::arg("limit") = 20);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<int, std::vector<Complex>>(), py::arg("n_sites"), py::arg("amplitudes"))
      .def_property_readonly("n_sites", &StateVector::n_sites)
      .def_property_readonly("amplitudes", &StateVector::amplitudes)
      .def("norm", &StateVector::norm)
      .def("amplitude_dump", &StateVector::amplitude_dump);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_property_readonly("n_sites", &DensityMatrix::n_sites)
      .def_property_readonly("entries", &DensityMatrix::entries)
      .def("trace", &DensityMatrix::trace);

  m.def("make_cluster_state", &make_cluster_state, py::arg("graph"), py::arg("max_sites") = 16);
  m.def("make_ghz", &make_ghz, py::arg("n"));
  m.def("make_w4", &make_w4);
  m.def("partial_trace", &partial_trace, py::arg("state"), py::arg("keep"),
        py::arg("max_kept") = 12);
  m.def("purity", &purity, py::arg("rho"));

  m.def(
      "expectation",
      [](const StateVector& state, const std::string& word) {
        PauliString w = PauliString::parse(word);
        return expectation_pauli(state, {w.unsigned_word(), w.sign(), 0});
      },
      py::arg("state"), py::arg("word"));
  m.def(
      "expectation_mixed",
      [](const DensityMatrix& rho, const std::string& word) {
        PauliString w = PauliString::parse(word);
        return expectation_pauli(rho, {w.unsigned_word(), w.sign(), 0});
      },
      py::arg("rho"), py::arg("word"));

  py::class_<GhzArgument>(m, "GhzArgument")
      .def_property_readonly("elements", argument_words)
      .def_readonly("window", &GhzArgument::window)
      .def_readonly("cooperating_sites", &GhzArgument::cooperating_sites)
      .def("valid", &GhzArgument::valid)
      .def("sound", [](const GhzArgument& a) { return ghz_argument_sound(a); })
      .def("__repr__", [](const GhzArgument& a) {
        std::string r = "GhzArgument([";
        for (std::size_t i = 0; i < a.elements.size(); ++i) {
          if (i) r += ", ";
          r += element_str(a.elements[i]);
        }
        return r + "])";
      });

  m.def(
      "find_ghz_arguments",
      [](const Graph& g, int max_size) { return find_ghz_arguments(full_group(g), max_size); },
      py::arg("graph"), py::arg("max_size") = 4);
  m.def("window_argument_1d", &window_argument_1d, py::arg("chain_length"), py::arg("k"));
  m.def("path_triple_argument", &path_triple_argument, py::arg("graph"), py::arg("a"),
        py::arg("b"), py::arg("c"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("classical_bound", &BoundReport::classical_bound)
      .def_readonly("quantum_value", &BoundReport::quantum_value)
      .def_readonly("algebraic_bound", &BoundReport::algebraic_bound)
      .def_readonly("certified", &BoundReport::certified)
      .def("to_json", [](const BoundReport& r) { return bound_report_json(r).dump(2); })
      .def("__repr__", [](const BoundReport& r) {
        return "BoundReport(classical=" + std::to_string(r.classical_bound) +
               ", quantum=" + std::to_string(r.quantum_value) +
               ", algebraic=" + std::to_string(r.algebraic_bound) + ")";
      });

  m.def(
      "bounds",
      [](const std::string& inequality, const StateVector& state, const Graph* graph,
         int restarts, std::uint64_t seed) {
        OptimizeConfig cfg;
        cfg.restarts = restarts;
        cfg.seed = seed;
        return optimize_settings(polynomial_by_name(inequality, graph), state, cfg);
      },
      py::arg("inequality"), py::arg("state"), py::arg("graph") = nullptr,
      py::arg("restarts") = 64, py::arg("seed") = 0);
  m.def(
      "bounds_mixed",
      [](const std::string& inequality, const DensityMatrix& rho, const Graph* graph,
         int restarts, std::uint64_t seed) {
        OptimizeConfig cfg;
        cfg.restarts = restarts;
        cfg.seed = seed;
        return optimize_settings(polynomial_by_name(inequality, graph), rho, cfg);
      },
      py::arg("inequality"), py::arg("rho"), py::arg("graph") = nullptr,
      py::arg("restarts") = 64, py::arg("seed") = 0);

  m.def(
      "reference_value",
      [](const std::string& inequality, const StateVector& state, const Graph* graph) {
        BellPolynomial p = polynomial_by_name(inequality, graph);
        return quantum_value(p, reference_choice(inequality, p), state);
      },
      py::arg("inequality"), py::arg("state"), py::arg("graph") = nullptr);
  m.def(
      "reference_value_mixed",
      [](const std::string& inequality, const DensityMatrix& rho, const Graph* graph) {
        BellPolynomial p = polynomial_by_name(inequality, graph);
        return quantum_value(p, reference_choice(inequality, p), rho);
      },
      py::arg("inequality"), py::arg("rho"), py::arg("graph") = nullptr);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("detail", &CheckResult::detail)
      .def_readonly("pass_", &CheckResult::pass)
      .def("__repr__", [](const CheckResult& r) {
        return std::string(r.pass ? "PASS " : "FAIL ") + r.name;
      });

  m.def("run_acceptance_checks", &run_acceptance_checks, py::arg("perturb") = false);
}
