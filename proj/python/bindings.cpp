#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zsum/error.hpp"
#include "zsum/report.hpp"

namespace py = pybind11;
using namespace zsum;

namespace {

SearchBudget make_budget(std::uint64_t max_nodes, double seconds, bool use_automorphisms) {
  SearchBudget b;
  b.max_nodes = max_nodes;
  b.time_limit = seconds;
  b.use_automorphisms = use_automorphisms;
  return b;
}

std::vector<std::string> names(const ElementSet& s) { return names_json(s).get<std::vector<std::string>>(); }

}  // namespace

PYBIND11_MODULE(_zsum, m) {
  m.doc() = "Product-one invariants of small finite groups";
  m.attr("__version__") = kToolVersion;

  py::register_exception<Error>(m, "ZsumError", PyExc_ValueError);

  m.def("group_info", [](const std::string& spec) { return group_info_json(build_group(spec)).dump(); },
        py::arg("spec"));

  m.def(
      "invariant",
      [](const std::string& which, const std::string& spec, std::uint64_t max_nodes, double seconds, bool aut) {
        auto g = build_group(spec);
        InvariantResult r;
        {
          py::gil_scoped_release release;
          r = compute_invariant(parse_invariant(which), g, make_budget(max_nodes, seconds, aut));
        }
        return to_json(r, g).dump();
      },
      py::arg("which"), py::arg("spec"), py::arg("max_nodes") = 0, py::arg("seconds") = 0.0,
      py::arg("use_automorphisms") = true);

  m.def(
      "verify",
      [](const std::string& spec, std::uint64_t max_nodes, double seconds) {
        auto g = build_group(spec);
        BoundReport rep;
        {
          py::gil_scoped_release release;
          rep = verify_group(g, make_budget(max_nodes, seconds, true));
        }
        return to_json(rep).dump();
      },
      py::arg("spec"), py::arg("max_nodes") = 0, py::arg("seconds") = 0.0);

  m.def(
      "witness",
      [](const std::string& kind, const std::vector<long>& params) {
        return to_json(check_witness(make_witness(parse_witness_kind(kind), params))).dump();
      },
      py::arg("kind"), py::arg("params"));

  m.def(
      "pi_set", [](const std::string& spec, const std::string& seq) {
        return names(pi_set(parse_sequence(build_group(spec), seq)));
      },
      py::arg("spec"), py::arg("sequence"));

  m.def(
      "is_atom", [](const std::string& spec, const std::string& seq) {
        return is_atom(parse_sequence(build_group(spec), seq));
      },
      py::arg("spec"), py::arg("sequence"));

  m.def(
      "is_product_one_free", [](const std::string& spec, const std::string& seq) {
        return is_product_one_free(parse_sequence(build_group(spec), seq));
      },
      py::arg("spec"), py::arg("sequence"));
}
