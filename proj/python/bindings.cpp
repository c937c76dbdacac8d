#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaoforge/catalog.hpp"
#include "gaoforge/commands.hpp"
#include "gaoforge/constants.hpp"
#include "gaoforge/forms.hpp"
#include "gaoforge/report.hpp"

namespace py = pybind11;
using namespace gaoforge;

namespace {

SearchBudget budget_of(std::uint64_t nodes, double secs, unsigned threads) {
  SearchBudget b;
  b.max_nodes = nodes;
  b.max_seconds = secs;
  b.threads = threads;
  return b;
}

std::vector<Int> profile(Int n, const std::string& seq, const std::string& weights) {
  const Modulus m(n);
  return canonicalize(parse_sequence(seq, m), parse_weights(weights, m)).entries;
}

std::vector<std::string> classify_tags(Int n, const std::string& seq) {
  std::vector<std::string> out;
  for (const auto& t : classify(parse_sequence(seq, Modulus(n)))) out.emplace_back(to_string(t.kind));
  return out;
}

std::pair<std::string, int> run(const std::string& command, const std::string& n, const std::string& weights,
                                const std::string& kind, const std::string& family, std::optional<Int> max_n,
                                const std::string& seq, std::optional<Int> to, std::uint64_t nodes, double secs,
                                unsigned threads, std::uint64_t seed, std::uint64_t trials, bool properties) {
  RunConfig c;
  c.command = command;
  c.moduli = n;
  c.weights = weights;
  c.kind = kind;
  c.family = family;
  c.max_n = max_n;
  c.seq = seq;
  c.to = to;
  c.budget = budget_of(nodes, secs, threads);
  c.seed = seed;
  c.trials = trials;
  c.properties = properties;
  const auto r = run_command(c);
  return {r.to_json().dump(), r.exit_code()};
}

}  // namespace

PYBIND11_MODULE(_gaoforge, mod) {
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExhausted>(mod, "BudgetExhausted", PyExc_RuntimeError);

  const SearchBudget d;
  mod.def(
      "davenport",
      [](Int n, const std::string& weights, std::uint64_t nodes, double secs, unsigned threads) {
        const Modulus m(n);
        py::gil_scoped_release release;
        return davenport_constant(m, parse_weights(weights, m), budget_of(nodes, secs, threads)).value;
      },
      py::arg("n"), py::arg("weights") = "units", py::arg("budget_nodes") = d.max_nodes,
      py::arg("budget_secs") = d.max_seconds, py::arg("threads") = 1);
  mod.def(
      "gao",
      [](Int n, const std::string& weights, std::uint64_t nodes, double secs, unsigned threads) {
        const Modulus m(n);
        py::gil_scoped_release release;
        return gao_constant(m, parse_weights(weights, m), budget_of(nodes, secs, threads)).value;
      },
      py::arg("n"), py::arg("weights") = "units", py::arg("budget_nodes") = d.max_nodes,
      py::arg("budget_secs") = d.max_seconds, py::arg("threads") = 1);
  mod.def("canonical_profile", &profile, py::arg("n"), py::arg("seq"), py::arg("weights") = "units");
  mod.def("classify", &classify_tags, py::arg("n"), py::arg("seq"));
  mod.def(
      "format_sequence",
      [](Int n, const std::vector<Int>& terms) { return format_sequence(ResidueSequence(Modulus(n), terms)); },
      py::arg("n"), py::arg("terms"));
  mod.def(
      "parse_sequence", [](Int n, const std::string& s) { return parse_sequence(s, Modulus(n)).terms(); },
      py::arg("n"), py::arg("seq"));
  mod.def("run", &run, py::arg("command"), py::arg("n") = "", py::arg("weights") = "units",
          py::arg("kind") = "gao", py::arg("family") = "", py::arg("max_n") = py::none(), py::arg("seq") = "",
          py::arg("to") = py::none(), py::arg("budget_nodes") = d.max_nodes, py::arg("budget_secs") = d.max_seconds,
          py::arg("threads") = 1, py::arg("seed") = 1, py::arg("trials") = 10'000, py::arg("properties") = true,
          py::call_guard<py::gil_scoped_release>());
  mod.attr("SCHEMA_VERSION") = kSchemaVersion;
}
