// Python bindings. Rationals cross the boundary as exact strings ("3/2");
// problems, enlargements and divisions as the same JSON text the CLI reads.

#include "cake/fixtures.hpp"
#include "cake/io.hpp"
#include "cake/monotonicity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cake;

namespace {

std::optional<UtilityMode> mode_of(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_utility_mode(*text);
}

py::list pieces(const Problem& p, const Division& x, const UtilityVector& u) {
  py::list out;
  for (std::size_t i = 0; i < p.agent_count(); ++i) {
    py::list ivs;
    for (const auto& iv : x.pieces[i]) ivs.append(py::make_tuple(to_string(iv.lo), to_string(iv.hi)));
    py::dict d;
    d["agent"] = p.name(i);
    d["intervals"] = ivs;
    d["absolute"] = to_string(u.absolute[i]);
    d["relative"] = to_string(u.relative[i]);
    out.append(d);
  }
  return out;
}

py::dict output_dict(const Problem& p, const RuleOutput& out) {
  py::dict d;
  d["rule"] = out.rule;
  d["equitable_value"] = out.equitable_value ? py::cast(to_string(*out.equitable_value)) : py::none();
  py::list divisions;
  for (std::size_t k = 0; k < out.divisions.size(); ++k) {
    py::dict x;
    x["pieces"] = pieces(p, out.divisions[k], out.utilities[k]);
    x["ordering"] = k < out.orderings.size() ? py::cast(format_ordering(p, out.orderings[k])) : py::none();
    x["json"] = division_to_json(p, out.divisions[k]);
    divisions.append(x);
  }
  d["divisions"] = divisions;
  return d;
}

RuleConfig config(const std::vector<std::string>& order, const std::optional<std::string>& cutter) {
  RuleConfig cfg;
  cfg.order = order;
  cfg.cutter = cutter;
  return cfg;
}

py::dict verdict_dict(const MonotonicityVerdict& v) {
  py::dict d;
  d["axiom"] = std::string(to_string(v.axiom));
  d["rule"] = v.rule;
  d["applicable"] = v.applicable;
  d["note"] = v.note;
  d["upwards"] = v.upwards.pass;
  d["downwards"] = v.downwards.pass;
  d["pass"] = v.pass();
  py::dict agents;
  for (const auto& a : v.agents) agents[py::str(a.agent)] = py::make_tuple(to_string(a.before), to_string(a.after));
  d["agents"] = agents;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cakecut, m) {
  m.doc() = "Exact cake-cutting rules, property checks and monotonicity tests";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<RulePreconditionError>(m, "RulePreconditionError", PyExc_ValueError);

  m.def("rule_names", &rule_names);
  m.def("fixture_names", &fixture_names);
  m.def("corpus_names", &corpus_names);

  m.def("corpus_problem", [](const std::string& name) { return problem_to_json(corpus_problem(name)); },
        "Problem JSON for a built-in cake.");
  m.def("normalize_problem", [](const std::string& text) { return problem_to_json(problem_from_json(text)); });

  m.def(
      "run_rule",
      [](const std::string& rule, const std::string& problem, const std::vector<std::string>& order,
         const std::optional<std::string>& cutter, const std::optional<std::string>& utility_mode) {
        Problem p = problem_from_json(problem);
        return output_dict(p, run_rule(rule, p, config(order, cutter), mode_of(utility_mode)));
      },
      py::arg("rule"), py::arg("problem"), py::arg("order") = std::vector<std::string>{},
      py::arg("cutter") = std::nullopt, py::arg("utility_mode") = std::nullopt);

  m.def(
      "check",
      [](const std::string& problem, const std::string& division, const std::string& utility_mode) {
        Problem p = problem_from_json(problem);
        Division x = division_from_json(p, division);
        UtilityMode um = parse_utility_mode(utility_mode);
        UtilityVector u = utilities(p, x, um);
        py::dict d;
        d["pieces"] = pieces(p, x, u);
        d["prop"] = check_prop(p, x, um);
        d["ef"] = check_ef(p, x, um);
        d["equitable_relative"] = check_equitable(p, x, ValueMode::Relative, um).equitable;
        d["equitable_absolute"] = check_equitable(p, x, ValueMode::Absolute, um).equitable;
        d["nash_product"] = to_string(nash_product(p, x, um));
        if (um == UtilityMode::Connected) {
          d["wpo"] = check_wpo_connected(p, x).pass;
          d["po"] = check_po_connected(p, x).pass;
        }
        return d;
      },
      py::arg("problem"), py::arg("division"), py::arg("utility_mode") = "connected");

  m.def(
      "check_rm",
      [](const std::string& rule, const std::string& problem, const std::string& enlargement,
         const std::vector<std::string>& order, const std::optional<std::string>& cutter) {
        return verdict_dict(
            check_rm(rule, config(order, cutter), problem_from_json(problem), enlargement_from_json(enlargement)));
      },
      py::arg("rule"), py::arg("problem"), py::arg("enlargement"), py::arg("order") = std::vector<std::string>{},
      py::arg("cutter") = std::nullopt);

  m.def(
      "check_pm",
      [](const std::string& rule, const std::string& problem, const std::string& leaving,
         const std::vector<std::string>& order, const std::optional<std::string>& cutter) {
        return verdict_dict(check_pm(rule, config(order, cutter), problem_from_json(problem), leaving));
      },
      py::arg("rule"), py::arg("problem"), py::arg("leaving"), py::arg("order") = std::vector<std::string>{},
      py::arg("cutter") = std::nullopt);

  m.def("run_fixture", [](const std::string& name) {
    py::list out;
    for (const auto& c : run_fixture(name)) {
      py::dict d;
      d["fixture"] = c.fixture;
      d["claim"] = c.claim;
      d["pass"] = c.pass;
      d["expected"] = c.expected;
      d["got"] = c.got;
      out.append(d);
    }
    return out;
  });

  m.def("to_decimal", [](const std::string& x, int digits) { return to_decimal(parse_rat(x), digits); },
        py::arg("value"), py::arg("digits") = 6);
}
