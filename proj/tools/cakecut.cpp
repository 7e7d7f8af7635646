// cakecut: run division rules, check axioms and replay the fixture suite.
//
// Exit codes: 0 success / all PASS, 1 some check FAILED, 2 usage or input error.

#include "cake/classic.hpp"
#include "cake/fixtures.hpp"
#include "cake/io.hpp"
#include "cake/monotone_rules.hpp"
#include "cake/monotonicity.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace cake;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int g_decimal = -1;

std::string show(const Rat& r) {
  if (g_decimal < 0) return to_string(r);
  return to_string(r) + " (" + to_decimal(r, g_decimal) + ")";
}

std::string show_piece(const Piece& piece) {
  if (piece.empty()) return "{}";
  std::string out;
  for (const auto& iv : piece) {
    if (!out.empty()) out += " u ";
    out += "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_division(const Problem& p, const Division& x, const UtilityVector& u) {
  for (std::size_t i = 0; i < p.agent_count(); ++i)
    std::cout << "  " << p.name(i) << ": " << show_piece(x.pieces[i]) << " absolute=" << show(u.absolute[i])
              << " relative=" << show(u.relative[i]) << "\n";
}

UtilityMode utility_mode_arg(const std::string& text, std::string_view rule = {}) {
  if (text.empty()) return rule.empty() ? UtilityMode::Connected : natural_utility_mode(rule);
  return parse_utility_mode(text);
}

struct RuleArgs {
  std::string rule;
  std::string order;
  std::string cutter;
  std::string utility_mode;
  std::string mode;

  void add_to(CLI::App* app) {
    app->add_option("--rule", rule, "division rule")->required();
    app->add_option("--order,--ordering", order, "agent order, e.g. A,B,C");
    app->add_option("--cutter", cutter, "cutter for cut-and-choose");
    app->add_option("--utility-mode", utility_mode, "connected | additive (default: rule's natural mode)");
    app->add_option("--mode", mode, "relative | absolute, for --rule max-equitable");
  }

  std::string resolved_rule() const {
    if (rule == "max-equitable") return mode == "absolute" ? "absolute-equitable" : "relative-equitable";
    if (!mode.empty()) throw UsageError("--mode only applies to --rule max-equitable");
    if (!is_rule(rule)) throw UsageError("unknown rule: " + rule);
    return rule;
  }

  RuleConfig config(const Problem& p) const {
    RuleConfig cfg;
    cfg.order = split_list(order);
    for (const auto& name : cfg.order) p.index_of(name);
    if (!cutter.empty()) {
      p.index_of(cutter);
      cfg.cutter = cutter;
    }
    return cfg;
  }
};

void print_output(const Problem& p, const RuleOutput& out) {
  std::cout << "rule: " << out.rule << "\n";
  if (out.equitable_value) std::cout << "equitable-value: " << show(*out.equitable_value) << "\n";
  for (std::size_t k = 0; k < out.divisions.size(); ++k) {
    std::cout << "division " << k + 1 << " of " << out.divisions.size();
    if (k < out.orderings.size()) std::cout << " (ordering " << format_ordering(p, out.orderings[k]) << ")";
    std::cout << ":\n";
    print_division(p, out.divisions[k], out.utilities[k]);
  }
}

int run_divide(const RuleArgs& args, const std::string& problem_file, const std::string& out_file) {
  Problem p = problem_from_json(read_text(problem_file));
  std::string rule = args.resolved_rule();
  RuleOutput out = run_rule(rule, p, args.config(p), utility_mode_arg(args.utility_mode, rule));
  print_output(p, out);
  if (!out_file.empty()) write_text(out_file, division_to_json(p, out.divisions.front()));
  return kPass;
}

int run_max_equitable(const std::string& problem_file, const std::string& mode, const std::string& out_file) {
  Problem p = problem_from_json(read_text(problem_file));
  RuleOutput out = max_equitable(p, parse_value_mode(mode));
  print_output(p, out);
  if (!out_file.empty()) write_text(out_file, division_to_json(p, out.divisions.front()));
  return kPass;
}

int run_check(const std::string& problem_file, const std::string& division_file, const std::string& properties,
              const std::string& utility_mode, const std::string& mode, const std::string& witness_file) {
  Problem p = problem_from_json(read_text(problem_file));
  Division x = division_from_json(p, read_text(division_file));
  UtilityMode um = utility_mode_arg(utility_mode);
  auto props = split_list(properties);
  if (props.empty() && witness_file.empty()) throw UsageError("--properties needs at least one property");
  for (const auto& prop : props)
    if (prop != "prop" && prop != "ef" && prop != "equitable" && prop != "wpo" && prop != "po")
      throw UsageError("unknown property: " + prop);
  if (um == UtilityMode::Additive)
    for (const auto& prop : props)
      if (prop == "wpo" || prop == "po")
        throw UsageError(prop + " is only supported for connected utilities; use --witness for additive claims");

  bool all = true;
  auto line = [&](const std::string& name, bool pass) {
    all = all && pass;
    std::cout << name << ": " << (pass ? "PASS" : "FAIL");
  };
  auto u = utilities(p, x, um);
  std::cout << "utility-mode: " << to_string(um) << "\n";
  print_division(p, x, u);
  for (const auto& prop : props) {
    if (prop == "prop") {
      line("prop", check_prop(p, x, um));
    } else if (prop == "ef") {
      line("ef", check_ef(p, x, um));
    } else if (prop == "equitable") {
      ValueMode vm = parse_value_mode(mode.empty() ? "relative" : mode);
      auto eq = check_equitable(p, x, vm, um);
      line("equitable", eq.equitable);
      std::cout << " mode=" << to_string(vm) << " v_min=" << show(eq.stats.v_min) << " v_max=" << show(eq.stats.v_max);
    } else {
      auto eff = prop == "wpo" ? check_wpo_connected(p, x) : check_po_connected(p, x);
      line(prop, eff.pass);
      if (!eff.pass) {
        std::cout << " ordering=" << format_ordering(p, *eff.ordering) << " witness=";
        for (std::size_t i = 0; i < eff.witness_utilities.size(); ++i)
          std::cout << (i ? "," : "") << show(eff.witness_utilities[i]);
        std::cout << "\n";
        auto wu = utilities(p, *eff.witness);
        print_division(p, *eff.witness, wu);
        continue;
      }
    }
    std::cout << "\n";
  }
  if (!witness_file.empty()) {
    Division w = division_from_json(p, read_text(witness_file));
    auto wu = utilities(p, w, um);
    line("witness-dominates", strictly_dominates(p, w, x, um));
    std::cout << "\n";
    print_division(p, w, wu);
  }
  return all ? kPass : kFail;
}

int run_monotonicity(const std::string& axiom, const RuleArgs& args, const std::string& problem_file,
                     const std::string& enlargement_file, const std::string& leaving) {
  if (axiom != "rm" && axiom != "pm") throw UsageError("axiom must be rm or pm");
  if (axiom == "rm" && (enlargement_file.empty() || !leaving.empty()))
    throw UsageError("rm needs --enlargement and no --remove");
  if (axiom == "pm" && (leaving.empty() || !enlargement_file.empty()))
    throw UsageError("pm needs --remove and no --enlargement");
  Problem p = problem_from_json(read_text(problem_file));
  std::string rule = args.resolved_rule();
  RuleConfig cfg = args.config(p);
  std::optional<UtilityMode> um;
  if (!args.utility_mode.empty()) um = parse_utility_mode(args.utility_mode);
  MonotonicityVerdict v = axiom == "rm"
                              ? check_rm(rule, cfg, p, enlargement_from_json(read_text(enlargement_file)), um)
                              : check_pm(rule, cfg, p, leaving, um);
  std::cout << "axiom: " << to_string(v.axiom) << "\nrule: " << v.rule << "\n";
  if (!v.applicable) {
    std::cout << "not-applicable: " << v.note << "\nverdict: FAIL\n";
    return kFail;
  }
  for (const auto& a : v.agents)
    std::cout << a.agent << ": before=" << show(a.before) << " after=" << show(a.after) << "\n";
  std::cout << "upwards: " << (v.upwards.pass ? "PASS" : "FAIL") << "\n";
  std::cout << "downwards: " << (v.downwards.pass ? "PASS" : "FAIL") << "\n";
  std::cout << "verdict: " << (v.pass() ? "PASS" : "FAIL") << "\n";
  return v.pass() ? kPass : kFail;
}

void print_grid(const std::vector<GridRow>& grid) {
  std::cout << "rule";
  for (auto prop : kGridProperties) std::cout << " " << prop;
  std::cout << "\n";
  for (const auto& row : grid) {
    std::cout << row.rule;
    for (std::size_t j = 0; j < kGridProperties.size(); ++j) std::cout << " " << (row.holds[j] ? "Yes" : "No");
    std::cout << "\n";
    for (std::size_t j = 0; j < kGridProperties.size(); ++j)
      if (!row.holds[j])
        std::cout << "  " << kGridProperties[j] << " fails on " << row.counterexample[j] << "\n";
  }
}

int run_tables(const std::string& only, bool list) {
  if (list) {
    for (const auto& name : fixture_names()) std::cout << name << "\n";
    return kPass;
  }
  std::vector<std::string> names = fixture_names();
  if (!only.empty()) {
    if (std::find(names.begin(), names.end(), only) == names.end()) throw UsageError("unknown fixture: " + only);
    names = {only};
  }
  std::size_t passed = 0, total = 0;
  for (const auto& name : names) {
    std::vector<Claim> claims;
    if (name == "property-grid") {
      auto grid = compute_property_grid();
      print_grid(grid);
      claims = compare_property_grid(grid);
    } else {
      claims = run_fixture(name);
    }
    for (const auto& c : claims) {
      std::cout << format_claim(c) << "\n";
      passed += c.pass;
      ++total;
    }
  }
  std::cout << "summary: " << passed << "/" << total << " claims passed\n";
  return passed == total ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cake-cutting rules, axiom checks and monotonicity experiments"};
  app.require_subcommand(1);
  app.add_option("--decimal", g_decimal, "also show values rounded to N decimals")->check(CLI::Range(0, 60));

  std::string problem, out, division, properties, utility_mode, mode, witness, enlargement, leaving, only, axiom;
  bool list = false;
  RuleArgs rule_args;

  auto* divide = app.add_subcommand("divide", "run a division rule on a problem file");
  rule_args.add_to(divide);
  divide->add_option("--problem", problem, "problem file")->required();
  divide->add_option("--out", out, "write the (first) division to this file");

  auto* maxeq = app.add_subcommand("max-equitable", "all max-equitable connected divisions");
  maxeq->add_option("--problem", problem, "problem file")->required();
  maxeq->add_option("--mode", mode, "relative | absolute")->default_val("relative");
  maxeq->add_option("--out", out, "write the first division to this file");

  auto* check = app.add_subcommand("check", "check axioms of a given division");
  check->add_option("--problem", problem, "problem file")->required();
  check->add_option("--division", division, "division file")->required();
  check->add_option("--properties", properties, "comma list of prop, ef, equitable, wpo, po");
  check->add_option("--utility-mode", utility_mode, "connected | additive")->default_val("connected");
  check->add_option("--mode", mode, "relative | absolute (for equitable)");
  check->add_option("--witness", witness, "division that should strictly dominate");

  auto* mono = app.add_subcommand("monotonicity", "resource (rm) or population (pm) monotonicity");
  mono->add_option("axiom", axiom, "rm | pm")->required();
  rule_args.add_to(mono);
  mono->add_option("--problem", problem, "problem file")->required();
  mono->add_option("--enlargement", enlargement, "slices appended on the right (rm)");
  mono->add_option("--remove", leaving, "leaving agent (pm)");

  auto* tables = app.add_subcommand("paper-tables", "replay every fixture and the property grid");
  tables->add_option("--only", only, "run a single fixture");
  tables->add_flag("--list", list, "list fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (divide->parsed()) return run_divide(rule_args, problem, out);
    if (maxeq->parsed()) return run_max_equitable(problem, mode, out);
    if (check->parsed()) return run_check(problem, division, properties, utility_mode, mode, witness);
    if (mono->parsed()) return run_monotonicity(axiom, rule_args, problem, enlargement, leaving);
    if (tables->parsed()) return run_tables(only, list);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Covers rule preconditions and unknown names.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
