#include "cake/fixtures.hpp"

#include "cake/classic.hpp"
#include "cake/random_cake.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cake {

namespace {

std::vector<Rat> unit(std::size_t slices) { return std::vector<Rat>(slices, Rat(1)); }

Problem make(std::vector<std::string> names, std::vector<std::vector<Rat>> rows) {
  auto lengths = unit(rows.front().size());
  return Problem(std::move(names), SliceGrid(std::move(lengths)), std::move(rows));
}

Enlargement extra(std::vector<std::string> names, std::vector<std::vector<Rat>> rows) {
  Enlargement e;
  e.lengths = unit(rows.front().size());
  for (std::size_t i = 0; i < names.size(); ++i) e.densities[names[i]] = rows[i];
  return e;
}

struct CorpusEntry {
  std::function<Problem()> problem;
  std::function<std::optional<Enlargement>()> enlargement;
};

const std::map<std::string, CorpusEntry, std::less<>>& corpus() {
  static const auto none = [] { return std::optional<Enlargement>(); };
  static const std::map<std::string, CorpusEntry, std::less<>> c = {
      {"step-values", {[] { return make({"A", "B"}, {{rat(5, 2), 0, 2, 2, 0, 0}, {1, 1, 0, 0, 1, 1}}); }, none}},
      {"cc-small",
       {[] { return make({"A", "B"}, {{1, 1, 1, 1}, {1, 1, 3, 3}}); },
        [] { return std::optional(extra({"A", "B"}, {{2}, {2}})); }}},
      {"sc-small",
       {[] {
          return make({"A", "B", "C"},
                      {{4, 2, 2, 4, 4, 2}, {5, 2, 3, 4, 1, 1}, {1, 2, 4, 4, 1, 1}});
        },
        [] { return std::optional(extra({"A", "B", "C"}, {{6}, {1}, {1}})); }}},
      {"ds-pm",
       {[] {
          return make({"A", "B", "C"},
                      {{20, 1, 1, 1, 10, 27}, {1, 20, 10, 28, 1, 1}, {1, 1, 18, 10, 29, 1}});
        },
        none}},
      {"fink-pm",
       {[] {
          return make({"A", "B", "C"},
                      {{2, 2, 2, 2, 1, 1, 2}, {0, 0, 0, 4, 2, 2, 4}, {0, 0, 0, 2, 1, 1, 2}});
        },
        none}},
      {"prop-po-small",
       {[] { return make({"A", "B"}, {{6, 0, 1, 1}, {0, 4, 2, 2}}); },
        [] { return std::optional(extra({"A", "B"}, {{6}, {0}})); }}},
      {"prop-po-reduced",
       {[] { return make({"A", "C"}, {{2, 0, 3, 0, 2, 0, 0}, {0, 2, 0, 2, 0, 0, 3}}); }, none}},
      {"po-ef-conflict",
       {[] {
          return make({"A", "B", "C"},
                      {{2, 0, 3, 0, 2, 0, 0}, {0, 0, 0, 0, 0, 7, 0}, {0, 2, 0, 2, 0, 0, 3}});
        },
        none}},
      {"nash", {[] { return make({"A", "B"}, {{2, 2, 2, 2, 2, 2}, {1, 1, 4, 4, 1, 1}}); }, none}},
      {"eq-small",
       {[] { return make({"A", "B"}, {{10, 10, 1, 1}, {1, 1, 10, 10}}); },
        [] { return std::optional(extra({"A", "B"}, {{10, 10}, {1, 1}})); }}},
      {"wpo-classic",
       {[] {
          return make({"A", "B", "C"}, {{2, 0, 0, 0, 0, 4}, {2, 3, 1, 1, 5, 0}, {2, 3, 1, 1, 5, 0}});
        },
        none}},
      {"wpo-fink", {[] { return make({"A", "B"}, {{0, 3, 2, 1}, {2, 1, 2, rat(11, 10)}}); }, none}},
      {"wpo-sc",
       {[] {
          return make({"A", "B", "C"}, {{3, 1, 3, 1, 2, 2}, {1, 3, 1, 3, 1, 2}, {4, 0, 0, 0, 0, 3}});
        },
        none}},
      {"two-slices", {[] { return make({"A", "B"}, {{2, 0}, {0, 2}}); }, none}},
      {"abs-not-prop", {[] { return make({"A", "B"}, {{1}, {10}}); }, none}},
      {"zero-region", {[] { return make({"A", "B"}, {{1, 0, 0}, {1, 1, 1}}); }, none}},
      {"identical", {[] { return make({"A", "B"}, {{1, 1}, {1, 1}}); }, none}},
  };
  return c;
}

const CorpusEntry& entry(std::string_view name) {
  auto it = corpus().find(name);
  if (it == corpus().end()) throw std::invalid_argument("unknown corpus cake: " + std::string(name));
  return it->second;
}

class Report {
 public:
  explicit Report(std::string fixture) : fixture_(std::move(fixture)) {}

  void equal(const std::string& claim, const Rat& expected, const Rat& got) {
    add(claim, expected == got, to_string(expected), to_string(got));
  }
  void at_most(const std::string& claim, const Rat& bound, const Rat& got) {
    add(claim, got <= bound, "<=" + to_string(bound), to_string(got));
  }
  void below(const std::string& claim, const Rat& bound, const Rat& got) {
    add(claim, got < bound, "<" + to_string(bound), to_string(got));
  }
  void at_least(const std::string& claim, const Rat& bound, const Rat& got) {
    add(claim, got >= bound, ">=" + to_string(bound), to_string(got));
  }
  void verdict(const std::string& claim, bool expected, bool got) {
    add(claim, expected == got, expected ? "PASS" : "FAIL", got ? "PASS" : "FAIL");
  }
  void text(const std::string& claim, const std::string& expected, const std::string& got) {
    add(claim, expected == got, expected, got);
  }

  std::vector<Claim> take() { return std::move(claims_); }

 private:
  void add(const std::string& claim, bool pass, std::string expected, std::string got) {
    claims_.push_back({fixture_, claim, pass, std::move(expected), std::move(got)});
  }

  std::string fixture_;
  std::vector<Claim> claims_;
};

Rat utility_of(const RuleOutput& out, const Problem& p, std::string_view agent, std::size_t which = 0) {
  return out.utilities.at(which).absolute[p.index_of(agent)];
}

Division piecewise(const Problem& p, const std::map<std::string, Piece>& pieces) {
  Division x;
  x.pieces.resize(p.agent_count());
  for (const auto& [name, piece] : pieces) x.pieces[p.index_of(name)] = normalize_piece(piece);
  validate(p, x);
  return x;
}

RuleConfig order_cfg(std::vector<std::string> order) { return RuleConfig{std::move(order), std::nullopt}; }

// --- fixtures ---------------------------------------------------------------

std::vector<Claim> noop() {
  Report r("noop");
  Problem p = corpus_problem("cc-small");
  r.verdict("cut-and-choose-rm", true, check_rm("cut-and-choose", {}, p, Enlargement{}).pass());
  r.verdict("relative-equitable-rm", true, check_rm("relative-equitable", {}, p, Enlargement{}).pass());
  Problem twins = corpus_problem("identical");
  auto v = check_pm("relative-equitable", {}, twins, "B");
  r.verdict("identical-pm", true, v.pass());
  r.equal("survivor-after", 2, v.agents.at(0).after);
  return r.take();
}

std::vector<Claim> step_values() {
  Report r("step-values");
  Problem p = corpus_problem("step-values");
  r.equal("total-A", rat(13, 2), p.total(0));
  r.equal("total-B", 4, p.total(1));
  r.equal("value-A-1/2-5/2", rat(9, 4), p.measure(0).value(Interval{rat(1, 2), rat(5, 2)}));
  return r.take();
}

std::vector<Claim> cc_rm() {
  Report r("cc-rm");
  Problem p = corpus_problem("cc-small");
  RuleConfig cfg;
  cfg.cutter = "A";
  auto v = check_rm("cut-and-choose", cfg, p, *corpus_enlargement("cc-small"));
  Problem q = append(p, *corpus_enlargement("cc-small"));
  r.equal("cut-before", 2, v.before.divisions[0].pieces[0].front().hi);
  r.equal("cut-after", 3, v.after.divisions[0].pieces[0].front().hi);
  r.equal("bob-before", 6, utility_of(v.before, p, "B"));
  r.equal("bob-after", 5, utility_of(v.after, q, "B"));
  r.verdict("rm", false, v.pass());
  return r.take();
}

std::vector<Claim> classic_rm() {
  Report r("classic-rm");
  Problem p = corpus_problem("cc-small");
  Problem q = append(p, *corpus_enlargement("cc-small"));
  for (std::string rule : {"banach-knaster", "dubins-spanier", "even-paz", "fink"}) {
    auto v = check_rm(rule, order_cfg({"A", "B"}), p, *corpus_enlargement("cc-small"));
    r.equal(rule + ".bob-before", 6, utility_of(v.before, p, "B"));
    r.equal(rule + ".bob-after", 5, utility_of(v.after, q, "B"));
    r.verdict(rule + ".rm", false, v.pass());
  }
  return r.take();
}

std::vector<Claim> sc_rm() {
  Report r("sc-rm");
  Problem p = corpus_problem("sc-small");
  Problem q = append(p, *corpus_enlargement("sc-small"));
  auto v = check_rm("selfridge-conway", order_cfg({"A", "B", "C"}), p, *corpus_enlargement("sc-small"));
  r.equal("carl-before", 8, utility_of(v.before, p, "C"));
  r.at_most("carl-after", 7, utility_of(v.after, q, "C"));
  r.below("carl-after-drops", 8, utility_of(v.after, q, "C"));
  r.verdict("rm", false, v.pass());
  return r.take();
}

std::vector<Claim> ds_pm() {
  Report r("ds-pm");
  Problem p = corpus_problem("ds-pm");
  Problem q = remove_agent(p, "B");
  for (std::string rule : {"dubins-spanier", "even-paz", "banach-knaster"}) {
    auto v = check_pm(rule, order_cfg({"A", "B", "C"}), p, "B");
    r.equal(rule + ".alice-before", 20, utility_of(v.before, p, "A"));
    r.equal(rule + ".bob-before", 30, utility_of(v.before, p, "B"));
    r.equal(rule + ".carl-before", 40, utility_of(v.before, p, "C"));
    r.equal(rule + ".carl-after", 30, utility_of(v.after, q, "C"));
    r.verdict(rule + ".pm", false, v.pass());
  }
  return r.take();
}

std::vector<Claim> fink_pm() {
  Report r("fink-pm");
  Problem p = corpus_problem("fink-pm");
  Problem q = remove_agent(p, "A");
  auto v = check_pm("fink", order_cfg({"A", "B", "C"}), p, "A");
  r.equal("bob-before", 8, utility_of(v.before, p, "B"));
  r.equal("bob-after", 6, utility_of(v.after, q, "B"));
  r.verdict("downwards-pm", false, v.downwards.pass);
  return r.take();
}

std::vector<Claim> prop_po_rm() {
  Report r("prop-po-rm");
  Problem p = corpus_problem("prop-po-small");
  std::vector<Rat> half = {p.total(0) / 2, p.total(1) / 2};
  r.equal("alice-max-given-bob-prop", 6, constrained_max_any(p, 0, half)->value);
  r.equal("bob-max-given-alice-prop", 8, constrained_max_any(p, 1, half)->value);
  Division x = piecewise(p, {{"A", {{0, 1}}}, {"B", {{1, 4}}}});
  auto u = utilities(p, x);
  r.equal("split.alice", 6, u.absolute[0]);
  r.equal("split.bob", 8, u.absolute[1]);
  r.verdict("split.prop", true, check_prop(p, x));
  r.verdict("split.po", true, check_po_connected(p, x).pass);

  Problem q = append(p, *corpus_enlargement("prop-po-small"));
  std::vector<Rat> half_q = {q.total(0) / 2, q.total(1) / 2};
  auto best = constrained_max_any(q, 1, half_q);
  r.equal("enlarged.bob-max-given-alice-prop", 6, best->value);
  r.below("enlarged.bob-drops", 8, best->value);
  return r.take();
}

std::vector<Claim> prop_po_pm() {
  Report r("prop-po-pm");
  Problem p = corpus_problem("prop-po-reduced");
  std::vector<Rat> targets = {0, p.total(1) / 2};
  r.equal("carl-half", rat(7, 2), targets[1]);
  r.equal("alice-max-given-carl-prop", 5, constrained_max_any(p, 0, targets)->value);
  auto ac = constrained_max(p, {0, 1}, 0, targets);
  r.equal("order-AC.carl-start", rat(15, 4), ac->division.pieces[1].front().lo);
  return r.take();
}

std::vector<Claim> po_ef_conflict() {
  Report r("po-ef-conflict");
  Problem p = corpus_problem("po-ef-conflict");
  Division x = piecewise(p, {{"A", {{0, 5}}}, {"B", {{5, 6}}}, {"C", {{6, 7}}}});
  const Measure& carl = p.measure(2);
  r.equal("carl-own", 3, carl.value(x.pieces[2], UtilityMode::Connected));
  r.equal("carl-values-alice", 4, carl.value(x.pieces[0], UtilityMode::Connected));
  r.verdict("ef", false, check_ef(p, x));
  r.verdict("prop", true, check_prop(p, x));
  return r.take();
}

std::vector<Claim> nash_connected() {
  Report r("nash-connected");
  Problem p = corpus_problem("nash");
  const auto& b = p.grid().breakpoints();
  std::optional<Rat> best_prop, best_any;
  for (const auto& order : all_orderings(2))
    for (const auto& cut : b) {
      std::vector<Rat> cuts = {cut};
      Division x = pi_partition(p, order, cuts);
      Rat prod = nash_product(p, x);
      if (!best_any || prod > *best_any) best_any = prod;
      if (check_prop(p, x) && (!best_prop || prod > *best_prop)) best_prop = prod;
    }
  r.equal("best-proportional", 36, *best_prop);
  r.equal("best-connected", 40, *best_any);
  Division two_four = piecewise(p, {{"A", {{0, 2}}}, {"B", {{2, 6}}}});
  r.equal("alice-2-bob-4", 40, nash_product(p, two_four));
  r.verdict("alice-2-bob-4.prop", false, check_prop(p, two_four));
  Division additive = piecewise(p, {{"A", {{0, 2}, {4, 6}}}, {"B", {{2, 4}}}});
  r.equal("additive-split", 64, nash_product(p, additive, UtilityMode::Additive));
  return r.take();
}

std::vector<Claim> rel_equitable_rm() {
  Report r("rel-equitable-rm");
  Problem p = corpus_problem("eq-small");
  Problem q = append(p, *corpus_enlargement("eq-small"));
  auto v = check_rm("relative-equitable", {}, p, *corpus_enlargement("eq-small"));
  r.equal("value-before", rat(10, 11), *v.before.equitable_value);
  r.equal("value-after", rat(1, 2), *v.after.equitable_value);
  for (std::size_t k = 0; k < v.before.divisions.size(); ++k)
    r.equal("bob-before#" + std::to_string(k), 20, utility_of(v.before, p, "B", k));
  for (std::size_t k = 0; k < v.after.divisions.size(); ++k)
    r.equal("bob-after#" + std::to_string(k), 12, utility_of(v.after, q, "B", k));
  r.verdict("rm", false, v.pass());
  return r.take();
}

std::vector<Claim> abs_equitable_rm() {
  Report r("abs-equitable-rm");
  Problem p = corpus_problem("eq-small");
  Problem q = append(p, *corpus_enlargement("eq-small"));
  auto v = check_rm("absolute-equitable", {}, p, *corpus_enlargement("eq-small"));
  r.equal("value-before", 20, *v.before.equitable_value);
  r.equal("value-after", rat(222, 11), *v.after.equitable_value);
  r.at_least("bob-after", 20, utility_of(v.after, q, "B"));
  r.verdict("rm", true, v.pass());
  return r.take();
}

std::vector<Claim> abs_equitable_prop() {
  Report r("abs-equitable-prop");
  Problem p = corpus_problem("abs-not-prop");
  auto out = run_rule("absolute-equitable", p);
  r.equal("value", rat(10, 11), *out.equitable_value);
  r.equal("bob-relative", rat(1, 11), out.utilities[0].relative[1]);
  r.verdict("prop", false, check_prop(p, out.divisions[0]));
  return r.take();
}

std::vector<Claim> exact_prop_wpo() {
  Report r("exact-prop-wpo");
  Problem p = corpus_problem("two-slices");
  auto out = run_rule("exact-proportional", p);
  r.equal("alice", 1, utility_of(out, p, "A"));
  r.equal("bob", 1, utility_of(out, p, "B"));
  r.equal("bob-start", rat(1, 2), out.divisions[0].pieces[1].front().lo);
  r.verdict("wpo", false, check_wpo_connected(p, out.divisions[0]).pass);
  r.verdict("po", false, check_po_connected(p, out.divisions[0]).pass);
  return r.take();
}

std::vector<Claim> wpo_classic() {
  Report r("wpo-classic");
  Problem p = corpus_problem("wpo-classic");
  Division witness = piecewise(p, {{"B", {{0, 3}}}, {"C", {{3, 5}}}, {"A", {{5, 6}}}});
  auto wu = utilities(p, witness);
  r.equal("witness.alice", 4, wu.absolute[0]);
  r.equal("witness.bob", 6, wu.absolute[1]);
  r.equal("witness.carl", 6, wu.absolute[2]);
  for (std::string rule : {"banach-knaster", "dubins-spanier", "even-paz"}) {
    auto out = run_rule(rule, p, order_cfg({"A", "B", "C"}));
    r.equal(rule + ".alice", 2, utility_of(out, p, "A"));
    r.equal(rule + ".bob", 5, utility_of(out, p, "B"));
    r.equal(rule + ".carl", 5, utility_of(out, p, "C"));
    r.verdict(rule + ".witness-dominates", true,
              strictly_dominates(p, witness, out.divisions[0], UtilityMode::Connected));
    r.verdict(rule + ".wpo", false, check_wpo_connected(p, out.divisions[0]).pass);
  }
  return r.take();
}

std::vector<Claim> wpo_fink() {
  Report r("wpo-fink");
  Problem p = corpus_problem("wpo-fink");
  auto out = run_rule("fink", p, order_cfg({"A", "B"}));
  r.equal("alice", 3, utility_of(out, p, "A"));
  r.equal("bob", rat(31, 10), utility_of(out, p, "B"));
  Division witness = piecewise(p, {{"A", {{1, 2}, {3, 4}}}, {"B", {{0, 1}, {2, 3}}}});
  auto wu = utilities(p, witness, UtilityMode::Additive);
  r.equal("witness.alice", 4, wu.absolute[0]);
  r.equal("witness.bob", 4, wu.absolute[1]);
  r.verdict("witness-dominates", true, strictly_dominates(p, witness, out.divisions[0], UtilityMode::Additive));
  return r.take();
}

std::vector<Claim> wpo_sc() {
  Report r("wpo-sc");
  Problem p = corpus_problem("wpo-sc");
  auto out = run_rule("selfridge-conway", p, order_cfg({"A", "B", "C"}));
  r.equal("alice", 4, utility_of(out, p, "A"));
  r.equal("bob", 4, utility_of(out, p, "B"));
  r.equal("carl", 4, utility_of(out, p, "C"));
  Division witness =
      piecewise(p, {{"A", {{2, 3}, {4, 5}}}, {"B", {{1, 2}, {3, 4}}}, {"C", {{0, 1}, {5, 6}}}});
  auto wu = utilities(p, witness, UtilityMode::Additive);
  r.equal("witness.alice", 5, wu.absolute[0]);
  r.equal("witness.bob", 6, wu.absolute[1]);
  r.equal("witness.carl", 7, wu.absolute[2]);
  r.verdict("witness-dominates", true, strictly_dominates(p, witness, out.divisions[0], UtilityMode::Additive));
  return r.take();
}

std::vector<Claim> cc_wpo() {
  Report r("cc-wpo");
  for (std::string name : {"cc-small", "prop-po-small", "nash", "eq-small", "wpo-fink", "two-slices", "zero-region"}) {
    Problem p = corpus_problem(name);
    for (std::size_t cutter = 0; cutter < 2; ++cutter) {
      Division x = cut_and_choose(p, cutter);
      r.verdict(name + ".cutter-" + p.name(cutter) + ".wpo", true, check_wpo_connected(p, x).pass);
    }
  }
  return r.take();
}

std::vector<Claim> property_grid_claims() { return compare_property_grid(compute_property_grid()); }

using FixtureFn = std::vector<Claim> (*)();

const std::vector<std::pair<std::string, FixtureFn>>& registry() {
  static const std::vector<std::pair<std::string, FixtureFn>> fx = {
      {"noop", noop},
      {"step-values", step_values},
      {"cc-rm", cc_rm},
      {"classic-rm", classic_rm},
      {"sc-rm", sc_rm},
      {"ds-pm", ds_pm},
      {"fink-pm", fink_pm},
      {"prop-po-rm", prop_po_rm},
      {"prop-po-pm", prop_po_pm},
      {"po-ef-conflict", po_ef_conflict},
      {"nash-connected", nash_connected},
      {"rel-equitable-rm", rel_equitable_rm},
      {"abs-equitable-rm", abs_equitable_rm},
      {"abs-equitable-prop", abs_equitable_prop},
      {"exact-prop-wpo", exact_prop_wpo},
      {"wpo-classic", wpo_classic},
      {"wpo-fink", wpo_fink},
      {"wpo-sc", wpo_sc},
      {"cc-wpo", cc_wpo},
      {"property-grid", property_grid_claims},
  };
  return fx;
}

// --- property grid ------------------------------------------------------------

struct GridCase {
  std::string label;
  Problem problem;
  Enlargement enlargement;
};

std::vector<GridCase> grid_corpus(std::size_t random_problems, unsigned seed) {
  std::vector<GridCase> cases;
  Rng rng(seed);
  for (const auto& name : corpus_names()) {
    Problem p = corpus_problem(name);
    auto e = corpus_enlargement(name);
    cases.push_back({name, p, e ? *e : random_enlargement(rng, p)});
  }
  RandomCakeShape shape;
  shape.max_agents = 3;
  for (std::size_t k = 0; k < random_problems; ++k) {
    Problem p = random_problem(rng, shape);
    Enlargement e = random_enlargement(rng, p);
    cases.push_back({"random#" + std::to_string(k), std::move(p), std::move(e)});
  }
  return cases;
}

}  // namespace


const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : corpus()) out.push_back(name);
    return out;
  }();
  return names;
}

Problem corpus_problem(std::string_view name) { return entry(name).problem(); }

std::optional<Enlargement> corpus_enlargement(std::string_view name) { return entry(name).enlargement(); }

std::string format_claim(const Claim& c) {
  return c.fixture + "/" + c.claim + ": " + (c.pass ? "PASS" : "FAIL") + " expected=" + c.expected +
         " got=" + c.got;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<Claim> run_fixture(std::string_view name) {
  for (const auto& [fixture, fn] : registry())
    if (fixture == name) return fn();
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

std::vector<GridRow> published_property_grid() {
  //                                   CON    EF     PROP   PO     WPO    RM     PM
  return {
      {"exact-proportional", {true, false, true, false, false, true, true}, {}},
      {"absolute-equitable", {true, false, false, false, true, true, true}, {}},
      {"relative-equitable", {true, false, true, false, true, false, true}, {}},
      {"rightmost-mark", {true, true, true, false, true, true, false}, {}},
  };
}

std::vector<Claim> compare_property_grid(const std::vector<GridRow>& computed) {
  Report r("property-grid");
  auto want = published_property_grid();
  auto yes_no = [](bool b) { return std::string(b ? "Yes" : "No"); };
  for (const auto& row : want) {
    auto got = std::find_if(computed.begin(), computed.end(), [&](const GridRow& g) { return g.rule == row.rule; });
    for (std::size_t j = 0; j < kGridProperties.size(); ++j)
      r.text(row.rule + "." + kGridProperties[j], yes_no(row.holds[j]),
             got == computed.end() ? "missing" : yes_no(got->holds[j]));
  }
  return r.take();
}

std::vector<GridRow> compute_property_grid(std::size_t random_problems, unsigned seed) {
  auto cases = grid_corpus(random_problems, seed);
  std::vector<GridRow> rows;
  for (const auto& published : published_property_grid()) {
    GridRow row;
    row.rule = published.rule;
    row.holds.fill(true);
    auto refute = [&](std::size_t j, const std::string& label) {
      if (!row.holds[j]) return;
      row.holds[j] = false;
      row.counterexample[j] = label;
    };
    for (const auto& c : cases) {
      const Problem& p = c.problem;
      if (row.rule == "rightmost-mark" && p.agent_count() != 2) continue;
      RuleOutput out = run_rule(row.rule, p);
      for (const auto& x : out.divisions) {
        bool connected = true;
        for (const auto& piece : x.pieces) connected = connected && piece.size() <= 1;
        if (!connected) refute(0, c.label);
        if (!check_ef(p, x)) refute(1, c.label);
        if (!check_prop(p, x)) refute(2, c.label);
        if (row.holds[3] && !check_po_connected(p, x).pass) refute(3, c.label);
        if (row.holds[4] && !check_wpo_connected(p, x).pass) refute(4, c.label);
      }
      if (!check_rm(row.rule, {}, p, c.enlargement).pass()) refute(5, c.label);
      if (p.agent_count() >= 2)
        for (const auto& leaving : p.names())
          if (!check_pm(row.rule, {}, p, leaving).pass()) refute(6, c.label + " without " + leaving);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cake
