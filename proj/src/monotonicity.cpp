#include "cake/monotonicity.hpp"

namespace cake {

std::string_view to_string(Axiom axiom) { return axiom == Axiom::RM ? "RM" : "PM"; }

namespace {

// Absolute utilities of the compared agents, per division.
using Table = std::vector<std::vector<Rat>>;

Table project(const RuleOutput& out, const Problem& p, const std::vector<std::string>& agents) {
  Table t;
  for (const auto& u : out.utilities) {
    std::vector<Rat> row;
    for (const auto& name : agents) row.push_back(u.absolute[p.index_of(name)]);
    t.push_back(std::move(row));
  }
  return t;
}

bool weakly_above(const std::vector<Rat>& hi, const std::vector<Rat>& lo) {
  for (std::size_t k = 0; k < hi.size(); ++k)
    if (hi[k] < lo[k]) return false;
  return true;
}

// For every row of `from` some row of `to` compares favourably:
// to >= from when `to_above`, to <= from otherwise.
// Indices in the result are (from, to).
std::pair<bool, std::pair<std::size_t, std::size_t>> every_has_match(const Table& from, const Table& to,
                                                                      bool to_above) {
  std::optional<std::pair<std::size_t, std::size_t>> first_match;
  for (std::size_t f = 0; f < from.size(); ++f) {
    std::optional<std::size_t> match;
    for (std::size_t g = 0; g < to.size() && !match; ++g)
      if (to_above ? weakly_above(to[g], from[f]) : weakly_above(from[f], to[g])) match = g;
    if (!match) return {false, {f, 0}};
    if (!first_match) first_match = std::make_pair(f, *match);
  }
  return {true, *first_match};
}

MonotonicityVerdict compare(Axiom axiom, std::string_view rule, const RuleConfig& cfg, const Problem& before_p,
                            const Problem& after_p, std::optional<UtilityMode> mode) {
  MonotonicityVerdict v;
  v.axiom = axiom;
  v.rule = std::string(rule);
  v.before = run_rule(rule, before_p, cfg, mode);
  try {
    v.after = run_rule(rule, after_p, cfg, mode);
  } catch (const RulePreconditionError& e) {
    v.applicable = false;
    v.note = e.what();
    return v;
  }

  std::vector<std::string> agents;
  for (const auto& name : before_p.names())
    if (after_p.find(name)) agents.push_back(name);
  Table b = project(v.before, before_p, agents);
  Table a = project(v.after, after_p, agents);
  for (std::size_t k = 0; k < agents.size(); ++k) v.agents.push_back({agents[k], b[0][k], a[0][k]});

  // forward: every "before" division is matched by an "after" division at least as good.
  auto [fwd_ok, fwd_pair] = every_has_match(b, a, true);
  DirectionVerdict forward{fwd_ok, fwd_pair.first, fwd_pair.second};
  // backward: every "after" division is matched by a "before" division at most as good.
  auto [bwd_ok, bwd_pair] = every_has_match(a, b, false);
  DirectionVerdict backward{bwd_ok, bwd_pair.second, bwd_pair.first};

  if (axiom == Axiom::RM) {
    v.upwards = forward;
    v.downwards = backward;
  } else {
    v.downwards = forward;
    v.upwards = backward;
  }
  return v;
}

}  // namespace

MonotonicityVerdict check_rm(std::string_view rule, const RuleConfig& cfg, const Problem& p,
                             const Enlargement& extra, std::optional<UtilityMode> mode) {
  return compare(Axiom::RM, rule, cfg, p, append(p, extra), mode);
}

MonotonicityVerdict check_pm(std::string_view rule, const RuleConfig& cfg, const Problem& p,
                             std::string_view leaving, std::optional<UtilityMode> mode) {
  return compare(Axiom::PM, rule, cfg, p, remove_agent(p, leaving), mode);
}

}  // namespace cake
