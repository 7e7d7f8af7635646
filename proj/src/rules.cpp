#include "cake/rules.hpp"

#include "cake/classic.hpp"
#include "cake/monotone_rules.hpp"

#include <algorithm>

namespace cake {

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = {
      "exact-proportional", "relative-equitable", "absolute-equitable", "rightmost-mark",
      "cut-and-choose",     "banach-knaster",     "dubins-spanier",     "even-paz",
      "fink",               "selfridge-conway"};
  return names;
}

bool is_rule(std::string_view name) {
  const auto& names = rule_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

UtilityMode natural_utility_mode(std::string_view rule) {
  return rule == "fink" || rule == "selfridge-conway" ? UtilityMode::Additive
                                                      : UtilityMode::Connected;
}

Ordering resolve_order(const Problem& p, const RuleConfig& cfg) {
  Ordering order;
  std::vector<bool> used(p.agent_count(), false);
  for (const auto& name : cfg.order) {
    auto i = p.find(name);
    if (!i || used[*i]) continue;
    used[*i] = true;
    order.push_back(*i);
  }
  for (std::size_t i = 0; i < p.agent_count(); ++i)
    if (!used[i]) order.push_back(i);
  return order;
}

RuleOutput run_rule(std::string_view rule, const Problem& p, const RuleConfig& cfg,
                    std::optional<UtilityMode> mode) {
  UtilityMode um = mode.value_or(natural_utility_mode(rule));
  auto single = [&](Division x) {
    RuleOutput out;
    out.rule = std::string(rule);
    out.utilities.push_back(utilities(p, x, um));
    out.divisions.push_back(std::move(x));
    return out;
  };

  if (rule == "relative-equitable" || rule == "absolute-equitable") {
    auto out = max_equitable(p, rule == "relative-equitable" ? ValueMode::Relative : ValueMode::Absolute);
    if (um != UtilityMode::Connected)
      for (std::size_t k = 0; k < out.divisions.size(); ++k) out.utilities[k] = utilities(p, out.divisions[k], um);
    return out;
  }
  if (rule == "exact-proportional") return single(exact_proportional(p));
  if (rule == "rightmost-mark") return single(rightmost_mark_rule(p));
  if (rule == "cut-and-choose") {
    std::size_t cutter = resolve_order(p, cfg).front();
    if (cfg.cutter) cutter = p.index_of(*cfg.cutter);
    return single(cut_and_choose(p, cutter));
  }
  if (rule == "banach-knaster") return single(banach_knaster(p, resolve_order(p, cfg)));
  if (rule == "dubins-spanier") return single(dubins_spanier(p));
  if (rule == "even-paz") return single(even_paz(p));
  if (rule == "fink") return single(fink(p, resolve_order(p, cfg)));
  if (rule == "selfridge-conway") return single(selfridge_conway(p, resolve_order(p, cfg)));
  throw std::invalid_argument("unknown rule: " + std::string(rule));
}

}  // namespace cake
