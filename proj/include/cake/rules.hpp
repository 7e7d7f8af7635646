#pragma once

// Name-based access to every division rule, used by the harness and the CLI.

#include "cake/rule_output.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cake {

/// Rule parameters given by agent name so that they survive cake enlargement
/// and agent removal. Names missing from a problem are skipped; agents the
/// order does not mention are appended in index order.
struct RuleConfig {
  std::vector<std::string> order;  // fink, banach-knaster, selfridge-conway roles
  std::optional<std::string> cutter;  // cut-and-choose
};

const std::vector<std::string>& rule_names();
bool is_rule(std::string_view name);

/// Utility model in which a rule's guarantees are stated: additive for the
/// protocols that hand out disconnected pieces, connected otherwise.
UtilityMode natural_utility_mode(std::string_view rule);

/// Resolves `cfg.order` against `p` as described above.
Ordering resolve_order(const Problem& p, const RuleConfig& cfg);

/// Runs a rule; utilities are computed in `mode` (natural mode when unset).
/// Throws RulePreconditionError outside the rule's domain and
/// std::invalid_argument for an unknown rule.
RuleOutput run_rule(std::string_view rule, const Problem& p, const RuleConfig& cfg = {},
                    std::optional<UtilityMode> mode = std::nullopt);

}  // namespace cake
