#pragma once

// Resource- and population-monotonicity as executable checks.
//
// Rules may return several divisions, so a direction passes when for every
// division on one side some division on the other side leaves every compared
// agent weakly better (or weakly worse) off. Only absolute values are compared.

#include "cake/rules.hpp"

namespace cake {

enum class Axiom { RM, PM };
std::string_view to_string(Axiom axiom);

struct DirectionVerdict {
  bool pass = false;
  // The division pair that settles the verdict: on failure the unmatched
  // division and the closest candidate; on success the first matched pair.
  std::size_t before_index = 0;
  std::size_t after_index = 0;
};

struct AgentComparison {
  std::string agent;
  Rat before;
  Rat after;
};

struct MonotonicityVerdict {
  Axiom axiom = Axiom::RM;
  std::string rule;
  // False when the rule is undefined on one of the two problems (for
  // instance a two-agent rule after an agent left). Both directions fail then.
  bool applicable = true;
  std::string note;
  DirectionVerdict upwards;
  DirectionVerdict downwards;
  std::vector<AgentComparison> agents;  // compared agents, first division on each side
  RuleOutput before;
  RuleOutput after;

  bool pass() const { return applicable && upwards.pass && downwards.pass; }
};

/// Runs the rule on `p` and on `p` enlarged on the right. Upwards: the larger
/// cake never hurts anyone. Downwards: the smaller cake never helps anyone.
MonotonicityVerdict check_rm(std::string_view rule, const RuleConfig& cfg, const Problem& p,
                             const Enlargement& extra, std::optional<UtilityMode> mode = std::nullopt);

/// Runs the rule on `p` and on `p` without `leaving`. Downwards: a departure
/// never hurts the remaining agents. Upwards: an arrival never helps them.
MonotonicityVerdict check_pm(std::string_view rule, const RuleConfig& cfg, const Problem& p,
                             std::string_view leaving, std::optional<UtilityMode> mode = std::nullopt);

}  // namespace cake
