#pragma once

// Division rules that satisfy monotonicity axioms:
//
//   exact-proportional   every agent gets exactly 1/n of its own total
//   relative-equitable   max common relative value over connected partitions
//   absolute-equitable   max common absolute value over connected partitions
//   rightmost-mark       two agents, cut at the rightmost half-point
//
// The equitable value of an ordering is computed twice, by an event-driven
// moving-knife simulation and by a parametric search over the greedy fit.
// max_equitable insists that both agree.

#include "cake/rule_output.hpp"

namespace cake {

struct EquitableResult {
  Ordering ordering;
  std::vector<Rat> cuts;  // n - 1 nondecreasing positions
  Rat value;              // common value, in `mode` units
  ValueMode mode = ValueMode::Relative;

  Division division(const Problem& p) const { return pi_partition(p, ordering, cuts); }
};

/// Banach-Knaster variant with the fraction fixed at 1/n of each agent's
/// original total; the leftover after round n is discarded.
Division exact_proportional(const Problem& p);

/// Exact moving-knife simulation for one ordering. The returned partition
/// covers the whole cake and every agent's value equals `value`.
EquitableResult equitable_for_ordering(const Problem& p, const Ordering& order, ValueMode mode);

/// Largest t such that the greedy fit succeeds with demands t * scale_i
/// (scale_i = total_i for relative values, 1 for absolute values).
Rat equitable_value_oracle(const Problem& p, const Ordering& order, ValueMode mode);

/// All max-equitable connected divisions, one per optimal ordering, listed in
/// lexicographic ordering order. Intended for n <= 8.
RuleOutput max_equitable(const Problem& p, ValueMode mode);

/// Two agents only. Throws RulePreconditionError otherwise.
Division rightmost_mark_rule(const Problem& p);

}  // namespace cake
