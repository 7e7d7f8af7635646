#pragma once

// Divisions, utilities and exact axiom checkers.
//
// The efficiency checks (WPO, PO) search connected partitions only: with
// connected utilities every improving division can be shrunk to one interval
// per agent, so sweeping all n! agent orderings is complete in that model.

#include "cake/measure.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cake {

/// Permutation of agent indices; agent order[0] gets the leftmost interval.
using Ordering = std::vector<std::size_t>;

/// All permutations of 0..n-1 in lexicographic order.
std::vector<Ordering> all_orderings(std::size_t n);
/// Comma-separated agent names, e.g. "B,C,A".
std::string format_ordering(const Problem& p, const Ordering& order);
/// Parses a comma-separated name list into an ordering of all agents.
Ordering parse_ordering(const Problem& p, std::string_view names);

enum class ValueMode { Relative, Absolute };
std::string_view to_string(ValueMode mode);
ValueMode parse_value_mode(std::string_view text);

/// One piece per agent (indexed like the problem's agents). Pieces of
/// different agents may share endpoints but not positive-length overlaps.
/// Free disposal: pieces need not cover the cake.
struct Division {
  std::vector<Piece> pieces;
};

/// Throws std::invalid_argument when the division does not fit the problem.
void validate(const Problem& p, const Division& x);

/// The connected partition that hands [cut_{k-1}, cut_k] to order[k], with
/// cut_{-1} = 0 and the last piece running to the end of the cake. Extra
/// trailing cuts (greedy_fit returns n of them) are ignored.
Division pi_partition(const Problem& p, const Ordering& order, std::span<const Rat> cuts);

struct UtilityVector {
  std::vector<Rat> absolute;
  std::vector<Rat> relative;
  UtilityMode mode = UtilityMode::Connected;

  friend bool operator==(const UtilityVector&, const UtilityVector&) = default;
};

UtilityVector utilities(const Problem& p, const Division& x,
                        UtilityMode mode = UtilityMode::Connected);

bool check_prop(const Problem& p, const Division& x, UtilityMode mode = UtilityMode::Connected);
bool check_ef(const Problem& p, const Division& x, UtilityMode mode = UtilityMode::Connected);

struct PartitionStats {
  Rat v_min;
  Rat v_max;
};

struct EquitableCheck {
  bool equitable = false;
  PartitionStats stats;
};

EquitableCheck check_equitable(const Problem& p, const Division& x, ValueMode value_mode,
                               UtilityMode mode = UtilityMode::Connected);

/// Sequential minimal prefixes in ordering `order`: agent order[k] marks
/// leftmost_mark(previous cut, targets[order[k]]). Returns all n marks, or
/// nullopt when a mark does not exist or the last one passes the cake's end.
/// `targets` is indexed by agent.
std::optional<std::vector<Rat>> greedy_fit(const Problem& p, const Ordering& order,
                                           std::span<const Rat> targets);

struct ConstrainedMax {
  Rat value;
  Division division;
};

/// Best value for `pivot` in a connected `order`-partition where every other
/// agent i gets at least targets[i] (targets[pivot] is ignored).
std::optional<ConstrainedMax> constrained_max(const Problem& p, const Ordering& order,
                                              std::size_t pivot, std::span<const Rat> targets);

/// constrained_max maximized over every ordering (first best ordering wins ties).
std::optional<ConstrainedMax> constrained_max_any(const Problem& p, std::size_t pivot,
                                                  std::span<const Rat> targets);

/// Largest delta such that greedy_fit succeeds with targets
/// base[i] + delta * total(i) (negative targets count as zero). Negative when
/// `base` itself is out of reach for this ordering.
Rat max_slack(const Problem& p, const Ordering& order, std::span<const Rat> base);

struct EfficiencyCheck {
  bool pass = true;
  std::optional<Ordering> ordering;
  std::optional<Division> witness;
  std::vector<Rat> witness_utilities;  // absolute, connected
};

/// Weak Pareto-optimality among connected divisions. On failure the witness is
/// the improving partition at half the maximal slack, for the lexicographically
/// first ordering that admits one.
EfficiencyCheck check_wpo_connected(const Problem& p, const Division& x);
/// Pareto-optimality among connected divisions.
EfficiencyCheck check_po_connected(const Problem& p, const Division& x);

Rat nash_product(const Problem& p, const Division& x, UtilityMode mode = UtilityMode::Connected);

/// True iff all divisions induce the same utility vector. Throws on an empty set.
bool check_esv(const Problem& p, std::span<const Division> divisions,
               UtilityMode mode = UtilityMode::Connected);

/// Witness verification: every agent strictly prefers `better` to `base`.
bool strictly_dominates(const Problem& p, const Division& better, const Division& base,
                        UtilityMode mode);

}  // namespace cake
