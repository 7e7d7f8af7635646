#pragma once

#include "cake/division.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cake {

/// Raised when a rule is asked to run outside its domain (e.g. a two-agent
/// protocol on three agents).
class RulePreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// What a division rule returns: a nonempty set of divisions. Single-valued
/// rules return exactly one; the max-equitable rules return one division per
/// optimal ordering together with the common equitable value.
struct RuleOutput {
  std::string rule;
  std::vector<Division> divisions;
  std::vector<UtilityVector> utilities;  // parallel to divisions
  std::vector<Ordering> orderings;       // parallel to divisions when meaningful
  std::optional<Rat> equitable_value;
};

}  // namespace cake
