#pragma once

// Scripted scenarios with known exact outcomes, plus the property grid for
// the connected rules. Each claim prints as
//   fixture/claim: PASS|FAIL expected=<value> got=<value>

#include "cake/monotonicity.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cake {

/// Named cakes used by fixtures, tests and the CLI (e.g. "cc-small", "ds-pm").
const std::vector<std::string>& corpus_names();
Problem corpus_problem(std::string_view name);
/// Enlargement that pairs with a corpus cake, if it has one ("cc-small" -> "cc-extra").
std::optional<Enlargement> corpus_enlargement(std::string_view name);

struct Claim {
  std::string fixture;
  std::string claim;
  bool pass = false;
  std::string expected;
  std::string got;
};

std::string format_claim(const Claim& c);

const std::vector<std::string>& fixture_names();
/// Throws std::invalid_argument for an unknown fixture.
std::vector<Claim> run_fixture(std::string_view name);

inline constexpr std::array<const char*, 7> kGridProperties = {"CON", "EF", "PROP", "PO", "WPO", "RM", "PM"};

struct GridRow {
  std::string rule;
  std::array<bool, 7> holds{};                  // observed on the whole corpus
  std::array<std::string, 7> counterexample{};  // first failing case, when any
};

/// Recomputes the property grid of the four connected rules over the named
/// corpus plus `random_problems` seeded random cakes.
std::vector<GridRow> compute_property_grid(std::size_t random_problems = 40, unsigned seed = 2017);
/// The published grid: true = "Yes" (including "yes for connected utilities").
std::vector<GridRow> published_property_grid();
/// One claim per cell of the published grid.
std::vector<Claim> compare_property_grid(const std::vector<GridRow>& computed);

}  // namespace cake
