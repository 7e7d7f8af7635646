#pragma once

// Seeded generators for randomized suites: small integer densities (0..9,
// at least one positive slice per agent) on short grids.

#include "cake/measure.hpp"

#include <random>

namespace cake {

struct RandomCakeShape {
  std::size_t min_agents = 2;
  std::size_t max_agents = 4;
  std::size_t max_slices = 6;
  bool positive = false;  // densities 1..9 instead of 0..9
};

using Rng = std::mt19937_64;

/// Agents are named A, B, C, ...
Problem random_problem(Rng& rng, const RandomCakeShape& shape = {});
/// One to three extra slices for every agent of `p`.
Enlargement random_enlargement(Rng& rng, const Problem& p, bool positive = false);

}  // namespace cake
