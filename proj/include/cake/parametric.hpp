#pragma once

// Exact parametric search over the sequential minimal-prefix fit.
//
// For a fixed ordering, let every agent i demand max(0, base[i] + t * weight[i])
// and let F(t) be the position of the last greedy mark. F is nondecreasing,
// left-continuous and piecewise affine in t. On each maximal "cell" of t where
// every mark stays inside the same slice, F is a single affine function, so the
// largest feasible t (F(t) <= c) can be solved for in closed form once the
// search has isolated the right cell.

#include "cake/division.hpp"

#include <span>

namespace cake {

/// Largest t with F(t) <= cake length. `base` and `weight` are indexed by
/// agent; weights must be strictly positive.
Rat max_feasible_parameter(const Problem& p, const Ordering& order, std::span<const Rat> base,
                           std::span<const Rat> weight);

}  // namespace cake
