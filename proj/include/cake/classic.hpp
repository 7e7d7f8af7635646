#pragma once

// Classic proportional protocols, run exactly on step densities.
//
// Tie policy: choosers and trimmers facing equally good options take the
// rightmost one; competing marks at the same point go to the lowest agent
// index. Shrinking protocols (Banach-Knaster, Dubins-Spanier) measure each
// round's share as 1/m of what is left of the cake for the m remaining agents.

#include "cake/division.hpp"

namespace cake {

/// Two agents. The cutter halves the cake at its leftmost half-mark; the
/// other agent takes the piece it weakly prefers (ties: right piece).
Division cut_and_choose(const Problem& p, std::size_t cutter);

/// Last-diminisher. `order` fixes who cuts first and the trimming sequence.
Division banach_knaster(const Problem& p, const Ordering& order);

/// Left-to-right moving knife; the earliest stopper exits with its piece.
Division dubins_spanier(const Problem& p);

/// Divide-and-conquer: m agents split in ratio floor(m/2) : ceil(m/2).
Division even_paz(const Problem& p);

/// Agents join in `order`; each newcomer takes the best of k+1 equal parts
/// from every incumbent. Pieces may be disconnected.
Division fink(const Problem& p, const Ordering& order);

/// Three agents; roles = (cutter, trimmer, third). Pieces may be disconnected.
Division selfridge_conway(const Problem& p, const Ordering& roles);

}  // namespace cake
