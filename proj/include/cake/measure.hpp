#pragma once

// Piecewise-constant value measures on an interval cake [0, c].
//
// A cake is a SliceGrid (consecutive slices of positive length) and each agent
// holds one non-negative density per slice. Every query here is exact: values
// are step-function integrals and marks are solved in closed form against the
// prefix-value function, which is continuous and piecewise linear.

#include "cake/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cake {

struct Interval {
  Rat lo;
  Rat hi;

  bool empty() const { return lo == hi; }
  Rat length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A piece is a finite set of pairwise-disjoint intervals (shared endpoints allowed).
using Piece = std::vector<Interval>;

/// How an agent turns a (possibly disconnected) piece into utility.
enum class UtilityMode {
  Connected,  // value of the best maximal connected component
  Additive,   // plain measure of the whole piece
};

std::string_view to_string(UtilityMode mode);
UtilityMode parse_utility_mode(std::string_view text);

/// Sorts, drops empty intervals and merges touching ones. Throws
/// std::invalid_argument when two intervals overlap in positive length.
Piece normalize_piece(Piece piece);

class SliceGrid {
 public:
  /// Requires at least one slice; every length strictly positive.
  explicit SliceGrid(std::vector<Rat> lengths);

  std::size_t size() const { return lengths_.size(); }
  const Rat& length(std::size_t k) const { return lengths_[k]; }
  const Rat& start(std::size_t k) const { return breaks_[k]; }
  const Rat& end(std::size_t k) const { return breaks_[k + 1]; }
  const Rat& cake_length() const { return breaks_.back(); }
  const std::vector<Rat>& lengths() const { return lengths_; }
  /// size() + 1 strictly increasing points from 0 to cake_length().
  const std::vector<Rat>& breakpoints() const { return breaks_; }

  /// Index k with start(k) <= x < end(k); size() when x >= cake_length().
  std::size_t slice_at(const Rat& x) const;

 private:
  std::vector<Rat> lengths_;
  std::vector<Rat> breaks_;
};

/// One agent's absolute value measure: a step density over a shared grid.
class Measure {
 public:
  /// Densities must match the grid's slice count, be >= 0 and give a positive total.
  Measure(std::shared_ptr<const SliceGrid> grid, std::vector<Rat> densities);

  const SliceGrid& grid() const { return *grid_; }
  const std::vector<Rat>& densities() const { return densities_; }
  const Rat& density(std::size_t k) const { return densities_[k]; }
  const Rat& total() const { return prefix_.back(); }

  /// Value of [0, x] for x in [0, c].
  Rat prefix(const Rat& x) const;
  /// Exact integral over the interval. Throws std::out_of_range outside [0, c].
  Rat value(const Interval& iv) const;
  /// Utility of a piece: sum (Additive) or best merged component (Connected).
  Rat value(const Piece& piece, UtilityMode mode) const;

  /// Minimal y >= start with value([start, y]) == target, or nullopt when the
  /// rest of the cake is worth less than target. Left-continuous in target.
  std::optional<Rat> leftmost_mark(const Rat& start, const Rat& target) const;
  /// Maximal y with value([0, y]) == target.
  std::optional<Rat> rightmost_mark(const Rat& target) const;
  /// Maximal x <= end with value([x, end]) == target.
  std::optional<Rat> suffix_mark(const Rat& end, const Rat& target) const;

  /// Density of the slice immediately to the right of x (0 at the cake's end).
  Rat density_right_of(const Rat& x) const;

 private:
  void check_point(const Rat& x) const;

  std::shared_ptr<const SliceGrid> grid_;
  std::vector<Rat> densities_;
  std::vector<Rat> prefix_;  // value of [0, breakpoint k]
};

/// Slices appended on the right of a problem's cake, with a density row per
/// agent name. An empty `lengths` list is a valid (trivial) enlargement.
struct Enlargement {
  std::vector<Rat> lengths;
  std::map<std::string, std::vector<Rat>> densities;
};

/// A cake-cutting instance: named agents, a cake, one measure per agent.
class Problem {
 public:
  Problem(std::vector<std::string> names, SliceGrid grid,
          std::vector<std::vector<Rat>> densities);

  std::size_t agent_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index_of(std::string_view name) const;

  const SliceGrid& grid() const { return *grid_; }
  const Rat& cake_length() const { return grid_->cake_length(); }
  const Measure& measure(std::size_t i) const { return measures_[i]; }
  const Rat& total(std::size_t i) const { return measures_[i].total(); }

 private:
  std::vector<std::string> names_;
  std::shared_ptr<const SliceGrid> grid_;
  std::vector<Measure> measures_;
};

/// Cake enlargement on the right. Every agent of `p` needs a density row and
/// no unknown agents may appear; prefix values of the old cake are unchanged.
Problem append(const Problem& p, const Enlargement& extra);

/// Population reduction. Throws for unknown agents or when only one agent remains.
Problem remove_agent(const Problem& p, std::string_view name);

}  // namespace cake
