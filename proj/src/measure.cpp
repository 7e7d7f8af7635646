#include "cake/measure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cake {

std::string_view to_string(UtilityMode mode) {
  return mode == UtilityMode::Connected ? "connected" : "additive";
}

UtilityMode parse_utility_mode(std::string_view text) {
  if (text == "connected") return UtilityMode::Connected;
  if (text == "additive") return UtilityMode::Additive;
  throw std::invalid_argument("unknown utility mode: " + std::string(text));
}

Piece normalize_piece(Piece piece) {
  for (const auto& iv : piece)
    if (iv.hi < iv.lo) throw std::invalid_argument("interval with hi < lo");
  std::erase_if(piece, [](const Interval& iv) { return iv.empty(); });
  std::sort(piece.begin(), piece.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Piece merged;
  for (const auto& iv : piece) {
    if (!merged.empty() && iv.lo < merged.back().hi)
      throw std::invalid_argument("overlapping intervals in piece");
    if (!merged.empty() && iv.lo == merged.back().hi)
      merged.back().hi = iv.hi;
    else
      merged.push_back(iv);
  }
  return merged;
}

SliceGrid::SliceGrid(std::vector<Rat> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw std::invalid_argument("a cake needs at least one slice");
  breaks_.reserve(lengths_.size() + 1);
  breaks_.push_back(0);
  for (const auto& len : lengths_) {
    if (len <= 0) throw std::invalid_argument("slice lengths must be positive");
    breaks_.push_back(breaks_.back() + len);
  }
}

std::size_t SliceGrid::slice_at(const Rat& x) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  if (it == breaks_.begin()) return 0;
  return std::min<std::size_t>(static_cast<std::size_t>(it - breaks_.begin()) - 1, size());
}

Measure::Measure(std::shared_ptr<const SliceGrid> grid, std::vector<Rat> densities)
    : grid_(std::move(grid)), densities_(std::move(densities)) {
  if (densities_.size() != grid_->size())
    throw std::invalid_argument("density row does not match the slice count");
  prefix_.reserve(densities_.size() + 1);
  prefix_.push_back(0);
  for (std::size_t k = 0; k < densities_.size(); ++k) {
    if (densities_[k] < 0) throw std::invalid_argument("densities must be non-negative");
    prefix_.push_back(prefix_.back() + densities_[k] * grid_->length(k));
  }
  if (prefix_.back() <= 0) throw std::invalid_argument("every agent must value the cake positively");
}

void Measure::check_point(const Rat& x) const {
  if (x < 0 || x > grid_->cake_length()) throw std::out_of_range("point outside the cake");
}

Rat Measure::prefix(const Rat& x) const {
  check_point(x);
  std::size_t k = grid_->slice_at(x);
  if (k == grid_->size()) return total();
  return prefix_[k] + densities_[k] * (x - grid_->start(k));
}

Rat Measure::value(const Interval& iv) const {
  if (iv.hi < iv.lo) throw std::out_of_range("interval with hi < lo");
  return prefix(iv.hi) - prefix(iv.lo);
}

Rat Measure::value(const Piece& piece, UtilityMode mode) const {
  Rat best = 0;
  Rat sum = 0;
  for (const auto& iv : normalize_piece(piece)) {
    Rat v = value(iv);
    sum += v;
    best = std::max(best, v);
  }
  return mode == UtilityMode::Additive ? sum : best;
}

std::optional<Rat> Measure::leftmost_mark(const Rat& start, const Rat& target) const {
  check_point(start);
  if (target < 0) throw std::invalid_argument("negative mark target");
  Rat want = prefix(start) + target;
  if (want > total()) return std::nullopt;
  // First breakpoint whose prefix reaches `want`; the mark lies in the slice before it.
  auto j = static_cast<std::size_t>(std::lower_bound(prefix_.begin(), prefix_.end(), want) -
                                    prefix_.begin());
  if (j == 0) return start;
  std::size_t k = j - 1;
  Rat y = grid_->start(k) + (want - prefix_[k]) / densities_[k];
  return std::max(y, start);
}

std::optional<Rat> Measure::rightmost_mark(const Rat& target) const {
  if (target < 0 || target > total()) return std::nullopt;
  // Last breakpoint whose prefix does not exceed the target.
  auto j = static_cast<std::size_t>(std::upper_bound(prefix_.begin(), prefix_.end(), target) -
                                    prefix_.begin()) - 1;
  if (j == grid_->size()) return grid_->cake_length();
  return grid_->start(j) + (target - prefix_[j]) / densities_[j];
}

std::optional<Rat> Measure::suffix_mark(const Rat& end, const Rat& target) const {
  check_point(end);
  if (target < 0) throw std::invalid_argument("negative mark target");
  Rat want = prefix(end) - target;
  if (want < 0) return std::nullopt;
  auto x = rightmost_mark(want);
  return std::min(*x, end);
}

Rat Measure::density_right_of(const Rat& x) const {
  std::size_t k = grid_->slice_at(x);
  return k == grid_->size() ? Rat(0) : densities_[k];
}

Problem::Problem(std::vector<std::string> names, SliceGrid grid,
                 std::vector<std::vector<Rat>> densities)
    : names_(std::move(names)), grid_(std::make_shared<const SliceGrid>(std::move(grid))) {
  if (names_.empty()) throw std::invalid_argument("a problem needs at least one agent");
  if (densities.size() != names_.size())
    throw std::invalid_argument("one density row per agent is required");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("agent names must be non-empty");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate agent name: " + n);
  }
  measures_.reserve(names_.size());
  for (auto& row : densities) measures_.emplace_back(grid_, std::move(row));
}

std::optional<std::size_t> Problem::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Problem::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown agent: " + std::string(name));
}

Problem append(const Problem& p, const Enlargement& extra) {
  if (extra.densities.size() != p.agent_count() && !(extra.lengths.empty() && extra.densities.empty()))
    throw std::invalid_argument("enlargement must list exactly the problem's agents");
  for (const auto& [name, row] : extra.densities) {
    if (!p.find(name)) throw std::invalid_argument("enlargement names unknown agent: " + name);
    if (row.size() != extra.lengths.size())
      throw std::invalid_argument("enlargement density row for " + name + " has wrong length");
  }
  std::vector<Rat> lengths = p.grid().lengths();
  lengths.insert(lengths.end(), extra.lengths.begin(), extra.lengths.end());
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < p.agent_count(); ++i) {
    auto row = p.measure(i).densities();
    if (!extra.lengths.empty()) {
      const auto& add = extra.densities.at(p.name(i));
      row.insert(row.end(), add.begin(), add.end());
    }
    rows.push_back(std::move(row));
  }
  return Problem(p.names(), SliceGrid(std::move(lengths)), std::move(rows));
}

Problem remove_agent(const Problem& p, std::string_view name) {
  std::size_t gone = p.index_of(name);
  if (p.agent_count() < 2) throw std::invalid_argument("cannot remove the last agent");
  std::vector<std::string> names;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < p.agent_count(); ++i) {
    if (i == gone) continue;
    names.push_back(p.name(i));
    rows.push_back(p.measure(i).densities());
  }
  return Problem(std::move(names), SliceGrid(p.grid().lengths()), std::move(rows));
}

}  // namespace cake
