#include "cake/random_cake.hpp"

namespace cake {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Lengths come from a short menu so that breakpoints stay simple rationals.
Rat random_length(Rng& rng) {
  static const Rat menu[] = {Rat(1), Rat(1), Rat(2), rat(1, 2), rat(3, 2)};
  return menu[pick(rng, 0, 4)];
}

std::vector<Rat> random_row(Rng& rng, std::size_t slices, bool positive, bool need_positive) {
  std::vector<Rat> row;
  bool any = false;
  for (std::size_t k = 0; k < slices; ++k) {
    auto d = pick(rng, positive ? 1 : 0, 9);
    any = any || d > 0;
    row.emplace_back(d);
  }
  if (need_positive && !any) row[pick(rng, 0, slices - 1)] = Rat(pick(rng, 1, 9));
  return row;
}

}  // namespace

Problem random_problem(Rng& rng, const RandomCakeShape& shape) {
  std::size_t n = pick(rng, shape.min_agents, shape.max_agents);
  std::size_t s = pick(rng, 1, shape.max_slices);
  std::vector<Rat> lengths;
  for (std::size_t k = 0; k < s; ++k) lengths.push_back(random_length(rng));
  std::vector<std::string> names;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('A' + i)));
    rows.push_back(random_row(rng, s, shape.positive, true));
  }
  return Problem(std::move(names), SliceGrid(std::move(lengths)), std::move(rows));
}

Enlargement random_enlargement(Rng& rng, const Problem& p, bool positive) {
  Enlargement e;
  std::size_t s = pick(rng, 1, 3);
  for (std::size_t k = 0; k < s; ++k) e.lengths.push_back(random_length(rng));
  for (const auto& name : p.names()) e.densities[name] = random_row(rng, s, positive, false);
  return e;
}

}  // namespace cake
