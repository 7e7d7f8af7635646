#include "doctest.h"

#include "cake/measure.hpp"
#include "oracles.hpp"

using namespace cake;

namespace {

Problem two(std::vector<Rat> a, std::vector<Rat> b, std::vector<Rat> lengths = {}) {
  if (lengths.empty()) lengths.assign(a.size(), Rat(1));
  return Problem({"A", "B"}, SliceGrid(lengths), {a, b});
}

}  // namespace

TEST_CASE("rationals parse and print exactly") {
  CHECK(parse_rat("3/2") == rat(3, 2));
  CHECK(parse_rat("-4/6") == rat(-2, 3));
  CHECK(parse_rat("7") == 7);
  CHECK(parse_rat("2.5") == rat(5, 2));
  CHECK(parse_rat("0.125") == rat(1, 8));
  CHECK(to_string(rat(6, 4)) == "3/2");
  CHECK(to_string(Rat(-3)) == "-3");
  CHECK(to_decimal(rat(1, 3), 4) == "0.3333");
  CHECK(to_decimal(rat(2, 3), 2) == "0.67");
  CHECK(to_decimal(rat(-5, 8), 2) == "-0.63");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
}

TEST_CASE("slice grid geometry") {
  SliceGrid g({1, rat(1, 2), 2});
  CHECK(g.cake_length() == rat(7, 2));
  CHECK(g.start(2) == rat(3, 2));
  CHECK(g.slice_at(0) == 0);
  CHECK(g.slice_at(1) == 1);
  CHECK(g.slice_at(rat(7, 2)) == 3);
  CHECK_THROWS_AS(SliceGrid(std::vector<Rat>{}), std::invalid_argument);
  CHECK_THROWS_AS(SliceGrid(std::vector<Rat>{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SliceGrid(std::vector<Rat>{1, -1}), std::invalid_argument);
}

TEST_CASE("values on the two-agent example cake") {
  Problem p = two({rat(5, 2), 0, 2, 2, 0, 0}, {1, 1, 0, 0, 1, 1});
  const Measure& a = p.measure(0);
  CHECK(a.total() == rat(13, 2));
  CHECK(p.total(1) == 4);
  CHECK(a.value(Interval{rat(1, 2), rat(5, 2)}) == rat(9, 4));
  CHECK(a.prefix(3) == rat(9, 2));
  CHECK_THROWS_AS(a.value(Interval{0, 7}), std::out_of_range);

  Piece split = {{0, 1}, {2, 4}};
  CHECK(a.value(split, UtilityMode::Additive) == rat(13, 2));
  CHECK(a.value(split, UtilityMode::Connected) == 4);
  // touching intervals merge into one component
  CHECK(a.value(Piece{{0, 1}, {1, 3}}, UtilityMode::Connected) == rat(9, 2));
}

TEST_CASE("marks skip zero regions on the correct side") {
  Problem p = two({1, 0, 0, 1}, {1, 1, 1, 1});
  const Measure& a = p.measure(0);
  CHECK(*a.leftmost_mark(0, 1) == 1);       // minimal: stops before the gap
  CHECK(*a.rightmost_mark(1) == 3);         // maximal: runs through the gap
  CHECK(*a.suffix_mark(4, 1) == 3);
  CHECK(*a.suffix_mark(4, 2) == 0);
  CHECK(*a.leftmost_mark(1, rat(1, 2)) == rat(7, 2));
  CHECK(*a.leftmost_mark(2, 0) == 2);
  CHECK_FALSE(a.leftmost_mark(1, 2).has_value());
  CHECK_FALSE(a.rightmost_mark(3).has_value());
  CHECK(a.density_right_of(1) == 0);
  CHECK(a.density_right_of(3) == 1);
  CHECK(a.density_right_of(4) == 0);
}

TEST_CASE("marks agree with a linear-walk oracle") {
  Problem p = two({3, 0, rat(1, 2), 0, 2}, {0, 1, 1, 4, 0}, {rat(1, 2), 1, 2, rat(3, 2), 1});
  for (std::size_t i = 0; i < 2; ++i) {
    auto r = oracle::row(p, i);
    for (Rat start : {Rat(0), rat(1, 3), Rat(2), rat(9, 2)})
      for (int num = 0; num <= 12; ++num) {
        Rat target = p.total(i) * Rat(num) / Rat(12);
        CHECK(p.measure(i).leftmost_mark(start, target) == oracle::mark(r, start, target));
      }
  }
}

TEST_CASE("pieces normalize and reject overlaps") {
  Piece x = normalize_piece({{2, 3}, {0, 1}, {1, 1}, {1, rat(3, 2)}});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == Interval{0, rat(3, 2)});
  CHECK(x[1] == Interval{2, 3});
  CHECK_THROWS_AS(normalize_piece({{0, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize_piece({{2, 1}}), std::invalid_argument);
}

TEST_CASE("measures reject bad densities") {
  auto grid = std::make_shared<const SliceGrid>(std::vector<Rat>{1, 1});
  CHECK_THROWS_AS(Measure(grid, {1}), std::invalid_argument);
  CHECK_THROWS_AS(Measure(grid, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Measure(grid, {0, 0}), std::invalid_argument);
}

TEST_CASE("enlargement and agent removal") {
  Problem p = two({1, 1, 1, 1}, {1, 1, 3, 3});
  Enlargement e;
  e.lengths = {1};
  e.densities = {{"A", {2}}, {"B", {2}}};
  Problem q = append(p, e);
  CHECK(q.cake_length() == 5);
  CHECK(q.total(0) == 6);
  CHECK(q.measure(1).prefix(4) == p.total(1));
  CHECK(append(p, Enlargement{}).cake_length() == 4);

  Enlargement missing;
  missing.lengths = {1};
  missing.densities = {{"A", {2}}};
  CHECK_THROWS_AS(append(p, missing), std::invalid_argument);
  Enlargement stranger = e;
  stranger.densities["Z"] = {1};
  CHECK_THROWS_AS(append(p, stranger), std::invalid_argument);

  Problem r = remove_agent(p, "A");
  CHECK(r.agent_count() == 1);
  CHECK(r.name(0) == "B");
  CHECK_THROWS_AS(remove_agent(p, "Z"), std::invalid_argument);
  CHECK_THROWS_AS(remove_agent(r, "B"), std::invalid_argument);
}
