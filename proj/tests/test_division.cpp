#include "doctest.h"

#include "cake/division.hpp"
#include "cake/random_cake.hpp"
#include "oracles.hpp"

using namespace cake;

namespace {

Problem cake_of(std::vector<std::string> names, std::vector<std::vector<Rat>> rows) {
  std::vector<Rat> lengths(rows.front().size(), Rat(1));
  return Problem(std::move(names), SliceGrid(lengths), std::move(rows));
}

Division of(std::vector<Piece> pieces) { return Division{std::move(pieces)}; }

}  // namespace

TEST_CASE("orderings enumerate lexicographically and round-trip by name") {
  auto all = all_orderings(3);
  REQUIRE(all.size() == 6);
  CHECK(all.front() == Ordering{0, 1, 2});
  CHECK(all[1] == Ordering{0, 2, 1});
  CHECK(all.back() == Ordering{2, 1, 0});
  Problem p = cake_of({"A", "B", "C"}, {{1}, {1}, {1}});
  CHECK(format_ordering(p, {1, 2, 0}) == "B,C,A");
  CHECK(parse_ordering(p, "C,A,B") == Ordering{2, 0, 1});
  CHECK_THROWS_AS(parse_ordering(p, "A,B"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ordering(p, "A,A,B"), std::invalid_argument);
}

TEST_CASE("pi-partitions and utilities") {
  Problem p = cake_of({"A", "B"}, {{1, 1, 1, 1}, {1, 1, 3, 3}});
  std::vector<Rat> cuts = {2};
  Division x = pi_partition(p, {0, 1}, cuts);
  auto u = utilities(p, x);
  CHECK(u.absolute == std::vector<Rat>{2, 6});
  CHECK(u.relative == std::vector<Rat>{rat(1, 2), rat(3, 4)});
  CHECK(check_prop(p, x));
  CHECK(check_ef(p, x));
  auto eq = check_equitable(p, x, ValueMode::Relative);
  CHECK_FALSE(eq.equitable);
  CHECK(eq.stats.v_min == rat(1, 2));
  CHECK(eq.stats.v_max == rat(3, 4));

  Division swapped = pi_partition(p, {1, 0}, cuts);
  CHECK_FALSE(check_prop(p, swapped));  // B gets [0,2], worth 2 of 8
  CHECK_FALSE(check_ef(p, swapped));
}

TEST_CASE("validation rejects overlapping pieces and points outside the cake") {
  Problem p = cake_of({"A", "B"}, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(validate(p, of({{{0, rat(3, 2)}}, {{1, 2}}})), std::invalid_argument);
  CHECK_THROWS_AS(validate(p, of({{{0, 3}}, {}})), std::invalid_argument);
  CHECK_THROWS_AS(validate(p, of({{{0, 1}}})), std::invalid_argument);
  CHECK_NOTHROW(validate(p, of({{{0, 1}}, {{1, 2}}})));
  CHECK_NOTHROW(validate(p, of({{}, {{1, 2}}})));  // free disposal
}

TEST_CASE("envy uses the utility model") {
  // Alice holds two crumbs that Bob would add up but not join.
  Problem p = cake_of({"A", "B"}, {{1, 1, 1}, {2, 0, 2}});
  Division x = of({{{0, 1}, {2, 3}}, {{1, 2}}});
  CHECK_FALSE(check_ef(p, x, UtilityMode::Additive));
  CHECK_FALSE(check_ef(p, x, UtilityMode::Connected));  // Bob: 0 vs 2
  Division y = of({{{1, 2}}, {{0, 1}, {2, 3}}});
  CHECK_FALSE(check_ef(p, y, UtilityMode::Additive));  // Alice adds Bob's crumbs up to 2
  CHECK(check_ef(p, y, UtilityMode::Connected));
  CHECK_FALSE(check_prop(p, y, UtilityMode::Connected));  // Alice 1 of 3
}

TEST_CASE("greedy fit on the reduced three-agent cake") {
  Problem p = cake_of({"A", "C"}, {{2, 0, 3, 0, 2, 0, 0}, {0, 2, 0, 2, 0, 0, 3}});
  std::vector<Rat> targets = {5, rat(7, 2)};
  auto marks = greedy_fit(p, {0, 1}, targets);
  REQUIRE(marks);
  CHECK(*marks == std::vector<Rat>{3, rat(13, 2)});
  std::vector<Rat> too_much = {5, rat(11, 2)};  // C has only 5 right of 3
  CHECK_FALSE(greedy_fit(p, {0, 1}, too_much));
}

TEST_CASE("greedy fit matches chained oracle marks on random cakes") {
  Rng rng(7);
  for (int k = 0; k < 150; ++k) {
    Problem p = random_problem(rng);
    std::vector<Rat> targets;
    for (std::size_t i = 0; i < p.agent_count(); ++i)
      targets.push_back(p.total(i) * Rat(std::uniform_int_distribution<int>(0, 8)(rng)) / Rat(16));
    for (const auto& order : all_orderings(p.agent_count())) {
      std::optional<std::vector<Rat>> expect = std::vector<Rat>{};
      Rat start = 0;
      for (auto agent : order) {
        auto m = oracle::mark(oracle::row(p, agent), start, targets[agent]);
        if (!m) {
          expect.reset();
          break;
        }
        expect->push_back(start = *m);
      }
      CHECK(greedy_fit(p, order, targets) == expect);
    }
  }
}

TEST_CASE("constrained maxima on the small and enlarged two-agent cakes") {
  Problem p = cake_of({"A", "B"}, {{6, 0, 1, 1}, {0, 4, 2, 2}});
  std::vector<Rat> half = {4, 4};
  CHECK(constrained_max_any(p, 0, half)->value == 6);
  CHECK(constrained_max_any(p, 1, half)->value == 8);

  Problem q = cake_of({"A", "B"}, {{6, 0, 1, 1, 6}, {0, 4, 2, 2, 0}});
  std::vector<Rat> alice7 = {7, 0};
  // Alice on the left keeps [0,3]; Bob is left with [3,5].
  CHECK(constrained_max(q, {0, 1}, 1, alice7)->value == 2);
  // Alice on the right keeps [3,5]; Bob gets [0,3].
  auto right = constrained_max(q, {1, 0}, 1, alice7);
  CHECK(right->value == 6);
  CHECK(right->division.pieces[0].front() == Interval{3, 5});
  CHECK(constrained_max_any(q, 1, alice7)->value == 6);
  std::vector<Rat> impossible = {15, 0};
  CHECK_FALSE(constrained_max_any(q, 1, impossible));
}

TEST_CASE("constrained max is never below a grid-search oracle and meets every target") {
  Rng rng(11);
  RandomCakeShape shape;
  shape.max_agents = 3;
  shape.max_slices = 4;
  for (int k = 0; k < 60; ++k) {
    Problem p = random_problem(rng, shape);
    std::vector<Rat> targets;
    for (std::size_t i = 0; i < p.agent_count(); ++i)
      targets.push_back(p.total(i) * Rat(std::uniform_int_distribution<int>(0, 3)(rng)) / Rat(8));
    for (std::size_t pivot = 0; pivot < p.agent_count(); ++pivot) {
      auto exact = constrained_max_any(p, pivot, targets);
      auto grid = oracle::grid_constrained_max(p, pivot, targets, 4);
      if (grid) {
        REQUIRE(exact);
        CHECK(exact->value >= *grid);
      }
      if (!exact) continue;
      auto u = utilities(p, exact->division);
      CHECK(u.absolute[pivot] == exact->value);
      for (std::size_t i = 0; i < p.agent_count(); ++i)
        if (i != pivot) CHECK(u.absolute[i] >= targets[i]);
    }
  }
}

TEST_CASE("max slack measures room for a uniform improvement") {
  Problem p = cake_of({"A", "B"}, {{2, 0}, {0, 2}});
  std::vector<Rat> base = {1, 1};
  // Each agent can have its whole slice: relative slack 1/2 on totals of 2.
  CHECK(max_slack(p, {0, 1}, base) == rat(1, 2));
  CHECK(max_slack(p, {1, 0}, base) < 0);
}

TEST_CASE("weak and strict Pareto checks with verified witnesses") {
  Problem p = cake_of({"A", "B"}, {{2, 0}, {0, 2}});
  Division wasteful = of({{{0, rat(1, 2)}}, {{rat(1, 2), rat(3, 2)}}});
  auto wpo = check_wpo_connected(p, wasteful);
  CHECK_FALSE(wpo.pass);
  REQUIRE(wpo.witness);
  CHECK(strictly_dominates(p, *wpo.witness, wasteful, UtilityMode::Connected));
  CHECK(*wpo.ordering == Ordering{0, 1});
  CHECK_FALSE(check_po_connected(p, wasteful).pass);

  Division best = of({{{0, 1}}, {{1, 2}}});
  CHECK(check_wpo_connected(p, best).pass);
  CHECK(check_po_connected(p, best).pass);

  // WPO but not PO: Bob could gain without hurting Alice.
  Problem q = cake_of({"A", "B"}, {{1, 0, 0}, {1, 1, 1}});
  Division x = of({{{0, 1}}, {{1, 2}}});
  CHECK(check_wpo_connected(q, x).pass);
  auto po = check_po_connected(q, x);
  CHECK_FALSE(po.pass);
  REQUIRE(po.witness);
  auto wu = utilities(q, *po.witness);
  CHECK(wu.absolute[0] >= 1);
  CHECK(wu.absolute[1] > 1);
}

TEST_CASE("nash products and essential single-valuedness") {
  Problem p = cake_of({"A", "B"}, {{2, 2, 2, 2, 2, 2}, {1, 1, 4, 4, 1, 1}});
  Division x = of({{{0, 2}}, {{2, 6}}});
  CHECK(nash_product(p, x) == 40);
  Division y = of({{{0, 3}}, {{3, 6}}});
  CHECK(nash_product(p, y) == 36);
  std::vector<Division> same = {x, x};
  CHECK(check_esv(p, same));
  std::vector<Division> different = {x, y};
  CHECK_FALSE(check_esv(p, different));
  CHECK_THROWS_AS(check_esv(p, std::span<const Division>{}), std::invalid_argument);
}
