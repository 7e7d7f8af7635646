#include "doctest.h"

#include "cake/classic.hpp"
#include "cake/monotone_rules.hpp"
#include "cake/random_cake.hpp"
#include "cake/rules.hpp"

using namespace cake;

namespace {

Problem cake_of(std::vector<std::string> names, std::vector<std::vector<Rat>> rows) {
  std::vector<Rat> lengths(rows.front().size(), Rat(1));
  return Problem(std::move(names), SliceGrid(lengths), std::move(rows));
}

Problem uniform(std::size_t n, std::size_t slices = 1) {
  std::vector<std::string> names;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('A' + i)));
    rows.emplace_back(slices, Rat(1));
  }
  return cake_of(names, rows);
}

Piece iv(Rat lo, Rat hi) { return {Interval{lo, hi}}; }

Rat additive(const Problem& p, const Division& x, std::size_t i) {
  return p.measure(i).value(x.pieces[i], UtilityMode::Additive);
}

}  // namespace

TEST_CASE("equitable values through a zero-density stretch") {
  Problem p = cake_of({"A", "B"}, {{1, 0, 0}, {1, 1, 1}});
  auto ab = equitable_for_ordering(p, {0, 1}, ValueMode::Relative);
  CHECK(ab.value == rat(3, 4));
  CHECK(ab.cuts == std::vector<Rat>{rat(3, 4)});

  // Alice sits on the right: her knife must slide through her zero region.
  auto ba = equitable_for_ordering(p, {1, 0}, ValueMode::Relative);
  CHECK(ba.value == rat(1, 4));
  Division x = ba.division(p);
  CHECK(x.pieces[1] == iv(0, rat(3, 4)));
  CHECK(x.pieces[0] == iv(rat(3, 4), 3));
  CHECK(equitable_value_oracle(p, {1, 0}, ValueMode::Relative) == rat(1, 4));

  auto best = max_equitable(p, ValueMode::Relative);
  CHECK(*best.equitable_value == rat(3, 4));
  REQUIRE(best.orderings.size() == 1);
  CHECK(best.orderings[0] == Ordering{0, 1});
}

TEST_CASE("relative versus absolute equitable on the symmetric cake") {
  Problem p = cake_of({"A", "B"}, {{10, 10, 1, 1}, {1, 1, 10, 10}});
  auto rel = max_equitable(p, ValueMode::Relative);
  // Cutting at 2 gives each agent 20 of 22. (A printed M/(M+2) would be 10/12.)
  CHECK(*rel.equitable_value == rat(10, 11));
  CHECK(rel.utilities[0].absolute == std::vector<Rat>{20, 20});
  auto abs = max_equitable(p, ValueMode::Absolute);
  CHECK(*abs.equitable_value == 20);

  Problem big = cake_of({"A", "B"}, {{10, 10, 1, 1, 10, 10}, {1, 1, 10, 10, 1, 1}});
  auto rel_big = max_equitable(big, ValueMode::Relative);
  CHECK(*rel_big.equitable_value == rat(1, 2));
  CHECK(rel_big.divisions.size() == 2);
  for (const auto& u : rel_big.utilities) CHECK(u.absolute[1] == 12);
}

TEST_CASE("absolute-equitable can leave an agent below its proportional share") {
  Problem p = cake_of({"A", "B"}, {{1}, {10}});
  auto out = max_equitable(p, ValueMode::Absolute);
  CHECK(*out.equitable_value == rat(10, 11));
  CHECK(out.divisions[0].pieces[0] == iv(0, rat(10, 11)));
  CHECK_FALSE(check_prop(p, out.divisions[0]));
}

TEST_CASE("exact-proportional hands out exactly 1/n and discards the rest") {
  Problem p = cake_of({"A", "B"}, {{1, 1, 1, 1}, {1, 1, 3, 3}});
  Division x = exact_proportional(p);
  CHECK(x.pieces[0] == iv(0, 2));
  CHECK(x.pieces[1] == iv(2, rat(10, 3)));
  CHECK(utilities(p, x).relative == std::vector<Rat>{rat(1, 2), rat(1, 2)});

  // tie on the first mark goes to the lower index
  Division u = exact_proportional(uniform(2, 2));
  CHECK(u.pieces[0] == iv(0, 1));
}

TEST_CASE("rightmost-mark rule") {
  Problem p = cake_of({"A", "B"}, {{1, 0, 1}, {1, 1, 0}});
  Division x = rightmost_mark_rule(p);
  CHECK(x.pieces[0] == iv(2, 3));
  CHECK(x.pieces[1] == iv(0, 2));
  // identical half-points: the second agent takes the right piece
  Division t = rightmost_mark_rule(uniform(2, 2));
  CHECK(t.pieces[1] == iv(1, 2));
  CHECK_THROWS_AS(rightmost_mark_rule(uniform(3)), RulePreconditionError);
}

TEST_CASE("cut-and-choose") {
  Problem p = cake_of({"A", "B"}, {{1, 1, 1, 1}, {1, 1, 3, 3}});
  Division x = cut_and_choose(p, 0);
  CHECK(x.pieces[0] == iv(0, 2));
  CHECK(x.pieces[1] == iv(2, 4));
  // Bob cuts at 8/3; Alice strictly prefers the left piece.
  Division y = cut_and_choose(p, 1);
  CHECK(y.pieces[0] == iv(0, rat(8, 3)));

  Problem q = cake_of({"A", "B"}, {{1, 1, 1, 1, 2}, {1, 1, 3, 3, 2}});
  Division z = cut_and_choose(q, 0);
  CHECK(z.pieces[1] == iv(3, 5));  // Bob is indifferent (5 and 5) and takes the right piece
  CHECK(utilities(q, z).absolute[1] == 5);

  Division even = cut_and_choose(uniform(2), 0);
  CHECK(utilities(uniform(2), even).absolute == std::vector<Rat>{rat(1, 2), rat(1, 2)});
  CHECK_THROWS_AS(cut_and_choose(uniform(3), 0), RulePreconditionError);
}

TEST_CASE("Dubins-Spanier, Even-Paz and Banach-Knaster on the three-agent cake") {
  Problem p = cake_of({"A", "B", "C"}, {{20, 1, 1, 1, 10, 27}, {1, 20, 10, 28, 1, 1}, {1, 1, 18, 10, 29, 1}});
  Division ds = dubins_spanier(p);
  CHECK(ds.pieces[0] == iv(0, 1));
  CHECK(ds.pieces[1] == iv(1, 3));
  CHECK(ds.pieces[2] == iv(3, 6));
  CHECK(utilities(p, even_paz(p)).absolute == std::vector<Rat>{20, 30, 40});
  CHECK(utilities(p, banach_knaster(p, {0, 1, 2})).absolute == std::vector<Rat>{20, 30, 40});

  Problem q = remove_agent(p, "B");
  CHECK(dubins_spanier(q).pieces[1] == iv(0, 4));
}

TEST_CASE("Banach-Knaster trims only on strict preference") {
  Problem p = cake_of({"A", "B", "C"}, {{2, 0, 0, 0, 0, 4}, {2, 3, 1, 1, 5, 0}, {2, 3, 1, 1, 5, 0}});
  Division x = banach_knaster(p, {0, 1, 2});
  CHECK(x.pieces[0] == iv(0, 1));
  CHECK(x.pieces[1] == iv(1, 4));
  CHECK(x.pieces[2] == iv(4, 6));
}

TEST_CASE("Even-Paz splits identical agents evenly") {
  Problem p = uniform(4);
  Division x = even_paz(p);
  for (std::size_t i = 0; i < 4; ++i) CHECK(x.pieces[i] == iv(rat(i, 4), rat(i + 1, 4)));
  Division d = dubins_spanier(uniform(3));
  for (std::size_t i = 0; i < 3; ++i) CHECK(d.pieces[i] == iv(rat(i, 3), rat(i + 1, 3)));
}

TEST_CASE("single-agent protocols hand over the whole cake") {
  Problem p = uniform(1, 3);
  for (const Division& x : {banach_knaster(p, {0}), dubins_spanier(p), even_paz(p), fink(p, {0})})
    CHECK(x.pieces[0] == iv(0, 3));
}

TEST_CASE("Fink gives the newcomer a share of every incumbent") {
  Problem p = cake_of({"A", "B", "C"}, {{2, 2, 2, 2, 1, 1, 2}, {0, 0, 0, 4, 2, 2, 4}, {0, 0, 0, 2, 1, 1, 2}});
  Division x = fink(p, {0, 1, 2});
  CHECK(x.pieces[0] == iv(0, 2));
  CHECK(x.pieces[1] == iv(3, 6));
  CHECK(x.pieces[2] == Piece{{2, 3}, {6, 7}});
  CHECK(additive(p, x, 1) == 8);

  Problem q = remove_agent(p, "A");
  Division y = fink(q, {0, 1});
  CHECK(additive(q, y, 0) == 6);
}

TEST_CASE("Selfridge-Conway without and with trimming") {
  Problem p = cake_of({"A", "B", "C"}, {{4, 2, 2, 4, 4, 2}, {5, 2, 3, 4, 1, 1}, {1, 2, 4, 4, 1, 1}});
  Division x = selfridge_conway(p, {0, 1, 2});
  CHECK(x.pieces[2] == iv(2, 4));
  CHECK(x.pieces[1] == iv(0, 2));
  CHECK(x.pieces[0] == iv(4, 6));

  Problem q = cake_of({"A", "B", "C"}, {{4, 2, 2, 4, 4, 2, 6}, {5, 2, 3, 4, 1, 1, 1}, {1, 2, 4, 4, 1, 1, 1}});
  Division y = selfridge_conway(q, {0, 1, 2});
  CHECK(y.pieces[1] == iv(0, 2));  // trimmed [0,1] plus the first crumb [1,2]
  CHECK(y.pieces[2] == Piece{{2, rat(5, 2)}, {3, 5}});
  CHECK(y.pieces[0] == Piece{{rat(5, 2), 3}, {5, 7}});
  CHECK(additive(q, y, 2) == 7);
  CHECK_THROWS_AS(selfridge_conway(uniform(2), {0, 1}), RulePreconditionError);
  CHECK_THROWS_AS(selfridge_conway(uniform(3), {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("protocols are proportional and envy-free where promised") {
  Rng rng(5);
  RandomCakeShape shape;
  shape.min_agents = 2;
  shape.max_agents = 4;
  for (int k = 0; k < 150; ++k) {
    Problem p = random_problem(rng, shape);
    const std::size_t n = p.agent_count();
    Ordering order = all_orderings(n)[static_cast<std::size_t>(k) % all_orderings(n).size()];
    CHECK(check_prop(p, banach_knaster(p, order)));
    CHECK(check_prop(p, dubins_spanier(p)));
    CHECK(check_prop(p, even_paz(p)));
    CHECK(check_prop(p, fink(p, order), UtilityMode::Additive));
    if (n == 2) {
      Division x = cut_and_choose(p, order[0]);
      CHECK(check_ef(p, x));
      CHECK(check_prop(p, x));
    }
    if (n == 3) {
      Division x = selfridge_conway(p, order);
      CHECK(check_ef(p, x, UtilityMode::Additive));
      CHECK(check_prop(p, x, UtilityMode::Additive));
    }
  }
}

TEST_CASE("rule registry") {
  CHECK(rule_names().size() == 10);
  CHECK(is_rule("even-paz"));
  CHECK_FALSE(is_rule("nash"));
  CHECK(natural_utility_mode("fink") == UtilityMode::Additive);
  CHECK(natural_utility_mode("dubins-spanier") == UtilityMode::Connected);

  Problem p = uniform(3);
  RuleConfig cfg;
  cfg.order = {"C", "Z", "A"};
  CHECK(resolve_order(p, cfg) == Ordering{2, 0, 1});
  CHECK_THROWS_AS(run_rule("nash", p), std::invalid_argument);
  CHECK_THROWS_AS(run_rule("rightmost-mark", p), RulePreconditionError);

  auto out = run_rule("relative-equitable", p);
  CHECK(out.divisions.size() == 6);  // identical agents: every ordering is optimal
  CHECK(check_esv(p, out.divisions));
  CHECK(*out.equitable_value == rat(1, 3));

  RuleConfig cutter;
  cutter.cutter = "B";
  Problem q = cake_of({"A", "B"}, {{1, 1, 1, 1}, {1, 1, 3, 3}});
  CHECK(run_rule("cut-and-choose", q, cutter).divisions[0].pieces[0] == iv(0, rat(8, 3)));
}
