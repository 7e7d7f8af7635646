#include "doctest.h"

#include "cake/fixtures.hpp"
#include "cake/io.hpp"
#include "suites.hpp"

using namespace cake;

TEST_CASE("every fixture claim holds") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto claims = run_fixture(name);
    CHECK_FALSE(claims.empty());
    for (const auto& c : claims) {
      INFO(format_claim(c));
      CHECK(c.pass);
    }
  }
  CHECK_THROWS_AS(run_fixture("nope"), std::invalid_argument);
}

TEST_CASE("claim lines have a stable format") {
  Claim c{"prop-po-pm", "alice-max", true, "5", "5"};
  CHECK(format_claim(c) == "prop-po-pm/alice-max: PASS expected=5 got=5");
}

TEST_CASE("monotonicity verdicts") {
  Problem p = corpus_problem("cc-small");
  auto same = check_rm("cut-and-choose", {}, p, Enlargement{});
  CHECK(same.pass());
  CHECK(same.agents.size() == 2);

  auto rm = check_rm("cut-and-choose", {}, p, *corpus_enlargement("cc-small"));
  CHECK_FALSE(rm.upwards.pass);
  CHECK_FALSE(rm.downwards.pass);
  CHECK(rm.agents[1].before == 6);
  CHECK(rm.agents[1].after == 5);

  // Rule undefined after the population change.
  auto pm = check_pm("rightmost-mark", {}, p, "A");
  CHECK_FALSE(pm.applicable);
  CHECK_FALSE(pm.pass());
  CHECK_THROWS_AS(check_pm("even-paz", {}, p, "Z"), std::invalid_argument);
}

TEST_CASE("set-valued rules are compared existentially") {
  // Identical agents: the relative-equitable rule returns both orderings.
  Problem p = corpus_problem("identical");
  Enlargement e;
  e.lengths = {1};
  e.densities = {{"A", {1}}, {"B", {1}}};
  auto v = check_rm("relative-equitable", {}, p, e);
  CHECK(v.before.divisions.size() == 2);
  CHECK(v.after.divisions.size() == 2);
  CHECK(v.pass());
}

TEST_CASE("single-valued rules give matching upward and downward verdicts") {
  Rng rng(3);
  for (int k = 0; k < 40; ++k) {
    Problem p = random_problem(rng, {2, 3, 5, false});
    Enlargement e = random_enlargement(rng, p);
    for (std::string rule : {"exact-proportional", "dubins-spanier", "relative-equitable", "absolute-equitable"}) {
      auto v = check_rm(rule, {}, p, e);
      if (check_esv(p, v.before.divisions) && check_esv(append(p, e), v.after.divisions))
        CHECK(v.upwards.pass == v.downwards.pass);
      auto w = check_pm(rule, {}, p, p.name(0));
      if (check_esv(p, w.before.divisions) && check_esv(remove_agent(p, p.name(0)), w.after.divisions))
        CHECK(w.upwards.pass == w.downwards.pass);
    }
  }
}

TEST_CASE("randomized suites pass on a second seed") {
  const std::size_t n = 60;
  CHECK(suites::exact_proportional_suite(101, n).ok());
  CHECK(suites::sandwich_suite(102, n).ok());
  CHECK(suites::relative_value_suite(103, n).ok());
  CHECK(suites::equitable_wpo_suite(104, n).ok());
  CHECK(suites::equitable_monotonicity_suite(105, n).ok());
  CHECK(suites::rightmost_mark_suite(106, n, false).ok());
  CHECK(suites::rightmost_mark_suite(107, n, true).ok());
  CHECK(suites::cut_and_choose_wpo_suite(108, n).ok());
  CHECK(suites::oracle_suite(109, n, Rat(1) / Rat(1000000000000LL)).ok());
}

TEST_CASE("problem files round-trip and reject bad input") {
  Problem p = corpus_problem("wpo-fink");
  Problem back = problem_from_json(problem_to_json(p));
  CHECK(back.names() == p.names());
  CHECK(back.measure(1).densities() == p.measure(1).densities());

  CHECK_THROWS_AS(problem_from_json("{"), FormatError);
  CHECK_THROWS_AS(problem_from_json(R"({"slices":[{"length":"0"}],"agents":[{"name":"A","densities":["1"]}]})"),
                  FormatError);
  CHECK_THROWS_AS(problem_from_json(R"({"slices":[{"length":"1"}],"agents":[{"name":"A","densities":["-1"]}]})"),
                  FormatError);
  CHECK_THROWS_AS(problem_from_json(R"({"slices":[{"length":"1"}],"agents":[{"name":"A","densities":["x"]}]})"),
                  FormatError);
  CHECK_THROWS_AS(problem_from_json(R"({"slices":[{"length":"1"}],"agents":[{"name":"A","densities":[]}]})"),
                  FormatError);
  CHECK_THROWS_AS(problem_from_json(R"({"slices":[{"length":"1"}]})"), FormatError);
  Problem ints = problem_from_json(R"({"slices":[{"length":1},{"length":"1/2"}],
      "agents":[{"name":"A","densities":[2,"2.5"]}]})");
  CHECK(ints.total(0) == rat(13, 4));
}

TEST_CASE("division files round-trip and are validated") {
  Problem p = corpus_problem("cc-small");
  Division x{{{{0, rat(3, 2)}}, {{rat(3, 2), 4}}}};
  Division back = division_from_json(p, division_to_json(p, x));
  CHECK(back.pieces[0] == x.pieces[0]);
  CHECK(back.pieces[1] == x.pieces[1]);
  CHECK_THROWS_AS(division_from_json(p, R"([{"agent":"A","intervals":[["0","2"]]},
      {"agent":"B","intervals":[["1","3"]]}])"),
                  FormatError);
  CHECK_THROWS_AS(division_from_json(p, R"([{"agent":"Z","intervals":[]}])"), FormatError);
  CHECK_THROWS_AS(division_from_json(p, R"([{"agent":"A","intervals":[["0","9"]]}])"), FormatError);
  // agents left out get nothing (free disposal)
  Division partial = division_from_json(p, R"([{"agent":"B","intervals":[["2","4"]]}])");
  CHECK(partial.pieces[0].empty());

  Enlargement e = enlargement_from_json(R"({"slices":[{"length":"1"}],
      "agents":[{"name":"A","densities":["2"]},{"name":"B","densities":["2"]}]})");
  CHECK(append(p, e).cake_length() == 5);
}
