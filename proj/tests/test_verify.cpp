#include <doctest.h>

#include <algorithm>

#include "euclid/error.hpp"
#include "euclid/verify/verify.hpp"

using namespace euclid;
using namespace euclid::verify;

TEST_CASE("every construction and most theorems have a generator") {
  auto ids = suite_ids();
  for (const char* id : {"I.1", "I.2", "I.3", "I.9", "I.10", "I.11", "I.12", "I.22", "I.23", "I.31", "I.42", "I.43",
                         "I.44", "I.45", "I.46", "I.13", "I.15", "I.27", "I.28", "I.29", "I.30", "I.32", "I.33",
                         "I.34", "I.35", "I.36", "I.37", "I.38", "I.41"}) {
    CHECK_MESSAGE(std::find(ids.begin(), ids.end(), id) != ids.end(), id);
  }
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(generate("I.99", rng), UnknownProposition);
}

TEST_CASE("instances are a function of seed, index and id") {
  auto a = instance_rng(7, 3, "I.44");
  auto b = instance_rng(7, 3, "I.44");
  auto c = instance_rng(7, 4, "I.44");
  auto x = generate("I.44", a);
  auto y = generate("I.44", b);
  auto z = generate("I.44", c);
  REQUIRE(x.args.size() == 3);
  CHECK(elements::describe(x.args[1].second) == elements::describe(y.args[1].second));
  CHECK(elements::describe(x.args[1].second) != elements::describe(z.args[1].second));
  CHECK(x.side == y.side);
}

TEST_CASE("suite reports do not depend on the number of threads") {
  auto one = run_suite("I.42", 12, 11, {}, 1);
  auto four = run_suite("I.42", 12, 11, {}, 4);
  CHECK(one.records() == four.records());
  CHECK(one.text() == four.text());
  CHECK(one.ok());
}

TEST_CASE("I.1 suite passes with its step counts") {
  auto r = run_suite("I.1", 50, 7);
  REQUIRE(r.strategies.size() == 1);
  const auto& s = r.strategies[0];
  CHECK(s.passed == 50);
  CHECK(s.failed == 0);
  CHECK(s.circles == 100);
  CHECK(s.joins == 100);
  CHECK(s.max_radical_depth == 1);
  CHECK(r.records().find("id=I.1 instances=50 seed=7 passed=50 failed=0") == 0);
}

TEST_CASE("superposition ledger of I.44") {
  auto r = run_suite("I.44", 10, 5, {"euclid_superposition", "alnayrizi", "robert_of_chester", "campanus"});
  REQUIRE(r.strategies.size() == 4);
  CHECK(r.ok());
  CHECK(r.strategies[0].min_superpositions == 1);
  CHECK(r.strategies[0].max_superpositions == 1);
  for (int i = 1; i < 4; ++i) {
    CHECK(r.strategies[i].passed == 10);
    CHECK(r.strategies[i].max_superpositions == 0);
  }
}

TEST_CASE("inapplicable strategies are skipped, not failed") {
  auto r = run_suite("I.44.tinemue_equal_case", 5, 3);
  REQUIRE(r.strategies.size() == 1);
  CHECK(r.strategies[0].skipped == 5);
  CHECK(r.strategies[0].failed == 0);
  CHECK(r.ok());
  CHECK(r.text().find("5 skipped") != std::string::npos);
  CHECK_THROWS_AS(run_suite("I.44", 1, 1, {"nonesuch"}), StrategyInapplicable);
  CHECK_THROWS_AS(run_suite("I.44.nonesuch", 1, 1), StrategyInapplicable);
  CHECK_THROWS_AS(run_suite("I.99", 1, 1), UnknownProposition);
}

TEST_CASE("theorem suites") {
  for (const char* id : {"I.13", "I.15", "I.29", "I.32", "I.35", "I.41"}) {
    auto r = run_suite(id, 25, 2);
    CHECK_MESSAGE(r.ok(), r.text());
    CHECK(r.strategies[0].passed == 25);
  }
}

TEST_CASE("I.46 strategies draw the same square") {
  auto rng = instance_rng(9, 0, "I.46");
  auto inst = generate("I.46", rng);
  auto cmp = compare("I.46", {"campanus_first", "campanus_second"}, inst);
  REQUIRE(cmp.runs.size() == 2);
  REQUIRE(cmp.runs[0].ran);
  REQUIRE(cmp.runs[1].ran);
  CHECK(cmp.ok());
  const auto& a = cmp.runs[0].result.figure("square");
  const auto& b = cmp.runs[1].result.figure("square");
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("comparison records per-strategy errors") {
  auto rng = instance_rng(1, 0, "I.44");
  auto inst = generate("I.44", rng);
  auto cmp = compare("I.44", {}, inst);
  REQUIRE(cmp.runs.size() == 5);
  CHECK(cmp.ok());
  CHECK(cmp.runs[0].ran);
  CHECK_FALSE(cmp.runs[4].ran);
  CHECK(cmp.runs[4].error_kind == "StrategyInapplicable");
  CHECK(cmp.text().find("not applicable") != std::string::npos);
  CHECK(cmp.records().find("id=I.44.tinemue_equal_case ran=0 error=StrategyInapplicable") != std::string::npos);
  // Every strategy that ran applies the same content.
  auto area = geom::content(cmp.runs[0].result.figure("parallelogram"));
  for (int i = 1; i < 4; ++i) CHECK(geom::content(cmp.runs[i].result.figure("parallelogram")) == area);
}
