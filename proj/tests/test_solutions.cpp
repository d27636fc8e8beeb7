#include <doctest.h>

#include <algorithm>

#include "radonum/solutions.hpp"
#include "test_support.hpp"

using namespace radonum;
using radonum::testing::eqn;

TEST_CASE("eval_f") {
  CHECK(eval_f(eqn("y=2*x+1"), 3) == 7);
  CHECK(eval_f(eqn("y=x^2"), 4) == 16);
  CHECK(eval_f(eqn("y=x^2+1"), 3) == 10);
  CHECK_THROWS_AS(eval_f(eqn("y=x^2"), 1), DomainError);  // domain floor 2
  CHECK_THROWS_AS(eval_f(eqn("y=x^2"), 3'100'000'000LL), Overflow);
}

TEST_CASE("inverse_probe") {
  CHECK(inverse_probe(eqn("y=x^2"), 16) == 4);
  CHECK(!inverse_probe(eqn("y=x^2"), 15).has_value());
  CHECK(inverse_probe(eqn("y=2*x+1"), 7) == 3);
  CHECK(!inverse_probe(eqn("y=2*x+1"), 8).has_value());
  // x=1 is outside the domain of y=x^2, so 1 has no usable preimage.
  CHECK(!inverse_probe(eqn("y=x^2"), 1).has_value());
  CHECK(inverse_probe(eqn("y=x^2"), 4) == 2);
}

TEST_CASE("inverse_probe inverts eval_f across the grid") {
  std::vector<Equation> eqs = radonum::testing::nonlinear_grid();
  for (auto [a, b] : radonum::testing::linear_grid())
    eqs.push_back(radonum::testing::linear_eq(a, b));
  for (const Equation& eq : eqs) {
    for (i64 x = eq.domain_floor; x <= 10'000; x = x < 64 ? x + 1 : x * 5 / 3) {
      i64 y = eval_f(eq, x);
      CHECK(inverse_probe(eq, y) == x);
    }
  }
}

TEST_CASE("inverse_floor brackets") {
  CHECK(inverse_floor(eqn("y=x^2"), 16) == 4);
  CHECK(inverse_floor(eqn("y=x^2"), 15) == 3);
  CHECK(!inverse_floor(eqn("y=x^2"), 3).has_value());
  CHECK(inverse_floor(eqn("y=2*x+1"), 7) == 3);
}

TEST_CASE("solutions_binary") {
  auto sols = solutions_binary(eqn("y=x^2+1"), 10, SolutionMode::distinct_values);
  REQUIRE(sols.size() == 3);
  CHECK(sols[0] == Solution{{1}, 2});
  CHECK(sols[1] == Solution{{2}, 5});
  CHECK(sols[2] == Solution{{3}, 10});

  sols = solutions_binary(eqn("y=2*x+1"), 4, SolutionMode::repeats_allowed);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == Solution{{1}, 3});

  CHECK(solutions_binary(eqn("y=x^2"), 3, SolutionMode::distinct_values).empty());
}

TEST_CASE("solutions_binary is strictly increasing and counts match the bracket") {
  std::vector<Equation> eqs = radonum::testing::nonlinear_grid();
  for (auto [a, b] : radonum::testing::linear_grid())
    eqs.push_back(radonum::testing::linear_eq(a, b));
  for (const Equation& eq : eqs) {
    for (i64 n : {3, 7, 12, 25, 60}) {
      auto sols = solutions_binary(eq, n, SolutionMode::distinct_values);
      for (std::size_t i = 1; i < sols.size(); ++i) {
        CHECK(sols[i].inputs[0] > sols[i - 1].inputs[0]);
        CHECK(sols[i].output > sols[i - 1].output);
      }
      auto top = inverse_floor(eq, n);
      i64 expected = top ? *top - eq.domain_floor + 1 : 0;
      CHECK(static_cast<i64>(sols.size()) == expected);
    }
  }
}

TEST_CASE("solutions_linear enumerates within [n]") {
  Equation sum2 = eqn("y=x1+x2");
  auto repeats = solutions_linear(sum2, 4, SolutionMode::repeats_allowed);
  std::vector<Solution> expected = {{{1, 1}, 2}, {{1, 2}, 3}, {{1, 3}, 4},
                                    {{2, 1}, 3}, {{2, 2}, 4}, {{3, 1}, 4}};
  CHECK(repeats == expected);

  auto distinct = solutions_linear(sum2, 4, SolutionMode::distinct_values);
  std::vector<Solution> expected_distinct = {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 1}, 3}, {{3, 1}, 4}};
  CHECK(distinct == expected_distinct);

  CHECK(solutions_linear(eqn("y=x1+x2+10"), 5, SolutionMode::repeats_allowed).empty());
}

TEST_CASE("distinct-values output is a subset of repeats-allowed output") {
  for (const char* text : {"y=x1+x2", "y=2*x1+x2+1", "y=x1+x2+x3"}) {
    Equation eq = eqn(text);
    for (i64 n : {4, 7, 11}) {
      auto rep = solutions_linear(eq, n, SolutionMode::repeats_allowed);
      auto dis = solutions_linear(eq, n, SolutionMode::distinct_values);
      for (const Solution& sol : dis)
        CHECK(std::find(rep.begin(), rep.end(), sol) != rep.end());
      CHECK(dis.size() <= rep.size());
    }
  }
}

TEST_CASE("dedupe keeps one representative per equal-coefficient orbit") {
  Equation sum2 = eqn("y=x1+x2");
  auto deduped =
      solutions_linear(sum2, 4, SolutionMode::repeats_allowed, LinearEnumOptions{.dedupe = true});
  std::vector<Solution> expected = {{{1, 1}, 2}, {{1, 2}, 3}, {{1, 3}, 4}, {{2, 2}, 4}};
  CHECK(deduped == expected);

  // Unequal coefficients: nothing to merge.
  Equation mixed = eqn("y=x1+2*x2");
  auto all = solutions_linear(mixed, 5, SolutionMode::repeats_allowed);
  auto kept =
      solutions_linear(mixed, 5, SolutionMode::repeats_allowed, LinearEnumOptions{.dedupe = true});
  CHECK(all == kept);
}

TEST_CASE("arity cap") {
  CHECK_THROWS_AS(solutions_linear(eqn("y=x1+x2+x3+x4+x5"), 6, SolutionMode::repeats_allowed),
                  ArityCapExceeded);
  CHECK_NOTHROW(solutions_linear(eqn("y=x1+x2+x3+x4+x5"), 6, SolutionMode::repeats_allowed,
                                 LinearEnumOptions{.arity_cap = 5}));
}
