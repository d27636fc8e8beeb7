#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "radonum/coloring.hpp"
#include "radonum/equation.hpp"
#include "radonum/lambda_classes.hpp"
#include "radonum/parser.hpp"
#include "radonum/solutions.hpp"

namespace radonum::testing {

inline Equation eqn(std::string_view text) { return validate(parse_equation(text)); }

inline Equation linear_eq(i64 a, i64 b) {
  ParsedEquation p;
  p.kind = EquationKind::binary_function;
  p.poly = {b, a};
  return validate(p);
}

// The (a, b) pairs most tests sweep; y=x is rejected by validate.
inline std::vector<std::pair<i64, i64>> linear_grid(i64 a_max = 4, i64 b_max = 4) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 a = 1; a <= a_max; ++a)
    for (i64 b = 0; b <= b_max; ++b)
      if (!(a == 1 && b == 0)) out.emplace_back(a, b);
  return out;
}

inline std::vector<Equation> nonlinear_grid() {
  return {eqn("y=x^2"), eqn("y=x^2+1"), eqn("y=x^3"), eqn("y=2*x^2+2"), eqn("y=x^2+x+1")};
}

// Stirling partition numbers by the recurrence, independent of the
// enumeration under test.
inline std::uint64_t stirling2(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  table[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k && j <= i; ++j)
      table[i][j] = static_cast<std::uint64_t>(j) * table[i - 1][j] + table[i - 1][j - 1];
  return table[n][k];
}

// Reference coloring built exactly as the forward scan describes: t joins
// the first earlier seed whose orbit reaches it, checked by iterating f from
// every seed. Quadratic, kept as the independent mirror of the backward
// implementation.
inline Coloring canonical_coloring_forward(const Equation& eq, i64 n) {
  std::vector<i64> seeds;
  std::vector<int> ids(static_cast<std::size_t>(n), 0);
  int colors = 0;
  for (i64 t = 1; t <= n; ++t) {
    int inherited = 0;
    for (i64 seed : seeds) {
      if (seed < eq.domain_floor) continue;
      i64 current = seed;
      while (current < t) current = eval_f(eq, current);
      if (current == t) {
        inherited = ids[static_cast<std::size_t>(seed - 1)];
        break;
      }
    }
    if (inherited == 0) {
      seeds.push_back(t);
      inherited = ++colors;
    }
    ids[static_cast<std::size_t>(t - 1)] = inherited;
  }
  return make_coloring(n, ids);
}

// Uniform random surjection-by-construction: random labels, canonicalized.
inline Coloring random_coloring(i64 n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick_k(1, static_cast<int>(n));
  int k = pick_k(rng);
  std::uniform_int_distribution<int> pick(1, k);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (auto& label : labels) label = pick(rng);
  return make_coloring(n, labels);
}

}  // namespace radonum::testing
