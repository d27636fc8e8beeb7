#include "radonum/gallai_rado.hpp"

#include <algorithm>

#include "radonum/lambda_classes.hpp"
#include "radonum/solutions.hpp"

namespace radonum {

std::optional<i64> lambda_min(std::span<const i64> a, i64 c, i64 b) {
  if (b < 2) throw DomainError("lambda_min: need b >= 2");
  for (i64 lambda = 1; lambda <= b; ++lambda) {
    i64 sum = c - lambda;
    for (i64 coeff : a) sum += coeff * lambda;
    if (sum % b == 0) return lambda;
  }
  return std::nullopt;
}

Verdict gr_linear(i64 b, std::span<const i64> a, i64 c) {
  if (b < 2) throw DomainError("gr_linear: need b >= 2");
  if (a.empty()) throw DomainError("gr_linear: need t >= 1");
  for (i64 coeff : a)
    if (coeff < 1) throw DomainError("gr_linear: coefficients must be >= 1");
  if (c < 0) throw DomainError("gr_linear: need c >= 0");

  const SolutionMode mode = SolutionMode::distinct_values;
  auto lm = lambda_min(a, c, b);
  if (!lm) {
    return Verdict::make_not_exist(
        NotExistReason::no_lambda_min, ColoringRule::residue(b), mode,
        "no residue class of [" + std::to_string(b) + "] is closed under the equation");
  }

  if (a.size() == 1 && a[0] == 1 && c == 0) {
    // y = x1: with distinct values the equation has no solutions at all, and
    // the formula value lambda_min = 1 sits below the b-color exactness
    // floor. Reported unknown rather than as a value.
    return Verdict::make_unknown(
        0, mode,
        "degenerate identity equation: formula value 1 is below the exactness floor " +
            std::to_string(b) + "; no distinct-values solution exists");
  }

  // Smallest monochromatic output inside the closed class: pair small class
  // elements with large coefficients.
  std::vector<i64> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  i64 n = c;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    n += (*lm + static_cast<i64>(i) * b) * sorted[i];

  return Verdict::make_value(n, ColoringRule::residue(b).restrict_to(n - 1), mode);
}

Verdict gr_power2(i64 a, i64 b, i64 c) {
  if (a < 1 || b < 0 || c < 2) throw DomainError("gr_power2: need a >= 1, b >= 0, c >= 2");
  const SolutionMode mode = SolutionMode::distinct_values;

  bool a_odd = a % 2 != 0;
  bool b_odd = b % 2 != 0;
  if (a_odd && b_odd) {
    return Verdict::make_not_exist(NotExistReason::parity_obstruction, ColoringRule::residue(2),
                                   mode, "a*x^c+b flips parity, so x and y never share a color");
  }
  if (a_odd != b_odd) {
    if (a + b < 2) {
      // (a,b) = (1,0): the value a+b = 1 is below the 2-color exactness
      // floor. With distinct values the first usable solution is (2, 2^c).
      return Verdict::make_unknown(0, mode,
                                   "corner a=1, b=0: value a+b=1 is below the exactness floor 2; "
                                   "distinct-values semantics instead give f(2)=2^" +
                                       std::to_string(c));
    }
    i64 n = a + b;
    return Verdict::make_value(n, ColoringRule::residue(2).restrict_to(n - 1), mode);
  }
  i64 n = b;
  i64 p = 1;
  for (i64 i = 0; i < c; ++i) p = checked_mul(p, 2);
  n = checked_add(n, checked_mul(a, p));
  return Verdict::make_value(n, ColoringRule::residue(2).restrict_to(n - 1), mode);
}

std::optional<i64> x_min(const Equation& eq, i64 b) {
  if (!eq.is_binary()) throw DomainError("x_min requires a binary-function equation");
  if (b < 2) throw DomainError("x_min: need b >= 2");
  // f is an integer polynomial, so f(x) - x mod b is periodic with period
  // dividing b; one full period starting at the domain floor decides.
  for (i64 x = eq.domain_floor; x < eq.domain_floor + b; ++x)
    if ((eval_f(eq, x) - x) % b == 0) return x;
  return std::nullopt;
}

Verdict gr_binary(const Equation& eq, i64 b) {
  const SolutionMode mode = SolutionMode::distinct_values;
  auto xm = x_min(eq, b);
  if (!xm) {
    return Verdict::make_not_exist(
        NotExistReason::no_x_min, ColoringRule::residue(b), mode,
        "f(x)-x is never divisible by " + std::to_string(b) +
            ", so no residue class contains a solution");
  }
  i64 n = eval_f(eq, *xm);
  return Verdict::make_value(n, ColoringRule::residue(b).restrict_to(n - 1), mode);
}

RegularityReport rado_nonexistence_check(i64 a, i64 b, i64 n_max) {
  if (a < 1 || b < 0 || (a == 1 && b == 0))
    throw DomainError("rado_nonexistence_check: need a >= 1, b >= 0, (a,b) != (1,0)");
  if (n_max < 1) throw DomainError("rado_nonexistence_check: need n_max >= 1");

  RegularityReport report;
  report.a = a;
  report.b = b;
  report.n_max = n_max;
  report.verified = true;
  for (i64 m = 1; m <= n_max; ++m) {
    ++report.checked;
    if (block_color(a, b, m) == block_color(a, b, checked_add(checked_mul(a, m), b))) {
      report.verified = false;
      break;
    }
  }
  report.conclusion =
      report.verified
          ? "the alternating-block 2-coloring separates every pair (m, " + std::to_string(a) +
                "*m+" + std::to_string(b) +
                ") up to the bound; splitting its color classes extends the witness to any k >= "
                "2 colors, so no color count forces a monochromatic solution"
          : "block coloring failed to separate some pair; no conclusion";
  return report;
}

}  // namespace radonum
