#pragma once

#include <optional>
#include <span>
#include <string>

#include "radonum/equation.hpp"
#include "radonum/verdict.hpp"

namespace radonum {

/// Smallest lambda in [b] with (sum a_i*lambda + c - lambda) divisible by b,
/// i.e. the least residue class mod b that is closed under the linear
/// equation. Absent means no class is, for any n.
std::optional<i64> lambda_min(std::span<const i64> a, i64 c, i64 b);

/// GR_b(y=x+b : y=sum a_i x_i + c), distinct-values mode. Value is the
/// smallest monochromatic output reachable inside the closed residue class:
/// sum over the coefficients sorted descending of (lambda_min + (i-1)b)*a_i,
/// plus c. Descending order pairs the small class elements with the large
/// coefficients, which is what minimizes the output over distinct choices.
/// No lambda_min: NotExist with the residue coloring as witness rule.
Verdict gr_linear(i64 b, std::span<const i64> a, i64 c);

/// GR_2(y=x+2 : y=a*x^c+b), c >= 2: NotExist when a, b are both odd (parity
/// coloring), a+b when they differ in parity, a*2^c+b when both are even.
/// The corner (a,b)=(1,0) falls below the 2-color exactness floor and is
/// reported Unknown.
Verdict gr_power2(i64 a, i64 b, i64 c);

/// Smallest in-domain x with f(x) - x divisible by b. The residue of
/// f(x) - x mod b has period dividing b, so one period starting at the
/// domain floor decides existence exactly.
std::optional<i64> x_min(const Equation& eq, i64 b);

/// GR_b(y=x+b : y=f(x)) = f(x_min), distinct-values mode, or NotExist with
/// the residue coloring when x_min does not exist.
Verdict gr_binary(const Equation& eq, i64 b);

/// Report of the non-regularity check for y=ax+b, (a,b) != (1,0).
struct RegularityReport {
  i64 a = 0, b = 0, n_max = 0;
  bool verified = false;  // block colors of m and a*m+b differ for all m <= n_max
  i64 checked = 0;
  std::string conclusion;
};

/// Verify block_color(m) != block_color(a*m+b) for all m <= n_max. The block
/// coloring extends to any number of colors by splitting classes of the
/// infinite witness, so no color count forces a monochromatic solution.
RegularityReport rado_nonexistence_check(i64 a, i64 b, i64 n_max);

}  // namespace radonum
