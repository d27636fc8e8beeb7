#pragma once

#include <optional>
#include <span>
#include <vector>

#include "radonum/equation.hpp"

namespace radonum {

/// Whether a solution tuple may repeat values. Schur/Rado style checks
/// classically allow x = y; the Gallai-Rado closed forms require all
/// participating values pairwise distinct (including the output).
enum class SolutionMode { repeats_allowed, distinct_values };

/// One solution of an equation: the inputs in variable order plus the output.
/// Participating values are inputs[0..], output, in that order.
struct Solution {
  std::vector<i64> inputs;
  i64 output = 0;

  bool operator==(const Solution&) const = default;
};

/// f(x) for a binary-function equation. Throws DomainError when x is below
/// the equation's domain floor, Overflow on 64-bit overflow.
i64 eval_f(const Equation& eq, i64 x);

/// The integer x >= domain_floor with f(x) = y, if one exists. Monotone
/// integer bisection, no floating point.
std::optional<i64> inverse_probe(const Equation& eq, i64 y);

/// Largest x >= domain_floor with f(x) <= y, if any (the bracketing search
/// behind solution counting and the mu scan).
std::optional<i64> inverse_floor(const Equation& eq, i64 y);

/// All solutions (x, f(x)) with x >= domain_floor and f(x) <= n, ascending
/// in x. Empty when n is below the first value of f.
std::vector<Solution> solutions_binary(const Equation& eq, i64 n, SolutionMode mode);

struct LinearEnumOptions {
  int arity_cap = 4;
  // Keep only one representative among tuples that differ by permuting
  // positions with equal coefficients (rainbow/mono checks are invariant
  // under such permutations).
  bool dedupe = false;
};

/// All tuples (x_1..x_t, y) with every x_i in [n] and y = sum a_i x_i + c <= n,
/// in lexicographic x order. Distinct-values mode keeps only tuples whose
/// values (inputs and output) are pairwise distinct. Throws ArityCapExceeded
/// when t exceeds opts.arity_cap.
std::vector<Solution> solutions_linear(const Equation& eq, i64 n, SolutionMode mode,
                                       LinearEnumOptions opts = {});

/// Dispatch on the equation kind.
std::vector<Solution> solutions_in(const Equation& eq, i64 n, SolutionMode mode,
                                   LinearEnumOptions opts = {});

}  // namespace radonum
