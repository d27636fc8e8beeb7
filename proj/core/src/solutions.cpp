#include "radonum/solutions.hpp"

#include <algorithm>

namespace radonum {

namespace {

// f(x) clamped to limit+1; exact whenever the true value is <= limit.
// Coefficients are non-negative, so the Horner accumulator never decreases
// and clamping early is safe.
i64 eval_clamped(const std::vector<i64>& poly, i64 x, i64 limit) {
  __int128 acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = acc * x + *it;
    if (acc > limit) return limit + 1;
  }
  return static_cast<i64>(acc);
}

}  // namespace

i64 eval_f(const Equation& eq, i64 x) {
  if (!eq.is_binary()) throw DomainError("eval_f requires a binary-function equation");
  if (x < eq.domain_floor)
    throw DomainError("x=" + std::to_string(x) + " is below the domain floor " +
                      std::to_string(eq.domain_floor));
  __int128 acc = 0;
  for (auto it = eq.poly.rbegin(); it != eq.poly.rend(); ++it) {
    acc = acc * x + *it;
    if (acc > INT64_MAX) throw Overflow("f(x) overflows 64-bit range");
  }
  return static_cast<i64>(acc);
}

std::optional<i64> inverse_probe(const Equation& eq, i64 y) {
  if (!eq.is_binary()) throw DomainError("inverse_probe requires a binary-function equation");
  i64 lo = eq.domain_floor;
  // f(x) >= x+1 on the domain, so any preimage of y is < y.
  i64 hi = y - 1;
  if (hi < lo) return std::nullopt;
  while (lo < hi) {
    i64 mid = lo + (hi - lo) / 2;
    if (eval_clamped(eq.poly, mid, y) >= y)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (eval_clamped(eq.poly, lo, y) == y) return lo;
  return std::nullopt;
}

std::optional<i64> inverse_floor(const Equation& eq, i64 y) {
  if (!eq.is_binary()) throw DomainError("inverse_floor requires a binary-function equation");
  i64 lo = eq.domain_floor;
  i64 hi = y - 1;
  if (hi < lo) hi = lo;
  if (eval_clamped(eq.poly, lo, y) > y) return std::nullopt;
  // Largest x with f(x) <= y.
  while (lo < hi) {
    i64 mid = lo + (hi - lo + 1) / 2;
    if (eval_clamped(eq.poly, mid, y) <= y)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::vector<Solution> solutions_binary(const Equation& eq, i64 n, SolutionMode mode) {
  if (!eq.is_binary()) throw DomainError("solutions_binary requires a binary-function equation");
  std::vector<Solution> out;
  auto top = inverse_floor(eq, n);
  if (!top) return out;
  out.reserve(static_cast<std::size_t>(*top - eq.domain_floor + 1));
  for (i64 x = eq.domain_floor; x <= *top; ++x) {
    i64 y = eval_clamped(eq.poly, x, n);
    // f(x) = x cannot happen for x >= domain_floor, so distinct-values mode
    // never drops anything here.
    if (mode == SolutionMode::distinct_values && y == x) continue;
    out.push_back(Solution{{x}, y});
  }
  return out;
}

namespace {

bool all_values_distinct(const Solution& sol) {
  for (std::size_t i = 0; i < sol.inputs.size(); ++i) {
    if (sol.inputs[i] == sol.output) return false;
    for (std::size_t j = i + 1; j < sol.inputs.size(); ++j)
      if (sol.inputs[i] == sol.inputs[j]) return false;
  }
  return true;
}

// Lexicographically least representative of the orbit under permutations of
// equal-coefficient positions: inside every such group the values ascend.
bool is_dedupe_representative(const std::vector<i64>& coeffs, const std::vector<i64>& xs) {
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (coeffs[i] == coeffs[j] && xs[i] > xs[j]) return false;
  return true;
}

}  // namespace

std::vector<Solution> solutions_linear(const Equation& eq, i64 n, SolutionMode mode,
                                       LinearEnumOptions opts) {
  if (!eq.is_linear()) throw DomainError("solutions_linear requires a general-linear equation");
  int t = eq.arity();
  if (t > opts.arity_cap)
    throw ArityCapExceeded("arity " + std::to_string(t) + " exceeds the cap of " +
                           std::to_string(opts.arity_cap));

  std::vector<Solution> out;
  if (eq.constant > n) return out;

  // suffix_min[pos] = least the positions pos.. can contribute (all x_i = 1).
  std::vector<i64> suffix_min(static_cast<std::size_t>(t) + 1, 0);
  for (int pos = t - 1; pos >= 0; --pos)
    suffix_min[pos] = suffix_min[pos + 1] + eq.coeffs[static_cast<std::size_t>(pos)];
  if (suffix_min[0] + eq.constant > n) return out;

  std::vector<i64> xs(static_cast<std::size_t>(t));
  auto rec = [&](auto&& self, int pos, i64 partial) -> void {
    if (pos == t) {
      i64 y = partial + eq.constant;
      Solution sol{xs, y};
      if (mode == SolutionMode::distinct_values && !all_values_distinct(sol)) return;
      if (opts.dedupe && !is_dedupe_representative(eq.coeffs, xs)) return;
      out.push_back(std::move(sol));
      return;
    }
    i64 coeff = eq.coeffs[static_cast<std::size_t>(pos)];
    for (i64 x = 1; x <= n; ++x) {
      i64 value = partial + coeff * x;
      if (value + suffix_min[pos + 1] + eq.constant > n) break;
      xs[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, value);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Solution> solutions_in(const Equation& eq, i64 n, SolutionMode mode,
                                   LinearEnumOptions opts) {
  return eq.is_binary() ? solutions_binary(eq, n, mode) : solutions_linear(eq, n, mode, opts);
}

}  // namespace radonum
