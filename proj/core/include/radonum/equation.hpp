#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "radonum/errors.hpp"

namespace radonum {

using i64 = std::int64_t;

enum class EquationKind { binary_function, general_linear };

/// Grammar-faithful parse result. Coefficients are known non-negative, but
/// monotonicity and domain checks happen in validate().
struct ParsedEquation {
  EquationKind kind = EquationKind::binary_function;

  // binary_function: integer polynomial in x, constant term first.
  std::vector<i64> poly;

  // general_linear: y = sum coeffs[i]*x_{i+1} + constant.
  std::vector<i64> coeffs;
  i64 constant = 0;

  bool operator==(const ParsedEquation&) const = default;
};

/// Validated equation. For binary-function equations f is strictly
/// increasing and satisfies f(x) >= x+1 for all x >= domain_floor.
/// domain_floor is 1 when f(1) >= 2, and 2 when f(1)=1 with f(2) >= 3
/// (x=1 is then excluded from the equation's domain).
struct Equation {
  EquationKind kind = EquationKind::binary_function;
  std::vector<i64> poly;
  std::vector<i64> coeffs;
  i64 constant = 0;
  int domain_floor = 1;

  int arity() const {
    return kind == EquationKind::general_linear ? static_cast<int>(coeffs.size()) : 1;
  }
  bool is_binary() const { return kind == EquationKind::binary_function; }
  bool is_linear() const { return kind == EquationKind::general_linear; }

  bool operator==(const Equation&) const = default;
};

/// Certify a parsed equation. Throws NotIncreasing when the polynomial has no
/// positive non-constant coefficient, FixedPointDomain when f(1)=1 but
/// f(2) < 3, and UnsupportedForm for a zero linear coefficient.
Equation validate(const ParsedEquation& parsed);

/// Binary equation of the shape y = a*x + b with a >= 1. Returns (a, b).
std::optional<std::pair<i64, i64>> linear_shape(const Equation& eq);

/// Binary equation of the shape y = a*x^c + b with c >= 2. Returns (a, b, c).
std::optional<std::tuple<i64, i64, i64>> power_shape(const Equation& eq);

// Checked 64-bit arithmetic; throws Overflow.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

}  // namespace radonum
