#include "radonum/equation.hpp"

#include <algorithm>

namespace radonum {

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("integer overflow in addition");
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("integer overflow in multiplication");
  return out;
}

namespace {

i64 eval_poly(const std::vector<i64>& poly, i64 x) {
  i64 acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

Equation validate(const ParsedEquation& parsed) {
  Equation eq;
  eq.kind = parsed.kind;

  if (parsed.kind == EquationKind::general_linear) {
    for (std::size_t i = 0; i < parsed.coeffs.size(); ++i) {
      if (parsed.coeffs[i] < 1)
        throw UnsupportedForm("coefficient of x" + std::to_string(i + 1) + " must be >= 1");
    }
    if (parsed.constant < 0) throw UnsupportedForm("constant must be >= 0");
    eq.coeffs = parsed.coeffs;
    eq.constant = parsed.constant;
    eq.domain_floor = 1;
    return eq;
  }

  eq.poly = parsed.poly;
  while (eq.poly.size() > 1 && eq.poly.back() == 0) eq.poly.pop_back();

  bool has_positive_nonconstant = false;
  for (std::size_t j = 1; j < eq.poly.size(); ++j)
    if (eq.poly[j] > 0) has_positive_nonconstant = true;
  if (!has_positive_nonconstant)
    throw NotIncreasing("no positive non-constant coefficient; f is constant");

  // Non-negative coefficients with a positive non-constant one make f
  // strictly increasing on the positive integers with f(x) in N+.
  i64 f1 = eval_poly(eq.poly, 1);
  if (f1 >= 2) {
    eq.domain_floor = 1;
  } else {
    // f(1) = 1: exclude x=1 and require f(2) >= 3 so that f(x) >= x+1 holds
    // from x = 2 on.
    i64 f2 = eval_poly(eq.poly, 2);
    if (f2 < 3) throw FixedPointDomain("f(1)=1 and f(2)<3 leave no valid domain");
    eq.domain_floor = 2;
  }
  return eq;
}

std::optional<std::pair<i64, i64>> linear_shape(const Equation& eq) {
  if (!eq.is_binary() || eq.poly.size() != 2) return std::nullopt;
  if (eq.poly[1] < 1) return std::nullopt;
  return std::make_pair(eq.poly[1], eq.poly[0]);
}

std::optional<std::tuple<i64, i64, i64>> power_shape(const Equation& eq) {
  if (!eq.is_binary() || eq.poly.size() < 3) return std::nullopt;
  i64 degree = static_cast<i64>(eq.poly.size()) - 1;
  if (eq.poly.back() < 1) return std::nullopt;
  for (std::size_t j = 1; j + 1 < eq.poly.size(); ++j)
    if (eq.poly[j] != 0) return std::nullopt;
  return std::make_tuple(eq.poly.back(), eq.poly[0], degree);
}

}  // namespace radonum
