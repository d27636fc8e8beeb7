#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace radonum {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Equation text rejected by the grammar.
struct SyntaxError : Error {
  SyntaxError(std::size_t pos, std::string expected_token, const std::string& msg)
      : Error(msg), pos(pos), expected(std::move(expected_token)) {}
  std::size_t pos;       // byte offset into the input
  std::string expected;  // token class the parser wanted at pos
};

// Grammar-valid text outside the two supported equation families.
struct UnsupportedForm : Error {
  using Error::Error;
};

// validate(): polynomial with no positive non-constant coefficient.
struct NotIncreasing : Error {
  using Error::Error;
};

// validate(): f(1)=1 and f(2)<3, so no usable integer domain remains.
struct FixedPointDomain : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

// make_coloring(): some element of [n] has no color.
struct GapError : Error {
  using Error::Error;
};

struct ArityCapExceeded : Error {
  using Error::Error;
};

struct Overflow : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  BudgetExceeded(std::int64_t nodes, const std::string& msg) : Error(msg), nodes(nodes) {}
  std::int64_t nodes;
};

struct UnsupportedRainbowEquation : Error {
  using Error::Error;
};

}  // namespace radonum
