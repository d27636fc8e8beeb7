#pragma once

#include <string>
#include <string_view>

#include "radonum/equation.hpp"

namespace radonum {

/// Parse an equation string of the form "y = <polynomial in x>" or
/// "y = <sum of a_i*x_i> + c". Whitespace is ignored, integers are decimal
/// and non-negative. Throws SyntaxError (with position and expected token)
/// or UnsupportedForm.
ParsedEquation parse_equation(std::string_view text);

/// Canonical text form: binary polynomials by descending power with the
/// constant last, linear sums by ascending variable index. Re-parsing the
/// result yields an identical equation.
std::string render(const ParsedEquation& eq);
std::string render(const Equation& eq);

}  // namespace radonum
