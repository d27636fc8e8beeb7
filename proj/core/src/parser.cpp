#include "radonum/parser.hpp"

#include <cctype>
#include <map>

namespace radonum {

namespace {

constexpr i64 kMaxCoefficient = 1'000'000'000'000'000;  // 1e15
constexpr i64 kMaxDegree = 30;
constexpr i64 kMaxVariableIndex = 64;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) fail(what);
  }
  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    throw SyntaxError(pos, expected,
                      "syntax error at position " + std::to_string(pos) + ": expected " + expected);
  }

  i64 integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("integer");
    i64 value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxCoefficient) throw UnsupportedForm("integer literal too large");
      ++pos;
    }
    return value;
  }
  bool digit_next() {
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
};

// One additive term of the right-hand side.
struct Term {
  enum class Kind { constant, binary_power, linear_var } kind;
  i64 coefficient = 1;
  i64 power = 1;   // binary_power
  i64 index = 0;   // linear_var
  std::size_t pos = 0;
};

Term parse_term(Cursor& cur) {
  Term term;
  cur.skip_ws();
  term.pos = cur.pos;

  bool have_coefficient = false;
  if (cur.digit_next()) {
    term.coefficient = cur.integer();
    have_coefficient = true;
    if (!cur.accept('*')) {
      term.kind = Term::Kind::constant;
      return term;
    }
  }

  if (!cur.accept('x')) cur.fail(have_coefficient ? "'x' after '*'" : "term");

  // A digit directly after x names an indexed variable; '^' raises plain x.
  if (cur.digit_next()) {
    term.kind = Term::Kind::linear_var;
    term.index = cur.integer();
    if (term.index < 1) throw UnsupportedForm("variable indices start at x1");
    if (term.index > kMaxVariableIndex) throw UnsupportedForm("variable index too large");
    if (cur.peek() == '^')
      throw UnsupportedForm("exponent on indexed variable x" + std::to_string(term.index));
    return term;
  }

  term.kind = Term::Kind::binary_power;
  if (cur.accept('^')) {
    term.power = cur.integer();
    if (term.power > kMaxDegree) throw UnsupportedForm("polynomial degree too large");
  }
  return term;
}

}  // namespace

ParsedEquation parse_equation(std::string_view text) {
  Cursor cur{text};
  if (cur.at_end()) cur.fail("'y'");
  cur.expect('y', "'y'");
  cur.expect('=', "'='");

  std::vector<Term> terms;
  terms.push_back(parse_term(cur));
  while (cur.accept('+')) terms.push_back(parse_term(cur));
  if (!cur.at_end()) cur.fail("'+' or end of input");

  bool has_binary = false, has_linear = false;
  for (const auto& t : terms) {
    has_binary |= t.kind == Term::Kind::binary_power;
    has_linear |= t.kind == Term::Kind::linear_var;
  }
  if (has_binary && has_linear)
    throw UnsupportedForm("cannot mix plain x with indexed variables x1, x2, ...");

  ParsedEquation eq;
  if (has_linear) {
    eq.kind = EquationKind::general_linear;
    std::map<i64, i64> by_index;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const Term& t = terms[i];
      if (t.kind == Term::Kind::constant) {
        if (i + 1 != terms.size())
          throw SyntaxError(t.pos, "variable term",
                            "constant must be the final term of a linear sum");
        eq.constant = t.coefficient;
      } else {
        by_index[t.index] += t.coefficient;
      }
    }
    i64 arity = by_index.rbegin()->first;
    for (i64 idx = 1; idx <= arity; ++idx)
      if (!by_index.count(idx))
        throw UnsupportedForm("missing variable x" + std::to_string(idx) +
                              "; indices must cover 1..t");
    eq.coeffs.resize(static_cast<std::size_t>(arity));
    for (const auto& [idx, coeff] : by_index) eq.coeffs[static_cast<std::size_t>(idx - 1)] = coeff;
    return eq;
  }

  eq.kind = EquationKind::binary_function;
  for (const Term& t : terms) {
    i64 power = t.kind == Term::Kind::constant ? 0 : t.power;
    if (eq.poly.size() <= static_cast<std::size_t>(power))
      eq.poly.resize(static_cast<std::size_t>(power) + 1, 0);
    eq.poly[static_cast<std::size_t>(power)] += t.coefficient;
  }
  return eq;
}

namespace {

void append_binary_rhs(std::string& out, const std::vector<i64>& poly) {
  bool first = true;
  for (std::size_t j = poly.size(); j-- > 1;) {
    if (poly[j] == 0) continue;
    if (!first) out += '+';
    first = false;
    if (poly[j] != 1) {
      out += std::to_string(poly[j]);
      out += '*';
    }
    out += 'x';
    if (j >= 2) {
      out += '^';
      out += std::to_string(j);
    }
  }
  if (!poly.empty() && (poly[0] != 0 || first)) {
    if (!first) out += '+';
    out += std::to_string(poly[0]);
  }
}

void append_linear_rhs(std::string& out, const std::vector<i64>& coeffs, i64 constant) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += '+';
    if (coeffs[i] != 1) {
      out += std::to_string(coeffs[i]);
      out += '*';
    }
    out += 'x';
    out += std::to_string(i + 1);
  }
  if (constant > 0) {
    out += '+';
    out += std::to_string(constant);
  }
}

}  // namespace

std::string render(const ParsedEquation& eq) {
  std::string out = "y=";
  if (eq.kind == EquationKind::binary_function)
    append_binary_rhs(out, eq.poly);
  else
    append_linear_rhs(out, eq.coeffs, eq.constant);
  return out;
}

std::string render(const Equation& eq) {
  std::string out = "y=";
  if (eq.is_binary())
    append_binary_rhs(out, eq.poly);
  else
    append_linear_rhs(out, eq.coeffs, eq.constant);
  return out;
}

}  // namespace radonum
