#pragma once

#include <optional>
#include <string>

#include "radonum/coloring.hpp"
#include "radonum/solutions.hpp"

namespace radonum {

enum class NotExistReason {
  no_lambda_min,       // no residue class of [b] closed under the mono equation
  parity_obstruction,  // odd/even coloring avoids both targets forever
  block_coloring,      // alternating-block coloring kills monochromatic solutions
  no_x_min,            // f(x) - x never divisible by b
};

std::string to_string(NotExistReason reason);

/// A rule-based exact coloring of the positive integers, used as the witness
/// behind a NotExist verdict. Restricting it to [n] (n >= colors()) gives an
/// exact coloring of [n].
struct ColoringRule {
  enum class Kind { residue, block };
  Kind kind = Kind::residue;
  i64 modulus = 2;  // residue: class of m is ((m-1) mod modulus) + 1
  i64 a = 0, b = 0; // block: block_color(a, b, m)

  static ColoringRule residue(i64 modulus);
  static ColoringRule block(i64 a, i64 b);

  int color_of(i64 m) const;
  int colors() const;
  Coloring restrict_to(i64 n) const;
  std::string describe() const;
};

/// Result of a number computation: a proven value N (with the avoider
/// coloring of [N-1] when one exists), a proven non-existence with the
/// infinite witness rule, or Unknown with the search bound reached.
struct Verdict {
  enum class Kind { value, not_exist, unknown };

  Kind kind = Kind::unknown;
  i64 value = 0;                             // kind == value
  std::optional<Coloring> avoider;           // value: coloring of [value-1];
                                             // unknown: largest avoider seen
  std::optional<NotExistReason> reason;      // kind == not_exist
  std::optional<ColoringRule> witness_rule;  // kind == not_exist
  i64 search_bound = 0;                      // kind == unknown
  SolutionMode mode = SolutionMode::distinct_values;
  std::string note;

  bool is_value() const { return kind == Kind::value; }
  bool is_not_exist() const { return kind == Kind::not_exist; }
  bool is_unknown() const { return kind == Kind::unknown; }

  static Verdict make_value(i64 n, std::optional<Coloring> avoider, SolutionMode mode,
                            std::string note = {});
  static Verdict make_not_exist(NotExistReason reason, ColoringRule rule, SolutionMode mode,
                                std::string note = {});
  static Verdict make_unknown(i64 bound, SolutionMode mode, std::string note = {},
                              std::optional<Coloring> largest_avoider = std::nullopt);
};

}  // namespace radonum
