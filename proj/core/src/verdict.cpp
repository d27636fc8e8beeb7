#include "radonum/verdict.hpp"

#include "radonum/lambda_classes.hpp"

namespace radonum {

std::string to_string(NotExistReason reason) {
  switch (reason) {
    case NotExistReason::no_lambda_min: return "no-lambda-min";
    case NotExistReason::parity_obstruction: return "parity-obstruction";
    case NotExistReason::block_coloring: return "block-coloring";
    case NotExistReason::no_x_min: return "no-x-min";
  }
  return "?";
}

ColoringRule ColoringRule::residue(i64 modulus) {
  ColoringRule r;
  r.kind = Kind::residue;
  r.modulus = modulus;
  return r;
}

ColoringRule ColoringRule::block(i64 a, i64 b) {
  ColoringRule r;
  r.kind = Kind::block;
  r.a = a;
  r.b = b;
  return r;
}

int ColoringRule::color_of(i64 m) const {
  if (kind == Kind::residue) return static_cast<int>((m - 1) % modulus) + 1;
  return block_color(a, b, m) == BlockColor::red ? 1 : 2;
}

int ColoringRule::colors() const { return kind == Kind::residue ? static_cast<int>(modulus) : 2; }

Coloring ColoringRule::restrict_to(i64 n) const {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (i64 m = 1; m <= n; ++m) ids[static_cast<std::size_t>(m - 1)] = color_of(m);
  return make_coloring(n, ids);
}

std::string ColoringRule::describe() const {
  if (kind == Kind::residue) {
    if (modulus == 2) return "color each m by parity (odd red, even blue)";
    return "color each m by its residue class: color((m-1) mod " + std::to_string(modulus) +
           " + 1)";
  }
  return "alternating blocks between consecutive iterates of 1 under x -> " + std::to_string(a) +
         "*x+" + std::to_string(b);
}

Verdict Verdict::make_value(i64 n, std::optional<Coloring> avoider, SolutionMode mode,
                            std::string note) {
  Verdict v;
  v.kind = Kind::value;
  v.value = n;
  v.avoider = std::move(avoider);
  v.mode = mode;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::make_not_exist(NotExistReason reason, ColoringRule rule, SolutionMode mode,
                                std::string note) {
  Verdict v;
  v.kind = Kind::not_exist;
  v.reason = reason;
  v.witness_rule = rule;
  v.mode = mode;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::make_unknown(i64 bound, SolutionMode mode, std::string note,
                              std::optional<Coloring> largest_avoider) {
  Verdict v;
  v.kind = Kind::unknown;
  v.search_bound = bound;
  v.mode = mode;
  v.note = std::move(note);
  v.avoider = std::move(largest_avoider);
  return v;
}

}  // namespace radonum
