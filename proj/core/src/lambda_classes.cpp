#include "radonum/lambda_classes.hpp"

#include "radonum/solutions.hpp"

namespace radonum {

i64 general_term(i64 a, i64 b, i64 x1, i64 i) {
  if (a < 1 || b < 0 || x1 < 1 || i < 0) throw DomainError("general_term: bad arguments");
  i64 x = x1;
  for (i64 step = 0; step < i; ++step) x = checked_add(checked_mul(a, x), b);
  return x;
}

LambdaClass lambda_class(const Equation& eq, i64 lambda, i64 n) {
  if (lambda < 1 || lambda > n) throw DomainError("lambda_class: seed outside [n]");
  LambdaClass cls{lambda, {lambda}};
  if (lambda < eq.domain_floor) return cls;  // f never applies to this seed
  i64 current = lambda;
  while (true) {
    i64 next = eval_f(eq, current);
    if (next > n) break;
    cls.members.push_back(next);
    current = next;
  }
  return cls;
}

std::vector<LambdaClass> orbit_partition(const Equation& eq, i64 n) {
  std::vector<LambdaClass> out;
  for (i64 m = 1; m <= n; ++m) {
    auto pre = inverse_probe(eq, m);
    if (pre && *pre <= n) continue;  // m extends an earlier orbit
    out.push_back(lambda_class(eq, m, n));
  }
  return out;
}

Coloring canonical_coloring(const Equation& eq, i64 n) {
  if (n < 1) throw DomainError("canonical_coloring: n must be >= 1");
  std::vector<int> ids(static_cast<std::size_t>(n), 0);
  int colors = 0;
  for (i64 m = 1; m <= n; ++m) {
    // m inherits the color of its integer preimage when one exists in the
    // domain; the preimage is < m and thus already colored. Otherwise m is
    // an orbit root and opens a fresh color. Same result as scanning all
    // earlier seeds forward, without the quadratic rescan.
    auto pre = inverse_probe(eq, m);
    if (pre)
      ids[static_cast<std::size_t>(m - 1)] = ids[static_cast<std::size_t>(*pre - 1)];
    else
      ids[static_cast<std::size_t>(m - 1)] = ++colors;
  }
  return coloring_from_canonical(std::move(ids), colors);
}

bool structure_check(const Coloring& coloring, const Equation& eq) {
  i64 n = coloring.n();
  for (i64 lambda = 1; lambda <= n; ++lambda) {
    if (lambda < eq.domain_floor) continue;  // singleton orbit
    int color = coloring.color_of(lambda);
    i64 current = lambda;
    while (true) {
      i64 next = eval_f(eq, current);
      if (next > n) break;
      if (coloring.color_of(next) != color) return false;
      current = next;
    }
  }
  return true;
}

BlockColor block_color(i64 a, i64 b, i64 m) {
  if (a < 1 || b < 0) throw DomainError("block_color: need a >= 1, b >= 0");
  if (a == 1 && b == 0) throw DomainError("block_color: y=x has no block structure");
  if (m < 1) throw DomainError("block_color: m must be positive");
  // Count orbit elements of 1 that are <= m; the 1-based count is the block
  // ordinal, odd ordinals are red.
  i64 boundary = 1;
  i64 ordinal = 0;
  while (boundary <= m) {
    ++ordinal;
    boundary = checked_add(checked_mul(a, boundary), b);
  }
  return (ordinal % 2 == 1) ? BlockColor::red : BlockColor::blue;
}

}  // namespace radonum
