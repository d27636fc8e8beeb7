#pragma once

#include <optional>
#include <vector>

#include "radonum/equation.hpp"

namespace radonum {

/// Audit record of one step of the mu scan.
struct MuTraceStep {
  enum class Action {
    counted,        // unvisited t, one merged element f(t)
    chain_counted,  // preimage chain step, element s = f(p) merged
    marked_root,    // t has no integer preimage in the domain
    skipped,        // t already visited
  };
  i64 t = 0;
  Action action = Action::counted;
};

/// The monochromatic parameter mu: n minus the largest color count that
/// still avoids a rainbow solution. 0 <= mu <= n-1, and n - mu equals the
/// color count of canonical_coloring.
struct MuResult {
  i64 mu = 0;
  i64 visited = 0;  // final size of the scan's visited set
  std::optional<std::vector<MuTraceStep>> trace;
};

/// rb([n], y=ax+b) = n - floor((n-b)/a) + 1. Throws RangeError when n < a+b.
i64 rb_linear(i64 a, i64 b, i64 n);

/// mu for y=ax+b: floor((n-b)/a). Throws RangeError when n < a+b.
MuResult mu_linear(i64 a, i64 b, i64 n);

/// mu for an arbitrary validated binary-function equation, by the descending
/// scan: t runs from the largest x with f(x) <= n down to the domain floor;
/// each unvisited t contributes the merged element f(t), and when t has an
/// integer preimage the whole preimage chain is counted and marked visited.
MuResult mu_scan(const Equation& eq, i64 n, bool want_trace = false);

/// rb([n], y=f(x)) = n - mu + 1, mu from mu_scan. Throws RangeError when n
/// is below the first value of f.
i64 rb_general(const Equation& eq, i64 n);

}  // namespace radonum
