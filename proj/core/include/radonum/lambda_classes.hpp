#pragma once

#include <vector>

#include "radonum/coloring.hpp"
#include "radonum/equation.hpp"

namespace radonum {

/// Forward orbit of a seed under f, truncated to [n]:
/// members = seed, f(seed), f(f(seed)), ... while <= n.
struct LambdaClass {
  i64 seed = 0;
  std::vector<i64> members;

  bool operator==(const LambdaClass&) const = default;
};

/// i-th iterate of x -> a*x + b starting at x1 (i=0 returns x1). Computed by
/// exact integer iteration; throws Overflow.
i64 general_term(i64 a, i64 b, i64 x1, i64 i);

/// Orbit of lambda under eq's f inside [n]. A seed below the domain floor
/// (only lambda=1 for f(1)=1 equations) yields the singleton {lambda}.
LambdaClass lambda_class(const Equation& eq, i64 lambda, i64 n);

/// The orbit partition of [n]: one class per orbit root (element with no
/// integer preimage in the domain), ordered by seed.
std::vector<LambdaClass> orbit_partition(const Equation& eq, i64 n);

/// The maximal coloring of [n] with no rainbow solution of eq: scan t=1..n,
/// give t a fresh color unless it extends an earlier orbit, in which case it
/// inherits that orbit's color. Membership is resolved backwards through
/// integer preimages, which produces the same coloring as the forward scan.
Coloring canonical_coloring(const Equation& eq, i64 n);

/// True iff every orbit within [n] is monochromatic under the coloring,
/// which holds exactly when the coloring admits no rainbow solution of eq.
bool structure_check(const Coloring& coloring, const Equation& eq);

enum class BlockColor { red, blue };

/// Two-coloring of the positive integers under which m and a*m+b always
/// differ: consecutive blocks [g^i(1), g^{i+1}(1)-1] for g(x)=a*x+b alternate
/// colors, red first. Requires (a,b) != (1,0).
BlockColor block_color(i64 a, i64 b, i64 m);

}  // namespace radonum
