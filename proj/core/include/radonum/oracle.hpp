#pragma once

#include <optional>
#include <span>
#include <vector>

#include "radonum/coloring.hpp"
#include "radonum/equation.hpp"
#include "radonum/solutions.hpp"
#include "radonum/verdict.hpp"

namespace radonum {

enum class SearchStrategy {
  auto_select,  // enumerate at desk scale, backtrack beyond
  enumerate,    // walk every exact coloring and test it; the literal quantifier
  backtrack,    // incremental constraint tables, prune on completed conflicts
};

struct SearchConfig {
  i64 n_max = 64;
  SolutionMode mode = SolutionMode::distinct_values;
  int jobs = 1;
  SearchStrategy strategy = SearchStrategy::auto_select;
  i64 budget = 100'000'000;  // search nodes; BudgetExceeded past this
};

struct SearchStats {
  i64 nodes = 0;
};

struct AvoiderRecord {
  i64 n = 0;
  bool found = false;
};

/// Per-n avoider scan result for a Gallai-Rado style question.
struct AvoiderReport {
  int k = 0;
  std::vector<AvoiderRecord> per_n;         // n = k .. n_max
  std::optional<Coloring> largest_avoider;  // at the largest n with one
  bool monotone = true;                     // avoider existence downward closed
  std::optional<i64> candidate;             // (largest avoider n)+1, floored at k;
                                            // absent when the bound was reached
                                            // or monotonicity failed
  SolutionMode mode = SolutionMode::distinct_values;
  SearchStats stats;
};

/// Smallest k such that every exact k-coloring of [n] has a rainbow solution
/// of eq. Realizes the definition directly: ascend k from 2, search for an
/// exact k-coloring with no rainbow solution, stop at the first k without one.
int oracle_rb(i64 n, const Equation& eq, SolutionMode mode, const SearchConfig& cfg = {},
              SearchStats* stats = nullptr);

/// Rado number search: smallest n <= cfg.n_max such that no exact k-coloring
/// of [n] avoids a monochromatic solution of eq. Equations of the shape
/// y=ax+b, (a,b) != (1,0), short-circuit to NotExist via the block coloring;
/// otherwise Unknown at the bound, with the largest avoider attached.
Verdict oracle_rado(int k, const Equation& eq, const SearchConfig& cfg = {},
                    SearchStats* stats = nullptr);

/// Gallai-Rado scan: for each n in [k, n_max], search for an exact k-coloring
/// of [n] with neither a rainbow solution of rainbow_eq nor a monochromatic
/// solution of mono_eq. rainbow_eq is the parsed form so that y=x (which never
/// has rainbow solutions) is admissible. When rainbow_eq is y=x+b and k = b,
/// the only rainbow-free colorings are the residue classes mod b, so each n
/// collapses to one direct check.
AvoiderReport oracle_gr(int k, const ParsedEquation& rainbow_eq, const Equation& mono_eq,
                        const SearchConfig& cfg = {});

/// Shared backtracking engine: first exact k-coloring of [n] (in restricted
/// growth order) under which no solution in rainbow_forbidden is rainbow and
/// no solution in mono_forbidden is monochromatic. Deterministic for a fixed
/// config, including under cfg.jobs > 1.
std::optional<Coloring> avoider_search(i64 n, int k,
                                       std::span<const Solution> rainbow_forbidden,
                                       std::span<const Solution> mono_forbidden,
                                       const SearchConfig& cfg = {},
                                       SearchStats* stats = nullptr);

/// gr_dispatch lives here because the y=x and open-problem routes delegate to
/// the oracles. Routes:
///   y=x            -> oracle_rado (the rainbow side never fires)
///   y=x+b, k>=b+1  -> Value(k): k colors always force a rainbow solution
///   y=x+b, k==b    -> closed forms by mono equation shape
///   y=x+b, k<b     -> open; empirical oracle_gr scan, Unknown
Verdict gr_dispatch(int k, const ParsedEquation& rainbow_eq, const Equation& mono_eq,
                    const SearchConfig& cfg = {});

}  // namespace radonum
