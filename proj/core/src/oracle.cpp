#include "radonum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "radonum/gallai_rado.hpp"
#include "radonum/lambda_classes.hpp"
#include "radonum/parser.hpp"

namespace radonum {

namespace {

// One forbidden pattern: the distinct participating values of a solution,
// keyed by their maximum so a newly colored element triggers exactly the
// checks it completes.
struct Constraint {
  std::vector<i64> values;  // pairwise distinct, ascending
  bool rainbow = false;     // true: conflict when all colors pairwise differ
                            // false: conflict when all colors agree
};

struct ConstraintTables {
  std::vector<std::vector<Constraint>> by_max;  // index = element 1..n

  ConstraintTables(i64 n, std::span<const Solution> rainbow_forbidden,
                   std::span<const Solution> mono_forbidden) {
    by_max.resize(static_cast<std::size_t>(n) + 1);
    for (const Solution& sol : rainbow_forbidden) add(sol, /*rainbow=*/true);
    for (const Solution& sol : mono_forbidden) add(sol, /*rainbow=*/false);
  }

  void add(const Solution& sol, bool rainbow) {
    Constraint c;
    c.rainbow = rainbow;
    c.values = sol.inputs;
    c.values.push_back(sol.output);
    std::sort(c.values.begin(), c.values.end());
    c.values.erase(std::unique(c.values.begin(), c.values.end()), c.values.end());
    // A tuple with a repeated value can never be rainbow.
    if (rainbow && c.values.size() != sol.inputs.size() + 1) return;
    by_max[static_cast<std::size_t>(c.values.back())].push_back(std::move(c));
  }

  // Element m was just colored; everything at or below m has a color.
  bool conflict(std::span<const int> ids, i64 m) const {
    for (const Constraint& c : by_max[static_cast<std::size_t>(m)]) {
      if (c.rainbow) {
        bool distinct = true;
        for (std::size_t i = 0; i < c.values.size() && distinct; ++i)
          for (std::size_t j = i + 1; j < c.values.size(); ++j)
            if (ids[static_cast<std::size_t>(c.values[i] - 1)] ==
                ids[static_cast<std::size_t>(c.values[j] - 1)]) {
              distinct = false;
              break;
            }
        if (distinct) return true;
      } else {
        int color = ids[static_cast<std::size_t>(c.values.back() - 1)];
        bool mono = true;
        for (i64 v : c.values)
          if (ids[static_cast<std::size_t>(v - 1)] != color) {
            mono = false;
            break;
          }
        if (mono) return true;
      }
    }
    return false;
  }
};

// Depth-first walk over restricted growth strings with exactly k colors,
// pruning on completed conflicts. run() returns true when `ids` holds a
// completed avoider.
struct SequentialSearch {
  i64 n;
  int k;
  const ConstraintTables& tables;
  i64 budget;
  std::vector<int>& ids;

  // Cooperative abort for the parallel driver: give up once a strictly
  // lower subtree holds a hit, or on a global stop.
  const std::atomic<std::size_t>* best = nullptr;
  std::size_t self_index = 0;
  const std::atomic<bool>* stop = nullptr;

  i64 nodes = 0;

  bool run(i64 pos, int used) {
    if (pos == n) return used == k;
    if ((nodes & 0xFFF) == 0 && nodes > 0) {
      if (best && best->load(std::memory_order_relaxed) < self_index) return false;
      if (stop && stop->load(std::memory_order_relaxed)) return false;
    }
    i64 remaining = n - pos;
    int hi = used < k ? used + 1 : k;
    // When every remaining element must introduce a missing color, only the
    // fresh color survives.
    int lo = (k - used == remaining) ? used + 1 : 1;
    for (int c = lo; c <= hi; ++c) {
      if (++nodes > budget) throw BudgetExceeded(nodes, "search budget exhausted");
      ids[static_cast<std::size_t>(pos)] = c;
      if (tables.conflict(ids, pos + 1)) continue;
      if (run(pos + 1, c > used ? c : used)) return true;
    }
    return false;
  }
};

struct Prefix {
  std::vector<int> ids;
  int used = 0;
};

// All conflict-free restricted-growth prefixes of the given depth, in search
// order. `nodes` counts the assignments spent building them.
std::vector<Prefix> expand_prefixes(i64 n, int k, const ConstraintTables& tables, i64 depth,
                                    i64 budget, i64& nodes) {
  std::vector<Prefix> out;
  std::vector<int> ids(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, i64 pos, int used) -> void {
    if (pos == depth) {
      out.push_back(Prefix{std::vector<int>(ids.begin(), ids.begin() + depth), used});
      return;
    }
    i64 remaining = n - pos;
    int hi = used < k ? used + 1 : k;
    int lo = (k - used == remaining) ? used + 1 : 1;
    for (int c = lo; c <= hi; ++c) {
      if (++nodes > budget) throw BudgetExceeded(nodes, "search budget exhausted");
      ids[static_cast<std::size_t>(pos)] = c;
      if (tables.conflict(ids, pos + 1)) continue;
      self(self, pos + 1, std::max(used, c));
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Subtrees are claimed in ascending order and the answer is the hit in the
// lowest subtree. Every subtree below the answer runs to completion, so the
// witness and the reported node count (prefix work plus subtrees up to and
// including the answer) do not depend on thread scheduling. Work spent in
// higher subtrees before the hit landed is real but excluded from the
// deterministic count.
std::optional<Coloring> parallel_search(i64 n, int k, const ConstraintTables& tables,
                                        const SearchConfig& cfg, i64& nodes_out) {
  i64 depth = 1;
  i64 prefix_nodes = 0;
  std::vector<Prefix> prefixes;
  while (true) {
    prefix_nodes = 0;
    prefixes = expand_prefixes(n, k, tables, depth, cfg.budget, prefix_nodes);
    if (depth >= n - 1 || static_cast<int>(prefixes.size()) >= 4 * cfg.jobs ||
        prefixes.size() > 4096)
      break;
    ++depth;
  }
  if (prefixes.empty()) {
    nodes_out = prefix_nodes;
    return std::nullopt;
  }

  std::vector<std::optional<std::vector<int>>> results(prefixes.size());
  std::vector<i64> subtree_nodes(prefixes.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{SIZE_MAX};
  std::atomic<bool> budget_blown{false};

  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      if (i > best.load()) continue;  // a lower subtree already holds a hit
      if (budget_blown.load()) return;
      std::vector<int> ids(static_cast<std::size_t>(n), 0);
      std::copy(prefixes[i].ids.begin(), prefixes[i].ids.end(), ids.begin());
      SequentialSearch search{n, k, tables, cfg.budget, ids};
      search.best = &best;
      search.self_index = i;
      search.stop = &budget_blown;
      bool hit = false;
      try {
        hit = search.run(depth, prefixes[i].used);
      } catch (const BudgetExceeded&) {
        budget_blown.store(true);
        subtree_nodes[i] = search.nodes;
        return;
      }
      subtree_nodes[i] = search.nodes;
      if (hit) {
        std::size_t prev = best.load();
        while (i < prev && !best.compare_exchange_weak(prev, i)) {
        }
        results[i] = std::move(ids);
      }
    }
  };

  std::vector<std::thread> pool;
  for (int j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  i64 total = prefix_nodes;
  if (budget_blown.load()) {
    for (i64 c : subtree_nodes) total += c;
    throw BudgetExceeded(total, "search budget exhausted");
  }

  std::size_t b = best.load();
  if (b == SIZE_MAX) {
    for (i64 c : subtree_nodes) total += c;
    nodes_out = total;
    return std::nullopt;
  }
  for (std::size_t i = 0; i <= b; ++i) total += subtree_nodes[i];
  nodes_out = total;
  return coloring_from_canonical(std::move(*results[b]), k);
}

}  // namespace

std::optional<Coloring> avoider_search(i64 n, int k, std::span<const Solution> rainbow_forbidden,
                                       std::span<const Solution> mono_forbidden,
                                       const SearchConfig& cfg, SearchStats* stats) {
  if (k < 1 || k > n) throw DomainError("avoider_search: need 1 <= k <= n");
  ConstraintTables tables(n, rainbow_forbidden, mono_forbidden);

  if (cfg.jobs <= 1 || n <= 4) {
    std::vector<int> ids(static_cast<std::size_t>(n), 0);
    SequentialSearch search{n, k, tables, cfg.budget, ids};
    bool hit;
    try {
      hit = search.run(0, 0);
    } catch (const BudgetExceeded&) {
      if (stats) stats->nodes += search.nodes;
      throw;
    }
    if (stats) stats->nodes += search.nodes;
    if (!hit) return std::nullopt;
    return coloring_from_canonical(std::move(ids), k);
  }

  i64 nodes = 0;
  try {
    auto result = parallel_search(n, k, tables, cfg, nodes);
    if (stats) stats->nodes += nodes;
    return result;
  } catch (const BudgetExceeded& e) {
    if (stats) stats->nodes += e.nodes;
    throw;
  }
}

namespace {

// Literal realization of the quantifier: walk every exact k-coloring of [n]
// and test it against the forbidden patterns. Independent of the backtracking
// engine; the default at desk scale.
std::optional<Coloring> enumerate_avoider(i64 n, int k, std::span<const Solution> rainbow_forbidden,
                                          std::span<const Solution> mono_forbidden, i64 budget,
                                          i64& nodes) {
  std::optional<Coloring> found;
  i64 visited = 0;
  bool blew = false;
  for_each_exact_coloring(n, k, [&](std::span<const int> ids) {
    if (++visited > budget) {
      blew = true;
      return false;
    }
    for (const Solution& sol : rainbow_forbidden)
      if (is_rainbow(ids, sol)) return true;
    for (const Solution& sol : mono_forbidden)
      if (is_monochromatic(ids, sol)) return true;
    found = coloring_from_canonical(std::vector<int>(ids.begin(), ids.end()), k);
    return false;
  });
  nodes += visited;
  if (blew) throw BudgetExceeded(visited, "enumeration budget exhausted");
  return found;
}

bool use_enumerate(const SearchConfig& cfg, i64 n, SearchStrategy auto_fallback) {
  switch (cfg.strategy) {
    case SearchStrategy::enumerate: return true;
    case SearchStrategy::backtrack: return false;
    case SearchStrategy::auto_select: break;
  }
  return auto_fallback == SearchStrategy::enumerate && n <= 12;
}

// Remaining budget for the next inner search; oracles budget whole calls.
SearchConfig drained(const SearchConfig& cfg, const SearchStats* stats) {
  SearchConfig local = cfg;
  if (stats) {
    local.budget = cfg.budget - stats->nodes;
    if (local.budget <= 0) throw BudgetExceeded(stats->nodes, "search budget exhausted");
  }
  return local;
}

std::optional<Coloring> find_avoider(i64 n, int k, std::span<const Solution> rainbow_forbidden,
                                     std::span<const Solution> mono_forbidden,
                                     const SearchConfig& cfg, SearchStrategy auto_fallback,
                                     SearchStats* stats) {
  SearchConfig local = drained(cfg, stats);
  if (use_enumerate(local, n, auto_fallback)) {
    i64 nodes = 0;
    try {
      auto result = enumerate_avoider(n, k, rainbow_forbidden, mono_forbidden, local.budget, nodes);
      if (stats) stats->nodes += nodes;
      return result;
    } catch (const BudgetExceeded& e) {
      if (stats) stats->nodes += e.nodes;
      throw;
    }
  }
  return avoider_search(n, k, rainbow_forbidden, mono_forbidden, local, stats);
}

LinearEnumOptions enum_options(const SearchConfig&) {
  // The oracles always consume the deduplicated stream: monochromatic and
  // rainbow detection are invariant under permuting equal-coefficient
  // positions.
  return LinearEnumOptions{.arity_cap = 8, .dedupe = true};
}

}  // namespace

int oracle_rb(i64 n, const Equation& eq, SolutionMode mode, const SearchConfig& cfg,
              SearchStats* stats) {
  if (n < 2) throw RangeError("oracle_rb: need n >= 2");
  SearchStats local_stats;
  if (!stats) stats = &local_stats;

  auto sols = solutions_in(eq, n, mode, enum_options(cfg));
  bool any_eligible = false;
  for (const Solution& sol : sols) {
    std::vector<i64> vals = sol.inputs;
    vals.push_back(sol.output);
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) == vals.end()) any_eligible = true;
  }
  if (!any_eligible)
    throw RangeError("oracle_rb: the equation has no rainbow-eligible solution in [n]");

  for (int k = 2; k <= n; ++k) {
    auto avoider = find_avoider(n, k, sols, {}, cfg, SearchStrategy::enumerate, stats);
    if (!avoider) return k;
  }
  // Unreachable for eligible input: with n colors every distinct-valued
  // solution is rainbow.
  throw Error("oracle_rb: no color count forces a rainbow solution");
}

Verdict oracle_rado(int k, const Equation& eq, const SearchConfig& cfg, SearchStats* stats) {
  if (k < 2) throw DomainError("oracle_rado: need k >= 2");
  SearchStats local_stats;
  if (!stats) stats = &local_stats;

  // Equations whose solutions are the pairs (m, a*m+b) admit the alternating
  // block coloring as an infinite avoider, so no n suffices for any color
  // count. Covers y=ax+b and the unary linear form y=a*x1+b; (a,b)=(1,0)
  // never reaches here (validate rejects y=x, and y=x1 has no pair shape
  // with a gap between x and y).
  std::optional<std::pair<i64, i64>> pair_shape = linear_shape(eq);
  if (!pair_shape && eq.is_linear() && eq.arity() == 1 &&
      !(eq.coeffs[0] == 1 && eq.constant == 0))
    pair_shape = std::make_pair(eq.coeffs[0], eq.constant);
  if (pair_shape) {
    auto [a, b] = *pair_shape;
    return Verdict::make_not_exist(NotExistReason::block_coloring, ColoringRule::block(a, b),
                                   cfg.mode,
                                   "the alternating-block coloring avoids monochromatic "
                                   "solutions over all positive integers");
  }

  std::optional<Coloring> previous;
  for (i64 n = std::max<i64>(k, 2); n <= cfg.n_max; ++n) {
    auto sols = solutions_in(eq, n, cfg.mode, enum_options(cfg));
    auto avoider = find_avoider(n, k, {}, sols, cfg, SearchStrategy::backtrack, stats);
    if (!avoider)
      return Verdict::make_value(n, std::move(previous), cfg.mode,
                                 "smallest n with no monochromatic-free exact coloring");
    previous = std::move(avoider);
  }
  return Verdict::make_unknown(cfg.n_max, cfg.mode, "avoiders exist up to the search bound",
                               std::move(previous));
}

namespace {

struct RainbowEquationClass {
  enum class Kind { identity, shift, general } kind = Kind::general;
  i64 b = 0;  // shift: y = x + b
};

RainbowEquationClass classify_rainbow(const ParsedEquation& parsed) {
  RainbowEquationClass out;
  if (parsed.kind != EquationKind::binary_function) return out;
  std::vector<i64> poly = parsed.poly;
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  if (poly == std::vector<i64>{0, 1}) {
    out.kind = RainbowEquationClass::Kind::identity;
  } else if (poly.size() == 2 && poly[1] == 1 && poly[0] >= 1) {
    out.kind = RainbowEquationClass::Kind::shift;
    out.b = poly[0];
  }
  return out;
}

}  // namespace

AvoiderReport oracle_gr(int k, const ParsedEquation& rainbow_eq, const Equation& mono_eq,
                        const SearchConfig& cfg) {
  if (k < 2) throw DomainError("oracle_gr: need k >= 2");
  AvoiderReport report;
  report.k = k;
  report.mode = cfg.mode;

  auto cls = classify_rainbow(rainbow_eq);
  bool collapse = cls.kind == RainbowEquationClass::Kind::shift && cls.b == k;

  std::optional<Equation> rainbow_valid;
  if (cls.kind != RainbowEquationClass::Kind::identity && !collapse)
    rainbow_valid = validate(rainbow_eq);

  i64 last_found = k - 1;
  bool seen_false = false;

  for (i64 n = k; n <= cfg.n_max; ++n) {
    bool found;
    auto mono_sols = solutions_in(mono_eq, n, cfg.mode, enum_options(cfg));
    if (collapse) {
      // With b = k colors the only rainbow-free colorings of [n] are the
      // residue classes mod b, so each n is one direct check.
      Coloring residue = ColoringRule::residue(cls.b).restrict_to(n);
      report.stats.nodes += 1;
      found = !find_monochromatic(residue, mono_sols).has_value();
      if (found) report.largest_avoider = std::move(residue);
    } else {
      std::vector<Solution> rainbow_sols;
      if (rainbow_valid) rainbow_sols = solutions_in(*rainbow_valid, n, cfg.mode, enum_options(cfg));
      auto avoider = find_avoider(n, k, rainbow_sols, mono_sols, cfg, SearchStrategy::backtrack,
                                  &report.stats);
      found = avoider.has_value();
      if (found) report.largest_avoider = std::move(avoider);
    }
    if (found) {
      if (seen_false) report.monotone = false;
      last_found = n;
    } else {
      seen_false = true;
    }
    report.per_n.push_back({n, found});
  }

  if (!report.monotone) {
    report.candidate = std::nullopt;
  } else if (last_found >= cfg.n_max) {
    report.candidate = std::nullopt;  // avoider at the bound, value out of reach
  } else {
    report.candidate = std::max<i64>(k, last_found + 1);
  }
  return report;
}

Verdict gr_dispatch(int k, const ParsedEquation& rainbow_eq, const Equation& mono_eq,
                    const SearchConfig& cfg) {
  if (k < 2) throw DomainError("gr_dispatch: need k >= 2");
  auto cls = classify_rainbow(rainbow_eq);

  if (cls.kind == RainbowEquationClass::Kind::identity) {
    // y=x never has a rainbow solution, so only the monochromatic side acts.
    return oracle_rado(k, mono_eq, cfg);
  }
  if (cls.kind != RainbowEquationClass::Kind::shift)
    throw UnsupportedRainbowEquation("gr_dispatch supports rainbow equations y=x and y=x+b; got " +
                                     render(rainbow_eq));

  i64 b = cls.b;
  if (k >= b + 1) {
    return Verdict::make_value(
        k, std::nullopt, cfg.mode,
        "with " + std::to_string(k) + " > " + std::to_string(b) +
            " colors every exact coloring has a rainbow solution of y=x+" + std::to_string(b));
  }

  if (k == b) {
    if (cfg.mode == SolutionMode::repeats_allowed) {
      auto report = oracle_gr(k, rainbow_eq, mono_eq, cfg);
      std::string note =
          "closed forms cover distinct-values mode; repeats-allowed explored empirically up to "
          "n=" + std::to_string(cfg.n_max);
      if (report.candidate) note += "; candidate " + std::to_string(*report.candidate);
      return Verdict::make_unknown(cfg.n_max, cfg.mode, std::move(note),
                                   std::move(report.largest_avoider));
    }
    if (mono_eq.is_linear()) return gr_linear(b, mono_eq.coeffs, mono_eq.constant);
    if (k == 2) {
      if (auto shape = power_shape(mono_eq)) {
        auto [a, b0, c] = *shape;
        return gr_power2(a, b0, c);
      }
    }
    return gr_binary(mono_eq, b);
  }

  // 2 <= k <= b-1: the rainbow-free structure is no longer unique and no
  // closed form is known; report the empirical scan.
  auto report = oracle_gr(k, rainbow_eq, mono_eq, cfg);
  std::string note =
      "no closed form for 2 <= k <= b-1; empirical scan to n=" + std::to_string(cfg.n_max);
  if (report.candidate)
    note += " suggests " + std::to_string(*report.candidate);
  else if (!report.per_n.empty() && report.per_n.back().found)
    note += " still finds avoiders at the bound";
  return Verdict::make_unknown(cfg.n_max, cfg.mode, std::move(note),
                               std::move(report.largest_avoider));
}

}  // namespace radonum
