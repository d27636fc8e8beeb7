#include "radonum/rainbow.hpp"

#include <unordered_set>

#include "radonum/solutions.hpp"

namespace radonum {

i64 rb_linear(i64 a, i64 b, i64 n) {
  if (a < 1 || b < 0) throw DomainError("rb_linear: need a >= 1, b >= 0");
  if (n < a + b) throw RangeError("rb_linear: need n >= a+b");
  return n - (n - b) / a + 1;
}

MuResult mu_linear(i64 a, i64 b, i64 n) {
  if (a < 1 || b < 0) throw DomainError("mu_linear: need a >= 1, b >= 0");
  if (n < a + b) throw RangeError("mu_linear: need n >= a+b");
  MuResult r;
  r.mu = (n - b) / a;
  return r;
}

MuResult mu_scan(const Equation& eq, i64 n, bool want_trace) {
  if (!eq.is_binary()) throw DomainError("mu_scan requires a binary-function equation");
  MuResult result;
  if (want_trace) result.trace.emplace();

  auto top = inverse_floor(eq, n);
  if (!top) return result;  // n below f(domain_floor): nothing merges

  std::unordered_set<i64> visited;
  auto record = [&](i64 t, MuTraceStep::Action action) {
    if (result.trace) result.trace->push_back({t, action});
  };

  for (i64 t = *top; t >= eq.domain_floor; --t) {
    if (visited.count(t)) {
      record(t, MuTraceStep::Action::skipped);
      continue;
    }
    // f(t) <= n, so f(t) is merged into t's class rather than freshly colored.
    ++result.mu;
    record(t, MuTraceStep::Action::counted);

    auto pre = inverse_probe(eq, t);
    if (!pre) {
      visited.insert(t);
      record(t, MuTraceStep::Action::marked_root);
      continue;
    }
    // Walk the preimage chain; every element with an in-domain preimage is
    // itself a merged value.
    i64 s = t;
    while (pre) {
      visited.insert(s);
      visited.insert(*pre);
      ++result.mu;
      record(s, MuTraceStep::Action::chain_counted);
      s = *pre;
      pre = inverse_probe(eq, s);
    }
  }
  result.visited = static_cast<i64>(visited.size());
  return result;
}

i64 rb_general(const Equation& eq, i64 n) {
  if (!eq.is_binary()) throw DomainError("rb_general requires a binary-function equation");
  if (!inverse_floor(eq, n)) throw RangeError("rb_general: n is below the first value of f");
  return n - mu_scan(eq, n).mu + 1;
}

}  // namespace radonum
