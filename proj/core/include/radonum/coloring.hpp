#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radonum/equation.hpp"
#include "radonum/solutions.hpp"

namespace radonum {

/// An exact coloring of [n]: every element has a color id in [1, k] and every
/// id is used. Ids are canonical (first-occurrence order), so two colorings
/// that differ only by renaming colors compare equal.
class Coloring {
 public:
  Coloring() = default;

  i64 n() const { return static_cast<i64>(ids_.size()); }
  int k() const { return k_; }

  int color_of(i64 element) const { return ids_[static_cast<std::size_t>(element - 1)]; }
  bool same_color(i64 a, i64 b) const { return color_of(a) == color_of(b); }

  const std::vector<int>& ids() const { return ids_; }

  /// Bit mask of the class of `color` over [n]; bit (m-1) set iff m has it.
  const std::vector<std::uint64_t>& class_mask(int color) const;
  std::vector<i64> class_members(int color) const;

  /// Compact text form for n <= 62: one base-62 digit per element
  /// ('1'-'9','A'-'Z','a'-'z', with '0' standing for color 62).
  std::string compact() const;
  static Coloring from_compact(std::string_view text);

  bool operator==(const Coloring& other) const { return ids_ == other.ids_; }

  friend Coloring make_coloring(i64 n, std::span<const int> assignments);
  friend Coloring coloring_from_canonical(std::vector<int> ids, int k);

 private:
  std::vector<int> ids_;  // ids_[m-1] = color of m, canonical labels 1..k_
  int k_ = 0;
  mutable std::vector<std::vector<std::uint64_t>> masks_;  // built on first use
};

/// Normalize an arbitrary total assignment (any positive labels) to canonical
/// ids. Throws GapError when the assignment does not cover [n] (size mismatch
/// or a non-positive label).
Coloring make_coloring(i64 n, std::span<const int> assignments);

/// Wrap ids already in restricted-growth form. No normalization pass.
Coloring coloring_from_canonical(std::vector<int> ids, int k);

/// True when the solution's values are pairwise distinct and carry pairwise
/// distinct colors. A value appearing in two positions can never contribute
/// two colors, so such tuples are rainbow-ineligible.
bool is_rainbow(std::span<const int> ids, const Solution& sol);

/// True when all participating values have the same color. A single-value
/// solution (possible only in repeats-allowed enumerations) is trivially
/// monochromatic.
bool is_monochromatic(std::span<const int> ids, const Solution& sol);

struct RainbowWitness {
  Solution solution;
  std::vector<int> colors;  // color of each participating value, input order then output
};

struct MonoWitness {
  Solution solution;
  int color = 0;
};

/// First solution (in list order) that is rainbow under the coloring.
std::optional<RainbowWitness> find_rainbow(const Coloring& coloring,
                                           std::span<const Solution> solutions);

/// First solution (in list order) that is monochromatic under the coloring.
std::optional<MonoWitness> find_monochromatic(const Coloring& coloring,
                                              std::span<const Solution> solutions);

/// Visit every exact k-coloring of [n] once per color-relabeling class, as
/// restricted growth strings in lexicographic order (element 1 is color 1,
/// each new color is 1 + max of the previous ones). The visitor receives the
/// id array and returns false to stop early. Returns the number of colorings
/// visited; the total equals the Stirling partition number S2(n, k).
template <typename Fn>
i64 for_each_exact_coloring(i64 n, int k, Fn&& fn) {
  if (n < 1 || k < 1 || k > n) return 0;
  std::vector<int> ids(static_cast<std::size_t>(n), 0);
  i64 visited = 0;
  bool stop = false;

  auto rec = [&](auto&& self, i64 pos, int used) -> void {
    if (stop) return;
    if (pos == n) {
      ++visited;
      if (!fn(std::span<const int>(ids))) stop = true;
      return;
    }
    i64 remaining = n - pos;
    int hi = used < k ? used + 1 : k;
    // When every remaining element is needed to introduce a missing color,
    // only the fresh color survives; this makes the walk dead-branch free.
    int lo = (k - used == remaining) ? used + 1 : 1;
    for (int c = lo; c <= hi && !stop; ++c) {
      ids[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, c > used ? c : used);
    }
  };
  rec(rec, 0, 0);
  return visited;
}

}  // namespace radonum
