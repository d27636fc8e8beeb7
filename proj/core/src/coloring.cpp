#include "radonum/coloring.hpp"

#include <algorithm>
#include <unordered_map>

namespace radonum {

namespace {

constexpr std::string_view kDigits =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

char digit_for(int color) {
  // Colors 1..61 map to '1'..'9','A'..'Z','a'..'z'; 62 wraps to '0'.
  return kDigits[static_cast<std::size_t>(color % 62)];
}

int color_for(char digit) {
  auto idx = kDigits.find(digit);
  if (idx == std::string_view::npos) throw GapError("invalid compact coloring digit");
  return idx == 0 ? 62 : static_cast<int>(idx);
}

}  // namespace

Coloring make_coloring(i64 n, std::span<const int> assignments) {
  if (n < 1) throw GapError("coloring needs n >= 1");
  if (static_cast<i64>(assignments.size()) != n)
    throw GapError("assignment covers " + std::to_string(assignments.size()) +
                   " elements, expected " + std::to_string(n));
  Coloring c;
  c.ids_.resize(static_cast<std::size_t>(n));
  std::unordered_map<int, int> relabel;
  int next = 0;
  for (i64 m = 0; m < n; ++m) {
    int label = assignments[static_cast<std::size_t>(m)];
    if (label <= 0)
      throw GapError("element " + std::to_string(m + 1) + " is unassigned");
    auto [it, fresh] = relabel.try_emplace(label, next + 1);
    if (fresh) ++next;
    c.ids_[static_cast<std::size_t>(m)] = it->second;
  }
  c.k_ = next;
  return c;
}

Coloring coloring_from_canonical(std::vector<int> ids, int k) {
  Coloring c;
  c.ids_ = std::move(ids);
  c.k_ = k;
  return c;
}

const std::vector<std::uint64_t>& Coloring::class_mask(int color) const {
  if (masks_.empty()) {
    std::size_t words = (ids_.size() + 63) / 64;
    masks_.assign(static_cast<std::size_t>(k_), std::vector<std::uint64_t>(words, 0));
    for (std::size_t m = 0; m < ids_.size(); ++m)
      masks_[static_cast<std::size_t>(ids_[m] - 1)][m / 64] |= std::uint64_t{1} << (m % 64);
  }
  return masks_[static_cast<std::size_t>(color - 1)];
}

std::vector<i64> Coloring::class_members(int color) const {
  std::vector<i64> out;
  for (std::size_t m = 0; m < ids_.size(); ++m)
    if (ids_[m] == color) out.push_back(static_cast<i64>(m) + 1);
  return out;
}

std::string Coloring::compact() const {
  if (n() > 62) throw RangeError("compact form supports n <= 62");
  std::string out;
  out.reserve(ids_.size());
  for (int id : ids_) out += digit_for(id);
  return out;
}

Coloring Coloring::from_compact(std::string_view text) {
  std::vector<int> ids;
  ids.reserve(text.size());
  for (char ch : text) ids.push_back(color_for(ch));
  return make_coloring(static_cast<i64>(text.size()), ids);
}

bool is_rainbow(std::span<const int> ids, const Solution& sol) {
  // Gather participating values; any repeated value disqualifies the tuple.
  i64 values[17];
  if (sol.inputs.size() + 1 > std::size(values))
    throw ArityCapExceeded("rainbow check supports at most 16 inputs");
  std::size_t count = 0;
  for (i64 v : sol.inputs) values[count++] = v;
  values[count++] = sol.output;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      if (values[i] == values[j]) return false;
      if (ids[static_cast<std::size_t>(values[i] - 1)] ==
          ids[static_cast<std::size_t>(values[j] - 1)])
        return false;
    }
  return true;
}

bool is_monochromatic(std::span<const int> ids, const Solution& sol) {
  int color = ids[static_cast<std::size_t>(sol.output - 1)];
  for (i64 v : sol.inputs)
    if (ids[static_cast<std::size_t>(v - 1)] != color) return false;
  return true;
}

std::optional<RainbowWitness> find_rainbow(const Coloring& coloring,
                                           std::span<const Solution> solutions) {
  std::span<const int> ids(coloring.ids());
  for (const Solution& sol : solutions) {
    if (is_rainbow(ids, sol)) {
      RainbowWitness w{sol, {}};
      for (i64 v : sol.inputs) w.colors.push_back(coloring.color_of(v));
      w.colors.push_back(coloring.color_of(sol.output));
      return w;
    }
  }
  return std::nullopt;
}

std::optional<MonoWitness> find_monochromatic(const Coloring& coloring,
                                              std::span<const Solution> solutions) {
  std::span<const int> ids(coloring.ids());
  for (const Solution& sol : solutions)
    if (is_monochromatic(ids, sol)) return MonoWitness{sol, coloring.color_of(sol.output)};
  return std::nullopt;
}

}  // namespace radonum
