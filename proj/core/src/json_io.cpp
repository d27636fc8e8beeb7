#include "radonum/json_io.hpp"

#include <json.hpp>

namespace radonum {

using nlohmann::json;

namespace {

json coloring_json(const Coloring& c) {
  return json{{"n", c.n()}, {"k", c.k()}, {"colors", c.ids()}};
}

json solution_json(const Solution& s) {
  return json{{"inputs", s.inputs}, {"output", s.output}};
}

}  // namespace

std::string coloring_to_json(const Coloring& coloring) { return coloring_json(coloring).dump(); }

Coloring coloring_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<int> colors = j.at("colors").get<std::vector<int>>();
  return make_coloring(j.at("n").get<i64>(), colors);
}

std::string witness_to_json(const RainbowWitness& w) {
  return json{{"kind", "rainbow"},
              {"solution", solution_json(w.solution)},
              {"colors", w.colors}}
      .dump();
}

std::string witness_to_json(const MonoWitness& w) {
  return json{{"kind", "monochromatic"},
              {"solution", solution_json(w.solution)},
              {"color", w.color}}
      .dump();
}

std::string to_string(SolutionMode mode) {
  return mode == SolutionMode::distinct_values ? "distinct" : "repeats";
}

SolutionMode mode_from_string(const std::string& s) {
  if (s == "distinct") return SolutionMode::distinct_values;
  if (s == "repeats") return SolutionMode::repeats_allowed;
  throw Error("unknown solution mode '" + s + "' (expected distinct or repeats)");
}

std::string verdict_to_json(const Verdict& v) {
  json j;
  j["mode"] = to_string(v.mode);
  switch (v.kind) {
    case Verdict::Kind::value:
      j["kind"] = "value";
      j["N"] = v.value;
      j["witness"] = v.avoider ? coloring_json(*v.avoider) : json(nullptr);
      break;
    case Verdict::Kind::not_exist:
      j["kind"] = "notexist";
      j["reason"] = v.reason ? to_string(*v.reason) : "";
      j["witness"] = v.witness_rule ? json(v.witness_rule->describe()) : json(nullptr);
      break;
    case Verdict::Kind::unknown:
      j["kind"] = "unknown";
      j["bound"] = v.search_bound;
      j["witness"] = v.avoider ? coloring_json(*v.avoider) : json(nullptr);
      break;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j.dump();
}

std::string report_to_json(const AvoiderReport& r) {
  json per_n = json::array();
  for (const auto& rec : r.per_n) per_n.push_back(json{{"n", rec.n}, {"avoider", rec.found}});
  json j{{"k", r.k},
         {"mode", to_string(r.mode)},
         {"per_n", per_n},
         {"monotone", r.monotone},
         {"nodes", r.stats.nodes}};
  j["candidate"] = r.candidate ? json(*r.candidate) : json(nullptr);
  j["largest_avoider"] = r.largest_avoider ? coloring_json(*r.largest_avoider) : json(nullptr);
  return j.dump();
}

}  // namespace radonum
