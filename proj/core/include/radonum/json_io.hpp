#pragma once

#include <string>

#include "radonum/coloring.hpp"
#include "radonum/oracle.hpp"
#include "radonum/verdict.hpp"

namespace radonum {

// Coloring JSON: {"n": int, "k": int, "colors": [int, ...]} with canonical ids.
std::string coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const std::string& text);

std::string witness_to_json(const RainbowWitness& w);
std::string witness_to_json(const MonoWitness& w);

// Verdict JSON: {"kind": "value|notexist|unknown", "N": ..., "witness": ...,
// "mode": "distinct|repeats", ...}.
std::string verdict_to_json(const Verdict& v);

std::string report_to_json(const AvoiderReport& r);

std::string to_string(SolutionMode mode);
SolutionMode mode_from_string(const std::string& s);

}  // namespace radonum
