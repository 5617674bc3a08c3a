#pragma once

// Deterministic command reports. A report carries the command name, an echo
// of the parsed inputs, an exact/float mode marker, a results object and a
// warning list; JSON rendering preserves insertion order so identical inputs
// render byte-identically. Exact values are emitted as canonical p/q strings,
// float values as JSON numbers under a "mode": "float" marker.

#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/linalg.hpp"
#include "milnor/rational.hpp"

namespace milnor {

using OrderedJson = nlohmann::ordered_json;

struct Report {
  std::string command;
  OrderedJson inputs = OrderedJson::object();
  std::string mode = "exact";
  OrderedJson results = OrderedJson::object();
  std::vector<std::string> warnings;
};

// Canonical-string JSON views of exact values and float views of numeric ones.
OrderedJson json_rational(const Rational& v);
OrderedJson json_vector(const QVec& v);
OrderedJson json_matrix(const QMat& m);
OrderedJson json_vector(const DVec& v);
OrderedJson json_matrix(const DMat& m);

// Two-space-indented JSON document with a trailing newline.
std::string render_json(const Report& r);

// Human-readable rendering: one "key: value" line per result, matrices and
// tables row per line, warnings at the end.
std::string render_text(const Report& r);

}  // namespace milnor
