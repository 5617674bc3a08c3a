#include "milnor/report.hpp"

#include <sstream>

namespace milnor {

OrderedJson json_rational(const Rational& v) { return to_string(v); }

OrderedJson json_vector(const QVec& v) {
  OrderedJson a = OrderedJson::array();
  for (const Rational& x : v) a.push_back(json_rational(x));
  return a;
}

OrderedJson json_matrix(const QMat& m) {
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedJson json_vector(const DVec& v) {
  OrderedJson a = OrderedJson::array();
  for (double x : v) a.push_back(x);
  return a;
}

OrderedJson json_matrix(const DMat& m) {
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_json(const Report& r) {
  OrderedJson doc = OrderedJson::object();
  doc["command"] = r.command;
  doc["inputs"] = r.inputs;
  doc["mode"] = r.mode;
  doc["results"] = r.results;
  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

namespace {

void render_value(std::ostream& os, const OrderedJson& v, int indent);

void render_array(std::ostream& os, const OrderedJson& v, int indent) {
  // Matrices / tables: an array of arrays renders one row per line.
  bool nested = !v.empty() && v.front().is_array();
  if (nested) {
    os << "\n";
    for (const auto& row : v) {
      for (int i = 0; i < indent + 2; ++i) os << ' ';
      bool first = true;
      for (const auto& cell : row) {
        if (!first) os << "  ";
        first = false;
        if (cell.is_string())
          os << cell.get<std::string>();
        else
          os << cell.dump();
      }
      os << "\n";
    }
    return;
  }
  if (!v.empty() && v.front().is_object()) {
    os << "\n";
    for (const auto& item : v) {
      for (int i = 0; i < indent + 2; ++i) os << ' ';
      os << item.dump() << "\n";
    }
    return;
  }
  bool first = true;
  for (const auto& item : v) {
    if (!first) os << " ";
    first = false;
    if (item.is_string())
      os << item.get<std::string>();
    else
      os << item.dump();
  }
  os << "\n";
}

void render_value(std::ostream& os, const OrderedJson& v, int indent) {
  if (v.is_object()) {
    os << "\n";
    for (auto it = v.begin(); it != v.end(); ++it) {
      for (int i = 0; i < indent + 2; ++i) os << ' ';
      os << it.key() << ": ";
      render_value(os, it.value(), indent + 2);
    }
    return;
  }
  if (v.is_array()) {
    render_array(os, v, indent);
    return;
  }
  if (v.is_string())
    os << v.get<std::string>() << "\n";
  else
    os << v.dump() << "\n";
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << " (" << r.mode << " mode)\n";
  for (auto it = r.results.begin(); it != r.results.end(); ++it) {
    os << it.key() << ": ";
    render_value(os, it.value(), 0);
  }
  for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace milnor
