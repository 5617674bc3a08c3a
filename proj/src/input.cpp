#include "milnor/input.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace milnor {

namespace {

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Rational parse_rational_or_throw(const std::string& token, int line) {
  auto r = parse_rational(token);
  if (!r) throw ParseError(line, "expected a rational p, -p or p/q, got '" + token + "'");
  return *r;
}

int parse_int_or_throw(const std::string& token, int line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
        return c >= '0' && c <= '9';
      }))
    throw ParseError(line, "expected a positive integer, got '" + token + "'");
  try {
    return std::stoi(token);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range: '" + token + "'");
  }
}

}  // namespace

LieAlgebra AlgebraFile::build() const {
  if (brackets) return *brackets;
  if (!milnor) throw std::logic_error("AlgebraFile::build: no algebra section");
  if (milnor->has_default_sigma()) return build_cyclic(*milnor);
  return build_general(*milnor).algebra;
}

QMat AlgebraFile::gram_or_identity() const { return gram ? *gram : QMat::identity(dim); }

AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile out;
  bool have_dim = false;
  std::vector<std::string> lines;
  {
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
  }

  size_t pos = 0;
  while (pos < lines.size()) {
    int lineno = static_cast<int>(pos) + 1;
    std::vector<std::string> tokens = tokenize(lines[pos]);
    ++pos;
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];

    if (directive == "dim") {
      if (have_dim) throw ParseError(lineno, "duplicate dim directive");
      if (tokens.size() != 2) throw ParseError(lineno, "usage: dim <n>");
      out.dim = parse_int_or_throw(tokens[1], lineno);
      if (out.dim < 1) throw ParseError(lineno, "dimension must be at least 1");
      have_dim = true;
      continue;
    }
    if (!have_dim) throw ParseError(lineno, "dim must be declared before '" + directive + "'");

    if (directive == "milnor") {
      if (out.milnor) throw ParseError(lineno, "duplicate milnor directive");
      if (out.brackets)
        throw ParseError(lineno, "milnor and bracket sections are mutually exclusive");
      if (static_cast<int>(tokens.size()) != out.dim + 1)
        throw ParseError(lineno, "milnor needs exactly " + std::to_string(out.dim) + " constants");
      MilnorData d;
      for (int i = 0; i < out.dim; ++i)
        d.lambda.push_back(parse_rational_or_throw(tokens[1 + i], lineno));
      out.milnor = std::move(d);
      continue;
    }

    if (directive == "sigma") {
      if (!out.milnor) throw ParseError(lineno, "sigma requires a preceding milnor directive");
      if (out.milnor->sigma) throw ParseError(lineno, "duplicate sigma directive");
      if (static_cast<int>(tokens.size()) != out.dim + 1)
        throw ParseError(lineno, "sigma needs exactly " + std::to_string(out.dim) + " images");
      std::vector<int> sigma(out.dim);
      std::vector<bool> seen(out.dim, false);
      for (int i = 0; i < out.dim; ++i) {
        int image = parse_int_or_throw(tokens[1 + i], lineno);
        if (image < 1 || image > out.dim)
          throw ParseError(lineno, "sigma image out of range: " + std::to_string(image));
        if (seen[image - 1])
          throw ParseError(lineno, "sigma is not a permutation: image " + std::to_string(image) +
                                       " repeats");
        seen[image - 1] = true;
        sigma[i] = image - 1;
      }
      out.milnor->sigma = std::move(sigma);
      continue;
    }

    if (directive == "bracket") {
      if (out.milnor)
        throw ParseError(lineno, "milnor and bracket sections are mutually exclusive");
      if (tokens.size() != 5) throw ParseError(lineno, "usage: bracket <i> <j> <k> <p/q>");
      int i = parse_int_or_throw(tokens[1], lineno);
      int j = parse_int_or_throw(tokens[2], lineno);
      int k = parse_int_or_throw(tokens[3], lineno);
      if (i < 1 || i > out.dim || j < 1 || j > out.dim || k < 1 || k > out.dim)
        throw ParseError(lineno, "bracket index out of range");
      if (i >= j) throw ParseError(lineno, "bracket requires i < j");
      Rational value = parse_rational_or_throw(tokens[4], lineno);
      if (!out.brackets) out.brackets = LieAlgebra(out.dim);
      out.brackets->add_structure(i - 1, j - 1, k - 1, value);
      continue;
    }

    if (directive == "metric") {
      if (out.gram) throw ParseError(lineno, "duplicate metric directive");
      if (tokens.size() != 1) throw ParseError(lineno, "metric takes no arguments on its line");
      QMat gram(out.dim, out.dim);
      int rows_read = 0;
      while (rows_read < out.dim) {
        if (pos >= lines.size())
          throw ParseError(lineno, "metric needs " + std::to_string(out.dim) +
                                       " rows, file ended after " + std::to_string(rows_read));
        int row_lineno = static_cast<int>(pos) + 1;
        std::vector<std::string> row = tokenize(lines[pos]);
        ++pos;
        if (row.empty()) continue;
        if (static_cast<int>(row.size()) != out.dim)
          throw ParseError(row_lineno, "metric row needs exactly " + std::to_string(out.dim) +
                                           " entries");
        for (int c = 0; c < out.dim; ++c)
          gram(rows_read, c) = parse_rational_or_throw(row[c], row_lineno);
        ++rows_read;
      }
      if (!gram.is_symmetric()) throw ParseError(lineno, "metric must be symmetric");
      out.gram = std::move(gram);
      continue;
    }

    throw ParseError(lineno, "unknown directive '" + directive + "'");
  }

  if (!have_dim) throw ParseError(0, "file declares no dimension (missing dim directive)");
  if (!out.milnor && !out.brackets)
    throw ParseError(0, "file declares no algebra (need a milnor or bracket section)");
  if (out.milnor && out.dim < 3)
    throw ParseError(0, "milnor data needs dimension at least 3");
  if (out.gram && !is_positive_definite(*out.gram))
    out.warnings.push_back("metric is not positive definite");
  return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream content;
  content << in.rdbuf();
  return parse_algebra_file(content.str());
}

}  // namespace milnor
