#pragma once

// Line-oriented algebra files:
//
//   # comment               (also after any directive, to end of line)
//   dim <n>
//   milnor <l1> ... <ln>    (rationals p, -p, or p/q with q > 0)
//   sigma <i1> ... <in>     (optional image list, 1-based; default full cycle)
//   bracket <i> <j> <k> <p/q>   (c^k_{ij} += p/q; requires i < j; 1-based)
//   metric                  (followed by n lines of n rational entries)
//
// `dim` must come first and exactly one of the milnor / bracket sections must
// be present. The metric must be symmetric (hard error); an indefinite one
// only produces a warning here — commands that need a metric reject it then.
// File indices are 1-based; everything stored here is 0-based.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/lie_algebra.hpp"
#include "milnor/linalg.hpp"
#include "milnor/milnor_frame.hpp"

namespace milnor {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct AlgebraFile {
  int dim = 0;
  std::optional<MilnorData> milnor;     // lambda + optional sigma, 0-based
  std::optional<LieAlgebra> brackets;   // accumulated bracket lines, 0-based
  std::optional<QMat> gram;             // metric section if present
  std::vector<std::string> warnings;    // e.g. metric not positive definite

  // The declared algebra: cyclic/general Milnor build or the bracket tensor.
  // Building a general-sigma Milnor file can throw (transpositions).
  LieAlgebra build() const;

  // The metric section, or the identity when absent.
  QMat gram_or_identity() const;
};

// Throws ParseError with a 1-based line number on malformed input.
AlgebraFile parse_algebra_file(const std::string& text);

// Convenience: read the file at path (throws std::runtime_error when
// unreadable) and parse it.
AlgebraFile load_algebra_file(const std::string& path);

}  // namespace milnor
