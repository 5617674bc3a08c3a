#pragma once

// Finite-dimensional Lie algebras over Q, given by structure constants on a
// declared basis X_0, ..., X_{n-1}. The structure tensor is stored sparsely:
// one entry (i, j, k) -> c^k_{ij} per nonzero constant with i < j; reads with
// i > j return the negated value, so antisymmetry holds by construction.
// All operations are exact; nothing here touches floating point.
//
// Basis indices are 0-based throughout the library (the CLI file format is
// 1-based and converts at the boundary).

#include <array>
#include <map>
#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/rational.hpp"

namespace milnor {

class LieAlgebra {
 public:
  explicit LieAlgebra(int dim);

  int dim() const { return dim_; }

  // c^k_{ij} for arbitrary i, j (antisymmetric read; zero when i == j).
  Rational structure(int i, int j, int k) const;

  // Both require i < j; zero results are erased so the sparse form is
  // canonical and equality is entrywise.
  void set_structure(int i, int j, int k, const Rational& value);
  void add_structure(int i, int j, int k, const Rational& value);

  // Stored nonzero entries, keyed by (i, j, k) with i < j.
  const std::map<std::array<int, 3>, Rational>& entries() const { return c_; }

  QVec bracket(const QVec& x, const QVec& y) const;

  // Matrix of ad_{X_i} : x -> [X_i, x] in the declared basis.
  QMat ad(int i) const;

  bool operator==(const LieAlgebra&) const = default;

 private:
  void check_index(int i) const;

  int dim_ = 0;
  std::map<std::array<int, 3>, Rational> c_;
};

struct JacobiDefect {
  int i, j, k;  // i < j < k
  QVec defect;  // [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]]
};

// All triples i < j < k with a nonzero Jacobi defect; empty iff the structure
// tensor defines a Lie algebra.
std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g);

// tr(ad_{X_i}) = 0 for every i. Meaningful when jacobi_defect is empty.
bool is_unimodular(const LieAlgebra& g);

// B_{ij} = tr(ad_{X_i} ad_{X_j}); symmetric.
QMat killing_form(const LieAlgebra& g);

struct LowerCentralSeries {
  // dim g^0, dim g^1, ... while strictly decreasing; the last entry is the
  // stabilized dimension (0 exactly when nilpotent).
  std::vector<int> dims;
  // Canonical bases of the terms, aligned with dims.
  std::vector<QMat> terms;
  bool nilpotent = false;
  // Smallest m with g^m = 0; meaningful only when nilpotent.
  int step = -1;
};

LowerCentralSeries lower_central_series(const LieAlgebra& g);

// Canonical bases (rows) of the named subspaces.
QMat derived_subalgebra(const LieAlgebra& g);
QMat center(const LieAlgebra& g);

// { x : [x, s] = 0 for all s in the span of the rows of s }.
QMat centralizer(const LieAlgebra& g, const QMat& s);

// [g, S] <= S for the span S of the rows of s.
bool is_ideal(const LieAlgebra& g, const QMat& s);

// Block-diagonal structure tensor on the concatenated bases.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// Structure tensor in the basis Y_j whose old-basis coordinates are the
// columns of t; throws when t is singular.
LieAlgebra change_of_basis(const LieAlgebra& g, const QMat& t);

}  // namespace milnor
