#pragma once

// Dense vectors and matrices over an arbitrary scalar, plus the exact
// rational algorithms (RREF, rank, solve, nullspace, inverse, determinant,
// characteristic polynomial, symmetric signature, positive definiteness) and
// the few floating-point routines the approximate paths need.
//
// Rational subspaces are represented by their reduced-row-echelon basis with
// zero rows dropped; that basis is a canonical form, so two subspaces are
// equal iff their basis matrices are equal entrywise.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "milnor/rational.hpp"

namespace milnor {

template <class S>
using Vec = std::vector<S>;

template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimensions");
  }
  Mat(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("Mat: ragged rows");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat&) const = default;

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& aik = (*this)(i, k);
        if (aik == S(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }
  Mat operator*(const S& s) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
  }
  Mat operator-() const { return *this * S(-1); }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Vec<S> apply(const Vec<S>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Mat: apply size mismatch");
    Vec<S> y(rows_, S(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != S(0)) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  Vec<S> row(int i) const {
    Vec<S> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec<S> col(int j) const {
    Vec<S> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  S trace() const {
    S t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> a_;
};

template <class S>
Vec<S> operator+(const Vec<S>& x, const Vec<S>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("Vec: size mismatch");
  Vec<S> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

template <class S>
Vec<S> operator-(const Vec<S>& x, const Vec<S>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("Vec: size mismatch");
  Vec<S> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

template <class S>
Vec<S> operator*(const S& s, const Vec<S>& x) {
  Vec<S> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
  return r;
}

template <class S>
Mat<S> operator*(const S& s, const Mat<S>& m) {
  return m * s;
}

template <class S>
bool is_zero(const Vec<S>& x) {
  for (const auto& v : x)
    if (v != S(0)) return false;
  return true;
}

template <class S>
Vec<S> unit_vec(int n, int i) {
  Vec<S> e(n, S(0));
  e[i] = S(1);
  return e;
}

using QMat = Mat<Rational>;
using QVec = Vec<Rational>;
using DMat = Mat<double>;
using DVec = Vec<double>;

// ---- exact rational algorithms ----

// Reduced row echelon form (pivots 1, pivot columns cleared), zero rows kept.
QMat rref(QMat m);

int rank(const QMat& m);

// Canonical subspace basis: RREF of the given spanning rows, zero rows dropped.
QMat row_space(const QMat& spanning_rows);

// True iff v lies in the row space of the canonical basis `space`.
bool space_contains(const QMat& space, const QVec& v);

// Canonical basis of { x : m x = 0 }, one row per free column (ordered by
// free-column index). Rows of the result are the basis vectors.
QMat nullspace(const QMat& m);

// One solution of m x = b with all free variables set to zero; nullopt when
// the system is inconsistent.
std::optional<QVec> solve(const QMat& m, const QVec& b);

std::optional<QMat> inverse(const QMat& m);

Rational det(const QMat& m);

// Coefficients c[0..n] of det(xI - m) = sum c[k] x^k (monic, c[n] = 1).
QVec char_poly(const QMat& m);

struct Signature {
  int negative = 0;
  int zero = 0;
  int positive = 0;
  bool operator==(const Signature&) const = default;
};

// Eigenvalue sign counts of a symmetric rational matrix, decided exactly via
// the characteristic polynomial (all roots real, so Descartes' rule is exact).
Signature signature_symmetric(const QMat& m);

// Exact positive-definiteness of a symmetric rational matrix via leading
// principal minors.
bool is_positive_definite(const QMat& m);

// ---- floating-point helpers ----

DMat to_double(const QMat& m);
DVec to_double(const QVec& v);

struct SymmetricEigen {
  DVec values;   // ascending
  DMat vectors;  // columns are the corresponding orthonormal eigenvectors
};

// Cyclic Jacobi rotations; residual of off-diagonal mass driven below 1e-14
// times the matrix scale.
SymmetricEigen eigen_symmetric(DMat m);

// Sign counts with |value| <= tol counted as zero.
Signature signature_symmetric(const DMat& m, double tol);

// Least-squares solution of m x ~ b via normal equations; returns the
// minimizer (smallest residual; any minimizer if rank-deficient).
DVec least_squares(const DMat& m, const DVec& b);

}  // namespace milnor
