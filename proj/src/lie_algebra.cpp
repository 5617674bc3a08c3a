#include "milnor/lie_algebra.hpp"

#include <stdexcept>

namespace milnor {

LieAlgebra::LieAlgebra(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("LieAlgebra: negative dimension");
}

void LieAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim_) throw std::out_of_range("LieAlgebra: basis index out of range");
}

Rational LieAlgebra::structure(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) return Rational(0);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = c_.find({i, j, k});
  if (it == c_.end()) return Rational(0);
  return flip ? -it->second : it->second;
}

void LieAlgebra::set_structure(int i, int j, int k, const Rational& value) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i >= j) throw std::invalid_argument("LieAlgebra: set_structure requires i < j");
  if (value == 0)
    c_.erase({i, j, k});
  else
    c_[{i, j, k}] = value;
}

void LieAlgebra::add_structure(int i, int j, int k, const Rational& value) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i >= j) throw std::invalid_argument("LieAlgebra: add_structure requires i < j");
  Rational next = structure(i, j, k) + value;
  set_structure(i, j, k, next);
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("LieAlgebra: bracket operand size mismatch");
  QVec out(dim_, Rational(0));
  for (const auto& [key, value] : c_) {
    auto [i, j, k] = key;
    Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff != 0) out[k] += coeff * value;
  }
  return out;
}

QMat LieAlgebra::ad(int i) const {
  check_index(i);
  QMat m(dim_, dim_);
  for (const auto& [key, value] : c_) {
    auto [a, b, k] = key;
    if (a == i)
      m(k, b) += value;  // [X_i, X_b]
    else if (b == i)
      m(k, a) -= value;  // [X_i, X_a] = -c^k_{a i}
  }
  return m;
}

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g) {
  int n = g.dim();
  std::vector<QMat> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(g.ad(i));
  std::vector<JacobiDefect> defects;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        QVec d = ads[i].apply(ads[j].col(k)) + ads[j].apply(ads[k].col(i)) +
                 ads[k].apply(ads[i].col(j));
        if (!is_zero(d)) defects.push_back({i, j, k, d});
      }
  return defects;
}

bool is_unimodular(const LieAlgebra& g) {
  for (int i = 0; i < g.dim(); ++i)
    if (g.ad(i).trace() != 0) return false;
  return true;
}

QMat killing_form(const LieAlgebra& g) {
  int n = g.dim();
  std::vector<QMat> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(g.ad(i));
  QMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational t = (ads[i] * ads[j]).trace();
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

namespace {

// Canonical basis of [g, S] for the span S of the rows of term.
QMat bracket_with_algebra(const LieAlgebra& g, const QMat& term) {
  int n = g.dim();
  QMat images(n * term.rows(), n);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    QMat adi = g.ad(i);
    for (int s = 0; s < term.rows(); ++s) {
      QVec img = adi.apply(term.row(s));
      for (int j = 0; j < n; ++j) images(r, j) = img[j];
      ++r;
    }
  }
  return row_space(images);
}

}  // namespace

LowerCentralSeries lower_central_series(const LieAlgebra& g) {
  LowerCentralSeries out;
  QMat term = QMat::identity(g.dim());
  out.terms.push_back(term);
  out.dims.push_back(g.dim());
  while (true) {
    QMat next = bracket_with_algebra(g, out.terms.back());
    if (next.rows() == out.dims.back()) break;  // stabilized (terms are nested)
    out.terms.push_back(next);
    out.dims.push_back(next.rows());
    if (next.rows() == 0) break;
  }
  out.nilpotent = out.dims.back() == 0;
  if (out.nilpotent) out.step = static_cast<int>(out.dims.size()) - 1;
  return out;
}

QMat derived_subalgebra(const LieAlgebra& g) {
  return bracket_with_algebra(g, QMat::identity(g.dim()));
}

QMat center(const LieAlgebra& g) { return centralizer(g, QMat::identity(g.dim())); }

QMat centralizer(const LieAlgebra& g, const QMat& s) {
  int n = g.dim();
  if (s.cols() != n) throw std::invalid_argument("centralizer: subspace dimension mismatch");
  // x is in the centralizer iff for every row s_r, sum_j x_j [X_j, s_r] = 0.
  QMat system(n * s.rows(), n);
  for (int r = 0; r < s.rows(); ++r) {
    QVec sr = s.row(r);
    for (int j = 0; j < n; ++j) {
      QVec img = g.ad(j).apply(sr);  // [X_j, s_r]
      for (int k = 0; k < n; ++k) system(r * n + k, j) = img[k];
    }
  }
  return row_space(nullspace(system));
}

bool is_ideal(const LieAlgebra& g, const QMat& s) {
  QMat basis = row_space(s);
  for (int i = 0; i < g.dim(); ++i) {
    QMat adi = g.ad(i);
    for (int r = 0; r < basis.rows(); ++r)
      if (!space_contains(basis, adi.apply(basis.row(r)))) return false;
  }
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra g(a.dim() + b.dim());
  for (const auto& [key, value] : a.entries()) g.set_structure(key[0], key[1], key[2], value);
  int off = a.dim();
  for (const auto& [key, value] : b.entries())
    g.set_structure(key[0] + off, key[1] + off, key[2] + off, value);
  return g;
}

LieAlgebra change_of_basis(const LieAlgebra& g, const QMat& t) {
  int n = g.dim();
  if (t.rows() != n || t.cols() != n)
    throw std::invalid_argument("change_of_basis: transform shape mismatch");
  auto tinv = inverse(t);
  if (!tinv) throw std::invalid_argument("change_of_basis: transform is singular");
  LieAlgebra out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec v = tinv->apply(g.bracket(t.col(i), t.col(j)));
      for (int k = 0; k < n; ++k)
        if (v[k] != 0) out.set_structure(i, j, k, v[k]);
    }
  return out;
}

}  // namespace milnor
