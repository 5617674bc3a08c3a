#include "milnor/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace milnor {

QMat rref(QMat m) {
  int lead = 0;
  for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
    int pivot_row = -1;
    while (lead < m.cols()) {
      for (int i = r; i < m.rows(); ++i) {
        if (m(i, lead) != 0) {
          pivot_row = i;
          break;
        }
      }
      if (pivot_row >= 0) break;
      ++lead;
    }
    if (pivot_row < 0) break;
    if (pivot_row != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    Rational inv = Rational(1) / m(r, lead);
    for (int j = lead; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, lead) == 0) continue;
      Rational f = m(i, lead);
      for (int j = lead; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++lead;
  }
  return m;
}

namespace {

// Pivot column of each nonzero row in an RREF matrix.
std::vector<int> pivot_columns(const QMat& r) {
  std::vector<int> pivots;
  for (int i = 0; i < r.rows(); ++i) {
    int j = 0;
    while (j < r.cols() && r(i, j) == 0) ++j;
    if (j == r.cols()) break;
    pivots.push_back(j);
  }
  return pivots;
}

}  // namespace

int rank(const QMat& m) { return static_cast<int>(pivot_columns(rref(m)).size()); }

QMat row_space(const QMat& spanning_rows) {
  QMat r = rref(spanning_rows);
  int nz = static_cast<int>(pivot_columns(r).size());
  QMat basis(nz, r.cols());
  for (int i = 0; i < nz; ++i)
    for (int j = 0; j < r.cols(); ++j) basis(i, j) = r(i, j);
  return basis;
}

bool space_contains(const QMat& space, const QVec& v) {
  if (static_cast<int>(v.size()) != space.cols())
    throw std::invalid_argument("space_contains: dimension mismatch");
  QVec w = v;
  auto pivots = pivot_columns(space);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
    Rational f = w[pivots[i]];
    if (f == 0) continue;
    for (int j = 0; j < space.cols(); ++j) w[j] -= f * space(i, j);
  }
  return is_zero(w);
}

QMat nullspace(const QMat& m) {
  QMat r = rref(m);
  auto pivots = pivot_columns(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  QMat basis(static_cast<int>(free_cols.size()), m.cols());
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int f = free_cols[k];
    basis(k, f) = 1;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) basis(k, pivots[i]) = -r(i, f);
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: size mismatch");
  QMat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  QMat r = rref(aug);
  auto pivots = pivot_columns(r);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
  QVec x(m.cols(), Rational(0));
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) x[pivots[i]] = r(i, m.cols());
  return x;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  int n = m.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  QMat r = rref(aug);
  for (int i = 0; i < n; ++i)
    if (r(i, i) != 1) return std::nullopt;
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Rational det(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  QMat a = m;
  int n = a.rows();
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
      d = -d;
    }
    d *= a(c, c);
    Rational inv = Rational(1) / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

QVec char_poly(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  int n = m.rows();
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1); M_{k+1} = A(M_k + c_{n-k} I).
  QVec coeff(n + 1, Rational(0));
  coeff[n] = 1;
  QMat mk = m;
  for (int k = 1; k <= n; ++k) {
    Rational c = -mk.trace() / k;
    coeff[n - k] = c;
    if (k < n) {
      for (int i = 0; i < n; ++i) mk(i, i) += c;
      mk = m * mk;
    }
  }
  return coeff;
}

Signature signature_symmetric(const QMat& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("signature_symmetric: matrix not symmetric");
  int n = m.rows();
  QVec p = char_poly(m);
  Signature sig;
  int low = 0;
  while (low <= n && p[low] == 0) ++low;
  sig.zero = low;  // multiplicity of the eigenvalue 0
  // All roots are real, so Descartes' rule counts the positive ones exactly.
  int variations = 0;
  int prev = 0;
  for (int k = n; k >= low; --k) {
    int s = sign_of(p[k]);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  sig.positive = variations;
  sig.negative = n - sig.zero - sig.positive;
  return sig;
}

bool is_positive_definite(const QMat& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_positive_definite: matrix not symmetric");
  int n = m.rows();
  for (int k = 1; k <= n; ++k) {
    QMat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(i, j) = m(i, j);
    if (det(lead) <= 0) return false;
  }
  return true;
}

DMat to_double(const QMat& m) {
  DMat d(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d(i, j) = to_double(m(i, j));
  return d;
}

DVec to_double(const QVec& v) {
  DVec d(v.size());
  for (size_t i = 0; i < v.size(); ++i) d[i] = to_double(v[i]);
  return d;
}

SymmetricEigen eigen_symmetric(DMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen_symmetric: matrix not square");
  int n = m.rows();
  DMat v = DMat::identity(n);
  double scale = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));
  if (scale == 0) scale = 1;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off <= 1e-14 * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(m(p, q)) <= 1e-18 * scale) continue;
        double theta = (m(q, q) - m(p, p)) / (2 * m(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return m(a, a) < m(b, b); });
  SymmetricEigen res;
  res.values.resize(n);
  res.vectors = DMat(n, n);
  for (int j = 0; j < n; ++j) {
    res.values[j] = m(order[j], order[j]);
    for (int i = 0; i < n; ++i) res.vectors(i, j) = v(i, order[j]);
  }
  return res;
}

Signature signature_symmetric(const DMat& m, double tol) {
  SymmetricEigen e = eigen_symmetric(m);
  Signature sig;
  for (double x : e.values) {
    if (std::abs(x) <= tol)
      ++sig.zero;
    else if (x > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

DVec least_squares(const DMat& m, const DVec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("least_squares: size mismatch");
  int n = m.cols();
  DMat a(n, n);
  DVec rhs(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int k = 0; k < m.rows(); ++k) s += m(k, i) * m(k, j);
      a(i, j) = s;
    }
    double s = 0;
    for (int k = 0; k < m.rows(); ++k) s += m(k, i) * b[k];
    rhs[i] = s;
  }
  double scale = 0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
  if (scale == 0) scale = 1;
  // Gaussian elimination with partial pivoting; near-zero pivots (rank
  // deficiency) leave the corresponding variable at zero.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  DVec x(n, 0.0);
  std::vector<int> pivot_of_row;
  for (int c = 0, r = 0; c < n && r < n; ++c) {
    int best = -1;
    double best_abs = 1e-12 * scale;
    for (int i = r; i < n; ++i)
      if (std::abs(a(i, c)) > best_abs) {
        best = i;
        best_abs = std::abs(a(i, c));
      }
    if (best < 0) continue;
    if (best != r) {
      for (int j = 0; j < n; ++j) std::swap(a(r, j), a(best, j));
      std::swap(rhs[r], rhs[best]);
    }
    for (int i = r + 1; i < n; ++i) {
      double f = a(i, c) / a(r, c);
      if (f == 0) continue;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(r, j);
      rhs[i] -= f * rhs[r];
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  for (int r = static_cast<int>(pivot_of_row.size()) - 1; r >= 0; --r) {
    int c = pivot_of_row[r];
    double s = rhs[r];
    for (int j = c + 1; j < n; ++j) s -= a(r, j) * x[j];
    x[c] = s / a(r, c);
  }
  return x;
}

}  // namespace milnor
