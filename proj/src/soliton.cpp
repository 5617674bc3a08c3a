#include "milnor/soliton.hpp"

#include <cmath>
#include <stdexcept>

namespace milnor {

namespace {

QVec vec_mat(const QMat& m) {
  QVec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

QMat unvec_mat(const QVec& v, int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

}  // namespace

bool is_derivation(const LieAlgebra& g, const QMat& d) {
  int n = g.dim();
  if (d.rows() != n || d.cols() != n)
    throw std::invalid_argument("is_derivation: matrix size does not match the algebra");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec lhs = d.apply(g.bracket(unit_vec<Rational>(n, i), unit_vec<Rational>(n, j)));
      QVec rhs = g.bracket(d.col(i), unit_vec<Rational>(n, j)) +
                 g.bracket(unit_vec<Rational>(n, i), d.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<QMat> derivation_space(const LieAlgebra& g) {
  int n = g.dim();
  // Variables: the n^2 entries D_rc, row-major. One equation per (i<j, k):
  //   sum_m c^m_ij D_km - sum_m D_mi c^k_mj - sum_m D_mj c^k_im = 0.
  int pairs = n * (n - 1) / 2;
  QMat a(pairs * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k, ++row)
        for (int m = 0; m < n; ++m) {
          a(row, k * n + m) += g.structure(i, j, m);
          a(row, m * n + i) -= g.structure(m, j, k);
          a(row, m * n + j) -= g.structure(i, m, k);
        }
  QMat kernel = nullspace(a);
  std::vector<QMat> basis;
  basis.reserve(kernel.rows());
  for (int r = 0; r < kernel.rows(); ++r) basis.push_back(unvec_mat(kernel.row(r), n));
  return basis;
}

SolitonCertificate nilsoliton_solve(const QMat& ricci, const LieAlgebra& g) {
  int n = g.dim();
  if (ricci.rows() != n || ricci.cols() != n)
    throw std::invalid_argument("nilsoliton_solve: Ricci size does not match the algebra");
  if (!ricci.is_symmetric())
    throw std::invalid_argument("nilsoliton_solve: Ricci matrix must be symmetric");
  std::vector<QMat> der = derivation_space(g);
  int cols = 1 + static_cast<int>(der.size());
  QMat a(n * n, cols);
  {
    QVec id = vec_mat(QMat::identity(n));
    for (int r = 0; r < n * n; ++r) a(r, 0) = id[r];
  }
  for (size_t m = 0; m < der.size(); ++m) {
    QVec col = vec_mat(der[m]);
    for (int r = 0; r < n * n; ++r) a(r, 1 + static_cast<int>(m)) = col[r];
  }
  QVec rhs = vec_mat(ricci);

  SolitonCertificate cert;
  if (auto x0 = solve(a, rhs)) {
    // Minimal-norm representative: project the particular solution onto the
    // orthogonal complement of the solution space's direction space.
    QVec x = *x0;
    QMat null = nullspace(a);
    if (null.rows() > 0) {
      QMat gram = null * null.transpose();
      QVec nx = null.apply(x);
      auto y = solve(gram, nx);
      if (!y) throw std::logic_error("nilsoliton_solve: kernel gram must be invertible");
      QVec corr = null.transpose().apply(*y);
      x = x - corr;
    }
    cert.is_soliton = true;
    cert.c = x[0];
    cert.d = QMat(n, n);
    for (size_t m = 0; m < der.size(); ++m) cert.d = cert.d + x[1 + m] * der[m];
    cert.residual = 0;
    return cert;
  }

  // Inconsistent system: report the exact least-squares best fit. The columns
  // are independent here (the identity is a derivation only of abelian
  // algebras, whose system is always consistent), so the normal equations
  // have a unique solution.
  QMat at = a.transpose();
  auto x = solve(at * a, at.apply(rhs));
  if (!x) throw std::logic_error("nilsoliton_solve: normal equations must be consistent");
  cert.is_soliton = false;
  cert.c = (*x)[0];
  cert.d = QMat(n, n);
  for (size_t m = 0; m < der.size(); ++m) cert.d = cert.d + (*x)[1 + m] * der[m];
  QVec res = rhs - a.apply(*x);
  for (const Rational& v : res) {
    Rational av = v < 0 ? Rational(-v) : v;
    if (av > cert.residual) cert.residual = av;
  }
  return cert;
}

SolitonCertificateF nilsoliton_solve(const DMat& ricci, const LieAlgebra& g, double tol) {
  int n = g.dim();
  if (ricci.rows() != n || ricci.cols() != n)
    throw std::invalid_argument("nilsoliton_solve: Ricci size does not match the algebra");
  std::vector<QMat> der = derivation_space(g);
  int cols = 1 + static_cast<int>(der.size());
  DMat a(n * n, cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i * n + j, 0) = i == j ? 1.0 : 0.0;
  for (size_t m = 0; m < der.size(); ++m) {
    DMat dm = to_double(der[m]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i * n + j, 1 + static_cast<int>(m)) = dm(i, j);
  }
  DVec rhs(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rhs[i * n + j] = ricci(i, j);

  DVec x = least_squares(a, rhs);
  SolitonCertificateF cert;
  cert.c = x[0];
  cert.d = DMat(n, n);
  for (size_t m = 0; m < der.size(); ++m) {
    DMat dm = to_double(der[m]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cert.d(i, j) += x[1 + m] * dm(i, j);
  }
  for (int r = 0; r < n * n; ++r) {
    double ax = 0;
    for (int c = 0; c < cols; ++c) ax += a(r, c) * x[c];
    cert.residual = std::max(cert.residual, std::abs(rhs[r] - ax));
  }
  cert.is_soliton = cert.residual <= tol;
  return cert;
}

bool milnor_soliton_criterion(const MilnorData& d, const InnerProduct& metric) {
  int n = d.n();
  if (metric.dim() != n)
    throw std::invalid_argument("milnor_soliton_criterion: metric dimension mismatch");
  const QMat& gram = metric.gram();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gram(i, j) != 0)
        throw std::invalid_argument("milnor_soliton_criterion: requires a diagonal metric");
  for (int i = 0; i < n; ++i)
    if (gram(i, i) <= 0)
      throw std::invalid_argument("milnor_soliton_criterion: diagonal entries must be positive");

  DecomposeResult split = decompose(d);
  if (split.three_dim_general)
    throw std::domain_error(
        "milnor_soliton_criterion: 3-dim data with several nonzero constants has no block "
        "decomposition");
  for (const Summand& s : split.decomposition.summands) {
    if (s.kind != SummandKind::h4) continue;
    // Block (i, i+1, i+2, i+3): in the orthonormal frame X_k / sqrt(g_kk) the
    // two constants become lambda_{i+2} sqrt(g_{i+2} / (g_i g_{i+1})) and
    // lambda_{i+3} sqrt(g_{i+3} / (g_{i+1} g_{i+2})); equality of their
    // squares is the rational condition below.
    const Rational& l2 = d.lambda[s.indices[2]];
    const Rational& l3 = d.lambda[s.indices[3]];
    const Rational& g0 = gram(s.indices[0], s.indices[0]);
    const Rational& g2 = gram(s.indices[2], s.indices[2]);
    const Rational& g3 = gram(s.indices[3], s.indices[3]);
    if (l2 * l2 * g2 * g2 != l3 * l3 * g3 * g0) return false;
  }
  return true;
}

}  // namespace milnor
