#include "milnor/frame_existence.hpp"

#include <cmath>
#include <stdexcept>

#include "milnor/metric.hpp"

namespace milnor {

namespace {

QVec euclidean_cross(const QVec& x, const QVec& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

double pair_d(const DMat& gram, const DVec& x, const DVec& y) {
  double s = 0;
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j) s += x[i] * gram(i, j) * y[j];
  return s;
}

double det3(const std::vector<DVec>& cols) {
  return cols[0][0] * (cols[1][1] * cols[2][2] - cols[1][2] * cols[2][1]) -
         cols[1][0] * (cols[0][1] * cols[2][2] - cols[0][2] * cols[2][1]) +
         cols[2][0] * (cols[0][1] * cols[1][2] - cols[0][2] * cols[1][1]);
}

}  // namespace

QVec cross_product(const InnerProduct& g, const QVec& x, const QVec& y, int orientation) {
  if (g.dim() != 3) throw std::invalid_argument("cross_product: requires dimension 3");
  if (x.size() != 3 || y.size() != 3)
    throw std::invalid_argument("cross_product: operand size mismatch");
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("cross_product: orientation must be +1 or -1");
  Rational d = det(g.gram());
  auto s = exact_sqrt(d);
  if (!s)
    throw std::domain_error(
        "cross_product: det(gram) has no rational square root, the product is irrational");
  auto ginv = inverse(g.gram());
  if (!ginv) throw std::domain_error("cross_product: gram is singular");
  QVec w = ginv->apply(euclidean_cross(x, y));
  Rational factor = *s * orientation;
  return factor * w;
}

DMat LOperator::as_double() const {
  DMat m = to_double(scaled);
  double s = std::sqrt(to_double(gram_det));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) /= s;
  return m;
}

LOperator l_operator(const MetricLieAlgebra& m, int orientation) {
  if (m.algebra.dim() != 3) throw std::invalid_argument("l_operator: requires dimension 3");
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("l_operator: orientation must be +1 or -1");
  const LieAlgebra& g = m.algebra;
  // C's column k holds [X_i, X_j] for (i, j, k) a cyclic permutation of (0,1,2).
  QMat c(3, 3);
  const int cyclic[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (int k = 0; k < 3; ++k) {
    QVec br = g.bracket(unit_vec<Rational>(3, cyclic[k][0]), unit_vec<Rational>(3, cyclic[k][1]));
    for (int r = 0; r < 3; ++r) c(r, k) = br[r];
  }
  LOperator op;
  op.orientation = orientation;
  op.gram_det = det(m.metric.gram());
  op.scaled = (c * m.metric.gram()) * Rational(orientation);
  op.self_adjoint = (m.metric.gram() * op.scaled).is_symmetric();
  if (auto s = exact_sqrt(op.gram_det)) op.exact = op.scaled * (Rational(1) / *s);
  return op;
}

MilnorFrame3 milnor_frame_3d(const MetricLieAlgebra& m, double tol) {
  if (m.algebra.dim() != 3) throw std::invalid_argument("milnor_frame_3d: requires dimension 3");
  if (!is_unimodular(m.algebra))
    throw std::domain_error("milnor_frame_3d: algebra is not unimodular");
  LOperator op = l_operator(m);
  DMat l = op.as_double();
  DMat gram = to_double(m.metric.gram());

  // Orthonormal coordinate frame U; in it L is symmetric (self-adjointness
  // w.r.t. g), so U^T G L U can be fed to the symmetric eigensolver.
  std::vector<QVec> ortho = flag_adapted_basis(m.metric, {});
  std::vector<DVec> u;
  for (const QVec& v : ortho) {
    DVec w = to_double(v);
    double norm = std::sqrt(pair_d(gram, w, w));
    for (double& x : w) x /= norm;
    u.push_back(std::move(w));
  }
  DMat l_on(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      DVec lu(3, 0.0);
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) lu[r] += l(r, s) * u[j][s];
      l_on(i, j) = pair_d(gram, u[i], lu);
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double avg = (l_on(i, j) + l_on(j, i)) / 2;
      l_on(i, j) = avg;
      l_on(j, i) = avg;
    }
  SymmetricEigen eig = eigen_symmetric(l_on);

  MilnorFrame3 out;
  out.frame.assign(3, DVec(3, 0.0));
  for (int j = 0; j < 3; ++j)
    for (int r = 0; r < 3; ++r)
      for (int i = 0; i < 3; ++i) out.frame[j][r] += u[i][r] * eig.vectors(i, j);
  if (det3(out.frame) < 0)
    for (double& x : out.frame[2]) x = -x;
  for (int j = 0; j < 3; ++j) out.lambda[j] = eig.values[j];

  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double expect = i == j ? 1.0 : 0.0;
      out.residual =
          std::max(out.residual, std::abs(pair_d(gram, out.frame[i], out.frame[j]) - expect));
    }
  const int cyclic[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& t : cyclic) {
    DVec br = bracket_f(m.algebra, out.frame[t[0]], out.frame[t[1]]);
    for (int r = 0; r < 3; ++r)
      out.residual = std::max(out.residual, std::abs(br[r] - out.lambda[t[2]] * out.frame[t[2]][r]));
  }
  (void)tol;
  return out;
}

namespace {

// Validates the declared-Milnor-basis filiform shape and returns the
// unnormalized flag-adapted vectors for g^2 c [g,g] c centralizer([g,g]) c g.
std::vector<QVec> h4_flag_vectors(const MetricLieAlgebra& m) {
  const LieAlgebra& g = m.algebra;
  if (g.dim() != 4)
    throw std::domain_error("h4 frame test: requires dimension 4");
  const auto& entries = g.entries();
  bool shape = entries.size() == 2 && entries.count({0, 1, 2}) == 1 && entries.count({1, 2, 3}) == 1;
  if (!shape)
    throw std::domain_error(
        "h4 frame test: declared basis is not a Milnor basis of the filiform algebra "
        "(expected exactly [X1,X2] = l3 X3, [X2,X3] = l4 X4)");
  LowerCentralSeries lcs = lower_central_series(g);
  QMat derived = lcs.terms[1];
  QMat second = lcs.terms[2];
  QMat cz = centralizer(g, derived);
  return flag_adapted_basis(m.metric, {second, derived, cz});
}

}  // namespace

Rational h4_obstruction(const MetricLieAlgebra& m) {
  std::vector<QVec> v = h4_flag_vectors(m);
  return m.metric.pair(m.algebra.bracket(v[2], v[3]), v[0]);
}

bool h4_has_orthonormal_milnor(const MetricLieAlgebra& m) { return h4_obstruction(m) == 0; }

namespace {

struct H4CanonicalFrame {
  std::vector<DVec> f;  // sign-fixed orthonormal F_1..F_4 (0-based f[0..3])
  double a = 0, b = 0, c = 0;
};

H4CanonicalFrame h4_canonical_frame(const MetricLieAlgebra& m) {
  std::vector<QVec> v = h4_flag_vectors(m);
  DMat gram = to_double(m.metric.gram());
  H4CanonicalFrame out;
  for (const QVec& q : v) {
    DVec w = to_double(q);
    double norm = std::sqrt(pair_d(gram, w, w));
    for (double& x : w) x /= norm;
    out.f.push_back(std::move(w));
  }
  double a_raw = pair_d(gram, bracket_f(m.algebra, out.f[1], out.f[3]), out.f[0]);
  double b_raw = pair_d(gram, bracket_f(m.algebra, out.f[2], out.f[3]), out.f[0]);
  double c_raw = pair_d(gram, bracket_f(m.algebra, out.f[2], out.f[3]), out.f[1]);
  double s2 = c_raw < 0 ? -1.0 : 1.0;
  double s1 = s2 * (a_raw < 0 ? -1.0 : 1.0);
  for (double& x : out.f[0]) x *= s1;
  for (double& x : out.f[1]) x *= s2;
  out.a = std::abs(a_raw);
  out.b = s1 * b_raw;
  if (out.b == 0) out.b = 0;  // avoid the float -0.0 in reports
  out.c = std::abs(c_raw);
  return out;
}

}  // namespace

H4Constants h4_canonical_constants(const MetricLieAlgebra& m) {
  H4CanonicalFrame fr = h4_canonical_frame(m);
  return {fr.a, fr.b, fr.c};
}

H4Frame h4_milnor_frame(const MetricLieAlgebra& m, double tol) {
  if (h4_obstruction(m) != 0)
    throw std::domain_error("h4_milnor_frame: obstruction is nonzero, no orthonormal Milnor frame");
  H4CanonicalFrame fr = h4_canonical_frame(m);
  DMat gram = to_double(m.metric.gram());
  H4Frame out;
  out.frame = {fr.f[2], fr.f[3], fr.f[1], fr.f[0]};
  for (double& x : out.frame[3]) x = -x;  // Y_4 = -F_1
  out.lambda3 = pair_d(gram, bracket_f(m.algebra, out.frame[0], out.frame[1]), out.frame[2]);
  out.lambda4 = pair_d(gram, bracket_f(m.algebra, out.frame[1], out.frame[2]), out.frame[3]);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      double expect = i == j ? 1.0 : 0.0;
      out.residual =
          std::max(out.residual, std::abs(pair_d(gram, out.frame[i], out.frame[j]) - expect));
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      DVec br = bracket_f(m.algebra, out.frame[i], out.frame[j]);
      DVec expect(4, 0.0);
      if (i == 0 && j == 1)
        for (int r = 0; r < 4; ++r) expect[r] = out.lambda3 * out.frame[2][r];
      if (i == 1 && j == 2)
        for (int r = 0; r < 4; ++r) expect[r] = out.lambda4 * out.frame[3][r];
      for (int r = 0; r < 4; ++r)
        out.residual = std::max(out.residual, std::abs(br[r] - expect[r]));
    }
  (void)tol;
  return out;
}

H3H3Obstruction h3h3_obstruction(const MetricLieAlgebra& m) {
  const LieAlgebra& g = m.algebra;
  if (g.dim() != 6) throw std::domain_error("h3h3_obstruction: requires dimension 6");
  const auto& entries = g.entries();
  if (entries.size() != 2)
    throw std::domain_error("h3h3_obstruction: declared basis is not a Milnor basis of h3 + h3");
  std::vector<std::array<int, 3>> triples;
  for (const auto& [key, value] : entries) {
    (void)value;
    if (key[2] == key[0] || key[2] == key[1])
      throw std::domain_error("h3h3_obstruction: bracket image inside its own plane, not h3 + h3");
    triples.push_back(key);
  }
  std::vector<bool> seen(6, false);
  for (const auto& t : triples)
    for (int idx : t) {
      if (seen[idx])
        throw std::domain_error("h3h3_obstruction: the two blocks overlap, not h3 + h3");
      seen[idx] = true;
    }
  // Two disjoint triples cover all six directions; order blocks by smallest index.
  auto min_of = [](const std::array<int, 3>& t) { return std::min({t[0], t[1], t[2]}); };
  if (min_of(triples[0]) > min_of(triples[1])) std::swap(triples[0], triples[1]);
  H3H3Obstruction out;
  out.value = m.metric.gram()(triples[0][2], triples[1][2]);
  out.obstructed = out.value != 0;
  return out;
}

Counterexample counterexample_metric(CounterexampleKind kind, const Rational& eps) {
  if (eps == 0)
    throw std::domain_error("counterexample_metric: epsilon must be nonzero");
  Counterexample out;
  if (kind == CounterexampleKind::h3h3) {
    out.data.lambda = {0, 0, 1, 0, 0, 1};
    out.gram = QMat::identity(6);
    out.gram(2, 5) = eps;
    out.gram(5, 2) = eps;
    if (!is_positive_definite(out.gram))
      throw std::domain_error("counterexample_metric: perturbed matrix is not positive definite");
    H3H3Obstruction check =
        h3h3_obstruction(MetricLieAlgebra(build_cyclic(out.data), InnerProduct(out.gram)));
    if (!check.obstructed)
      throw std::logic_error("counterexample_metric: h3h3 coupling failed to obstruct");
    out.obstruction = check.value;
    return out;
  }
  out.data.lambda = {0, 0, 1, 1};
  LieAlgebra g = build_cyclic(out.data);
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) {
      QMat gram = QMat::identity(4);
      gram(p, q) = eps;
      gram(q, p) = eps;
      if (!is_positive_definite(gram)) continue;
      Rational b = h4_obstruction(MetricLieAlgebra(g, InnerProduct(gram)));
      if (b != 0) {
        out.gram = gram;
        out.obstruction = b;
        return out;
      }
    }
  // No admissible perturbation: the only way every candidate failed is a
  // non-positive-definite |eps| >= 1.
  throw std::domain_error("counterexample_metric: perturbed matrix is not positive definite");
}

}  // namespace milnor
