#include "milnor/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace milnor {

InnerProduct::InnerProduct(QMat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("InnerProduct: gram not square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("InnerProduct: gram not symmetric");
}

Rational InnerProduct::pair(const QVec& x, const QVec& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw std::invalid_argument("InnerProduct: vector size mismatch");
  Rational s(0);
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j)
      if (gram_(i, j) != 0 && y[j] != 0) s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra_in, InnerProduct metric_in)
    : algebra(std::move(algebra_in)), metric(std::move(metric_in)) {
  if (algebra.dim() != metric.dim())
    throw std::invalid_argument("MetricLieAlgebra: algebra and metric dimensions differ");
  if (!metric.is_positive_definite())
    throw std::domain_error("MetricLieAlgebra: metric is not positive definite");
}

std::vector<QVec> flag_adapted_basis(const InnerProduct& g, const std::vector<QMat>& flag) {
  int n = g.dim();
  std::vector<QVec> out;
  QMat covered(0, n);  // canonical basis of the span of the vectors so far

  auto orthogonalize_and_push = [&](QVec v) {
    for (const QVec& u : out) {
      Rational coeff = g.pair(v, u) / g.pair(u, u);
      if (coeff != 0) v = v - coeff * u;
    }
    out.push_back(std::move(v));
  };

  int prev_dim = 0;
  for (const QMat& step : flag) {
    if (step.cols() != n) throw std::invalid_argument("flag_adapted_basis: flag dimension mismatch");
    if (step.rows() < prev_dim)
      throw std::invalid_argument("flag_adapted_basis: flag is not increasing");
    for (int r = 0; r < step.rows(); ++r) {
      QVec v = step.row(r);
      if (!out.empty() && space_contains(covered, v)) continue;
      orthogonalize_and_push(v);
      QMat span(static_cast<int>(out.size()), n);
      for (int i = 0; i < span.rows(); ++i)
        for (int j = 0; j < n; ++j) span(i, j) = out[static_cast<size_t>(i)][j];
      covered = row_space(span);
    }
    if (static_cast<int>(out.size()) != step.rows())
      throw std::invalid_argument("flag_adapted_basis: flag step is not nested in the next");
    prev_dim = step.rows();
  }
  for (int j = 0; j < n && static_cast<int>(out.size()) < n; ++j) {
    QVec v = unit_vec<Rational>(n, j);
    if (!out.empty() && space_contains(covered, v)) continue;
    orthogonalize_and_push(v);
    QMat span(static_cast<int>(out.size()), n);
    for (int i = 0; i < span.rows(); ++i)
      for (int jj = 0; jj < n; ++jj) span(i, jj) = out[static_cast<size_t>(i)][jj];
    covered = row_space(span);
  }
  if (static_cast<int>(out.size()) != n)
    throw std::logic_error("flag_adapted_basis: failed to complete a basis");
  return out;
}

FrameConstants<Rational> frame_constants(const LieAlgebra& g, const InnerProduct& ip,
                                         const std::vector<QVec>& frame) {
  int n = g.dim();
  FrameConstants<Rational> fc(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec br = g.bracket(frame[i], frame[j]);
      for (int k = 0; k < n; ++k) fc.set_alpha(i, j, k, ip.pair(br, frame[k]));
    }
  return fc;
}

DVec bracket_f(const LieAlgebra& g, const DVec& x, const DVec& y) {
  int n = g.dim();
  DVec out(n, 0.0);
  for (const auto& [key, value] : g.entries()) {
    auto [i, j, k] = key;
    out[k] += (x[i] * y[j] - x[j] * y[i]) * to_double(value);
  }
  return out;
}

FrameConstants<double> frame_constants(const LieAlgebra& g, const DMat& gram,
                                       const std::vector<DVec>& frame) {
  int n = g.dim();
  auto pair = [&](const DVec& x, const DVec& y) {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += x[i] * gram(i, j) * y[j];
    return s;
  };
  FrameConstants<double> fc(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      DVec br = bracket_f(g, frame[i], frame[j]);
      for (int k = 0; k < n; ++k) fc.set_alpha(i, j, k, pair(br, frame[k]));
    }
  return fc;
}

OrthonormalFrame orthonormal_frame(const MetricLieAlgebra& m, double tol) {
  int n = m.algebra.dim();
  std::vector<QVec> ortho = flag_adapted_basis(m.metric, {});
  std::vector<Rational> sqnorm(n);
  bool exact = true;
  for (int i = 0; i < n; ++i) sqnorm[i] = m.metric.pair(ortho[i], ortho[i]);
  std::vector<Rational> exact_norm(n);
  for (int i = 0; i < n; ++i) {
    auto root = exact_sqrt(sqnorm[i]);
    if (!root) {
      exact = false;
      break;
    }
    exact_norm[i] = *root;
  }
  if (exact) {
    ExactFrame f{std::vector<QVec>{}, FrameConstants<Rational>(n)};
    for (int i = 0; i < n; ++i) f.vectors.push_back((Rational(1) / exact_norm[i]) * ortho[i]);
    f.constants = frame_constants(m.algebra, m.metric, f.vectors);
    return f;
  }
  DMat gram = to_double(m.metric.gram());
  FloatFrame f{std::vector<DVec>{}, FrameConstants<double>(n), 0};
  for (int i = 0; i < n; ++i) {
    double norm = std::sqrt(to_double(sqnorm[i]));
    DVec v = to_double(ortho[i]);
    for (double& x : v) x /= norm;
    f.vectors.push_back(std::move(v));
  }
  auto pair = [&](const DVec& x, const DVec& y) {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += x[i] * gram(i, j) * y[j];
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double expect = i == j ? 1.0 : 0.0;
      f.orthonormality_residual =
          std::max(f.orthonormality_residual, std::abs(pair(f.vectors[i], f.vectors[j]) - expect));
    }
  if (f.orthonormality_residual > tol)
    throw std::domain_error("orthonormal_frame: orthonormality residual exceeds tolerance");
  f.constants = frame_constants(m.algebra, gram, f.vectors);
  return f;
}

}  // namespace milnor
