#pragma once

// Inner products on the declared basis, flag-adapted Gram-Schmidt, and
// orthonormal frames with their structure constants alpha_{ijk} =
// <[f_i,f_j], f_k>. The frame is exact (rational) whenever every squared norm
// met during Gram-Schmidt is a perfect rational square — in particular
// whenever the declared basis is already orthonormal — and falls back to
// floating point with a tolerance otherwise.

#include <variant>
#include <vector>

#include "milnor/lie_algebra.hpp"
#include "milnor/linalg.hpp"

namespace milnor {

class InnerProduct {
 public:
  // Throws unless gram is square and symmetric. Positive definiteness is a
  // separate exact query (checked where an actual metric is required).
  explicit InnerProduct(QMat gram);

  static InnerProduct identity(int n) { return InnerProduct(QMat::identity(n)); }

  int dim() const { return gram_.rows(); }
  const QMat& gram() const { return gram_; }

  Rational pair(const QVec& x, const QVec& y) const;

  bool is_positive_definite() const { return milnor::is_positive_definite(gram_); }

 private:
  QMat gram_;
};

// A Lie algebra together with a positive-definite inner product on its
// declared basis. Construction enforces matching dimensions and exact
// positive definiteness.
struct MetricLieAlgebra {
  MetricLieAlgebra(LieAlgebra algebra_in, InnerProduct metric_in);

  LieAlgebra algebra;
  InnerProduct metric;
};

// Exact Gram-Schmidt along a nested flag of subspaces (canonical bases,
// strictly increasing, implicitly completed by the full space). Returns n
// unnormalized pairwise-orthogonal rational vectors; the first dim(flag[0])
// span flag[0], and so on. Each flag step is completed canonically by its
// RREF basis vectors, the full space by standard basis vectors in index
// order.
std::vector<QVec> flag_adapted_basis(const InnerProduct& g, const std::vector<QMat>& flag);

// Structure constants of a frame: alpha(i,j,k) = <[f_i,f_j], f_k>,
// antisymmetric in the first two slots.
template <class S>
class FrameConstants {
 public:
  explicit FrameConstants(int n) : n_(n), a_(static_cast<size_t>(n) * n * n, S(0)) {}

  int dim() const { return n_; }
  const S& alpha(int i, int j, int k) const { return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
  void set_alpha(int i, int j, int k, const S& v) {
    a_[(static_cast<size_t>(i) * n_ + j) * n_ + k] = v;
    a_[(static_cast<size_t>(j) * n_ + i) * n_ + k] = -v;
  }

 private:
  int n_;
  std::vector<S> a_;
};

struct ExactFrame {
  std::vector<QVec> vectors;  // g-orthonormal, rational
  FrameConstants<Rational> constants;
};

struct FloatFrame {
  std::vector<DVec> vectors;
  FrameConstants<double> constants;
  double orthonormality_residual = 0;  // max |<f_i,f_j> - delta_ij|
};

using OrthonormalFrame = std::variant<ExactFrame, FloatFrame>;

inline bool is_exact(const OrthonormalFrame& f) { return std::holds_alternative<ExactFrame>(f); }

// Orthonormalizes the declared basis along the coordinate flag. Exact when
// every squared norm has a rational square root; otherwise float, with the
// orthonormality residual required to be <= tol.
OrthonormalFrame orthonormal_frame(const MetricLieAlgebra& m, double tol);

// alpha constants of an explicitly given frame (assumed orthonormal).
FrameConstants<Rational> frame_constants(const LieAlgebra& g, const InnerProduct& ip,
                                         const std::vector<QVec>& frame);
FrameConstants<double> frame_constants(const LieAlgebra& g, const DMat& gram,
                                       const std::vector<DVec>& frame);

// Bilinear extension of the bracket to float coordinate vectors.
DVec bracket_f(const LieAlgebra& g, const DVec& x, const DVec& y);

}  // namespace milnor
