#pragma once

// Sectional and Ricci curvature of a left-invariant metric, expressed through
// the structure constants alpha_{ijk} of a g-orthonormal frame:
//
//   kappa(f_i,f_j) = sum_k [ 1/2 a_ijk(-a_ijk + a_jki + a_kij)
//                           - 1/4 (a_ijk - a_jki + a_kij)(a_ijk + a_jki - a_kij)
//                           - a_kii a_kjj ]
//
//   Ric_ij = -1/2 sum_{k,l} a_ikl a_jkl + 1/4 sum_{k,l} a_kli a_klj - 1/2 B_ij
//
// with B the Killing form in the same frame. Both specialize to the classical
// unimodular formulas; the Ricci formula additionally requires the algebra to
// be unimodular (checked through the frame constants: tr ad_{f_i} =
// sum_k alpha_{ikk} must vanish for every i).
//
// The same templates serve the exact rational path and the float path.

#include <cmath>
#include <stdexcept>

#include "milnor/linalg.hpp"
#include "milnor/metric.hpp"

namespace milnor {

template <class S>
S sectional_curvature(const FrameConstants<S>& fc, int i, int j) {
  int n = fc.dim();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("sectional_curvature: index");
  if (i == j)
    throw std::invalid_argument("sectional_curvature: requires two distinct frame directions");
  S half = S(1) / S(2);
  S quarter = S(1) / S(4);
  S sum(0);
  for (int k = 0; k < n; ++k) {
    const S& a_ijk = fc.alpha(i, j, k);
    const S& a_jki = fc.alpha(j, k, i);
    const S& a_kij = fc.alpha(k, i, j);
    sum += half * a_ijk * (-a_ijk + a_jki + a_kij);
    sum += -quarter * (a_ijk - a_jki + a_kij) * (a_ijk + a_jki - a_kij);
    sum += -fc.alpha(k, i, i) * fc.alpha(k, j, j);
  }
  return sum;
}

// Full table with a zero diagonal (a single direction spans no plane; the
// diagonal entries are formal zeros).
template <class S>
Mat<S> sectional_table(const FrameConstants<S>& fc) {
  int n = fc.dim();
  Mat<S> t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) t(i, j) = sectional_curvature(fc, i, j);
  return t;
}

namespace detail {

inline bool unimodular_trace_ok(const Rational& t) { return t == 0; }
inline bool unimodular_trace_ok(double t) { return std::abs(t) <= 1e-9; }

}  // namespace detail

template <class S>
Mat<S> ricci_orthonormal(const FrameConstants<S>& fc, const Mat<S>& killing) {
  int n = fc.dim();
  if (killing.rows() != n || killing.cols() != n)
    throw std::invalid_argument("ricci_orthonormal: Killing form shape mismatch");
  for (int i = 0; i < n; ++i) {
    S tr(0);
    for (int k = 0; k < n; ++k) tr += fc.alpha(i, k, k);
    if (!detail::unimodular_trace_ok(tr))
      throw std::domain_error("ricci_orthonormal: frame is not unimodular");
  }
  S half = S(1) / S(2);
  S quarter = S(1) / S(4);
  Mat<S> ric(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      S sum(0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          sum += -half * fc.alpha(i, k, l) * fc.alpha(j, k, l);
          sum += quarter * fc.alpha(k, l, i) * fc.alpha(k, l, j);
        }
      sum += -half * killing(i, j);
      ric(i, j) = sum;
      ric(j, i) = sum;
    }
  return ric;
}

// Killing form of the algebra transported to an explicit frame:
// B(f_i, f_j) with f given by coordinate columns in the declared basis.
QMat killing_in_frame(const LieAlgebra& g, const std::vector<QVec>& frame);
DMat killing_in_frame(const LieAlgebra& g, const std::vector<DVec>& frame);

// Eigenvalue sign pattern of a Ricci matrix: exact characteristic-polynomial
// route for rational input, eigenvalue route with tolerance for float input.
inline Signature ricci_signature(const QMat& ric) { return signature_symmetric(ric); }
inline Signature ricci_signature(const DMat& ric, double tol) {
  return signature_symmetric(ric, tol);
}

}  // namespace milnor
