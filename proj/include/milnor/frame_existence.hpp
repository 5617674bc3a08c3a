#pragma once

// Existence tests for orthonormal Milnor frames.
//
// Dimension 3: the bracket factors through the metric cross product as
// [x, y] = L(x ^ y); the frame question reduces to self-adjointness of L,
// which holds exactly when the algebra is unimodular, and the eigenframe of L
// is an orthonormal Milnor frame. The cross product carries a sqrt(det G)
// factor, so L is stored in the sqrt-free form L = M / sqrt(det G) with
// M = C*G rational; self-adjointness is the exact symmetry of G*M.
//
// Dimension 4 (filiform): Gram-Schmidt along the canonical flag
// g^2 c [g,g] c centralizer([g,g]) produces an orthonormal frame F_1..F_4
// whose only brackets are [F_2,F_4] = a F_1 and [F_3,F_4] = b F_1 + c F_2
// with a, c > 0 after sign fixing; an orthonormal Milnor frame exists iff
// b = 0, and b's vanishing is decided exactly on the unnormalized flag
// vectors as g([v_3, v_4], v_1) = 0.
//
// h3 + h3: if any automorphism makes the two summands orthogonal then
// g(U_3, V_3) = 0 for the derived directions U_3, V_3 of the blocks; a
// nonzero value is a definitive obstruction, a zero value is inconclusive
// (the condition is necessary, not known to be sufficient).

#include <array>
#include <optional>
#include <vector>

#include "milnor/metric.hpp"
#include "milnor/milnor_frame.hpp"

namespace milnor {

// Metric cross product on a 3-dim inner-product space with the declared
// orientation: x ^ y = orientation * sqrt(det G) * G^{-1} (x x_e y). Exact,
// hence requires det G to be a perfect rational square (throws otherwise).
QVec cross_product(const InnerProduct& g, const QVec& x, const QVec& y, int orientation = 1);

struct LOperator {
  // L = scaled / sqrt(gram_det); scaled = C * G with C the matrix collecting
  // the bracket coefficients ([X_2,X_3] | [X_3,X_1] | [X_1,X_2]) as columns.
  QMat scaled;
  Rational gram_det;
  int orientation = 1;
  bool self_adjoint = false;        // exact: G * scaled symmetric
  std::optional<QMat> exact;        // L itself when sqrt(det G) is rational
  DMat as_double() const;
};

// The operator with [x, y] = L(x ^ y); dimension 3 only.
LOperator l_operator(const MetricLieAlgebra& m, int orientation = 1);

struct MilnorFrame3 {
  std::vector<DVec> frame;          // positively oriented, g-orthonormal
  std::array<double, 3> lambda{};   // [f_i, f_j] = lambda_k f_k (cyclic), ascending
  double residual = 0;              // max orthonormality + bracket defect
};

// Orthonormal Milnor frame of a 3-dim unimodular metric Lie algebra from the
// eigenframe of L (exact unimodularity is a checked precondition).
MilnorFrame3 milnor_frame_3d(const MetricLieAlgebra& m, double tol);

// ---- dimension 4, declared basis a Milnor basis of the filiform algebra ----

struct H4Constants {
  double a = 0, b = 0, c = 0;  // sign-fixed: a > 0, c > 0
};

// Canonical-frame constants from the flag construction (float; the
// normalizations involve square roots).
H4Constants h4_canonical_constants(const MetricLieAlgebra& m);

// Exact indicator of the canonical-frame constant b: the rational
// g([v_3, v_4], v_1) on the unnormalized flag vectors. Zero iff b = 0.
Rational h4_obstruction(const MetricLieAlgebra& m);

// Exact decision: an orthonormal Milnor frame exists iff b = 0.
bool h4_has_orthonormal_milnor(const MetricLieAlgebra& m);

struct H4Frame {
  std::vector<DVec> frame;     // orthonormal Milnor frame Y_1..Y_4
  double lambda3 = 0, lambda4 = 0;
  double residual = 0;         // max orthonormality + bracket defect
};

// Constructive completion for the b = 0 case: the reordered canonical frame
// (F_3, F_4, F_2, -F_1) is an orthonormal Milnor frame with constants
// lambda_3 = c, lambda_4 = a. Throws when b != 0.
H4Frame h4_milnor_frame(const MetricLieAlgebra& m, double tol);

// ---- h3 + h3 in a declared Milnor basis ----

struct H3H3Obstruction {
  Rational value;            // g(U_3, V_3)
  bool obstructed = false;   // value != 0; false means inconclusive, not "exists"
};

H3H3Obstruction h3h3_obstruction(const MetricLieAlgebra& m);

// ---- constructed counterexample metrics ----

enum class CounterexampleKind { h4, h3h3 };

struct Counterexample {
  MilnorData data;       // normalized algebra the metric lives on
  QMat gram;             // positive definite, off-diagonal perturbation eps
  Rational obstruction;  // the nonzero exact obstruction value it produces
};

// Perturbed metrics defeating the frame tests: for h4, the first
// diagonal-plus-one-off-diagonal perturbation I + eps(E_pq + E_qp) whose
// exact b-indicator is nonzero; for h3h3, the coupling of the two derived
// directions I + eps(E_36 + E_63). Throws when the perturbed matrix is not
// positive definite or when eps = 0.
Counterexample counterexample_metric(CounterexampleKind kind, const Rational& eps);

}  // namespace milnor
