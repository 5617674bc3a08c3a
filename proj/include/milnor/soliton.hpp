#pragma once

// Derivation algebras and the Ricci-nilsoliton decision Ric = cI + D.
//
// A derivation is a linear map with D[x,y] = [Dx,y] + [x,Dy]; Der(g) is
// computed exactly as the kernel of the induced linear system on matrix
// entries. A metric algebra is a Ricci nilsoliton when its Ricci
// endomorphism lies in R*I + Der(g); nilsoliton_solve decides this by
// solving Ric = cI + sum t_m D_m over a derivation basis — exactly for
// rational Ricci matrices, by least squares with a tolerance for float
// ones. For cyclic Milnor data with a diagonal metric the decision
// reduces to a per-block condition on the constants
// (milnor_soliton_criterion).

#include <vector>

#include "milnor/lie_algebra.hpp"
#include "milnor/linalg.hpp"
#include "milnor/metric.hpp"
#include "milnor/milnor_frame.hpp"
#include "milnor/rational.hpp"

namespace milnor {

// Exact check of D[X_i,X_j] = [DX_i,X_j] + [X_i,DX_j] for all i < j.
bool is_derivation(const LieAlgebra& g, const QMat& d);

// Canonical basis of Der(g): the reduced-echelon kernel basis of the
// Leibniz system, one matrix per basis vector (rows of the kernel basis
// unpacked row-major). Requires the bracket to satisfy Jacobi.
std::vector<QMat> derivation_space(const LieAlgebra& g);

// Witness (or refutation) of Ric = cI + D with D a derivation. When
// is_soliton holds, residual is 0 on the exact path (<= the caller's
// tolerance on the float path) and d is exactly (resp. numerically) a
// derivation. When it fails, (c, d) is the least-squares best
// approximant and residual its max-norm error, as a diagnostic.
struct SolitonCertificate {
  bool is_soliton = false;
  Rational c;
  QMat d;
  Rational residual;
};

struct SolitonCertificateF {
  bool is_soliton = false;
  double c = 0;
  DMat d;
  double residual = 0;
};

// Solves ricci = c I + sum_m t_m D_m over the derivation basis of g,
// exactly. Solvable: is_soliton true, the minimal-norm solution is
// reported, residual 0. Unsolvable: the exact normal-equation best fit
// and its max-norm residual. ricci must be symmetric, g must satisfy
// Jacobi; both live in the same (orthonormal-frame) basis.
SolitonCertificate nilsoliton_solve(const QMat& ricci, const LieAlgebra& g);

// Float variant: least squares, is_soliton iff residual <= tol.
SolitonCertificateF nilsoliton_solve(const DMat& ricci, const LieAlgebra& g, double tol);

// Per-block soliton test for cyclic Milnor data with a diagonal metric
// (the rescaled frame X_i / sqrt(g_ii) is then orthonormal): true iff
// every 4-dim filiform block with indices (i, i+1, i+2, i+3) satisfies
// lambda_{i+2}^2 g_{i+2}^2 = lambda_{i+3}^2 g_{i+3} g_i — for the
// identity metric, |lambda_{i+2}| = |lambda_{i+3}|. Heisenberg and
// abelian summands impose no condition. Requires decompose(d) to
// produce a block decomposition and a positive-definite diagonal gram.
bool milnor_soliton_criterion(const MilnorData& d, const InnerProduct& metric);

}  // namespace milnor
