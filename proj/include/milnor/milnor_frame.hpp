#pragma once

// Milnor-frame data: a dimension n >= 3, cyclic structure constants
// lambda_0..lambda_{n-1}, and an optional permutation sigma (image list,
// default the full cycle i -> i+1 mod n). The cyclic build places
// [X_i, X_{i+1}] = lambda_{i+2} X_{i+2} with indices mod n; a general sigma
// splits into disjoint cycles, each of which is its own cyclic block, with
// fixed points contributing abelian directions. Everything here is exact.

#include <optional>
#include <vector>

#include "milnor/lie_algebra.hpp"
#include "milnor/rational.hpp"

namespace milnor {

struct MilnorData {
  std::vector<Rational> lambda;            // size n >= 3
  std::optional<std::vector<int>> sigma;   // 0-based image list; nullopt = full cycle

  int n() const { return static_cast<int>(lambda.size()); }
  bool has_default_sigma() const;
};

// [X_i, X_{i+1}] = lambda_{i+2} X_{i+2} (mod n). Requires n >= 3 and the
// default (full-cycle) sigma.
LieAlgebra build_cyclic(const MilnorData& d);

// Indices i with lambda_i * lambda_{i+2} != 0 (mod n); a nonempty list means
// the cyclic build cannot satisfy Jacobi. Requires n >= 4, default sigma.
std::vector<int> adjacent_product_check(const MilnorData& d);

struct GeneralBuild {
  LieAlgebra algebra;
  // Cycles of length >= 3 in canonical order (each cycle listed from its
  // smallest element, cycles ordered by smallest element).
  std::vector<std::vector<int>> cycle_blocks;
  // Fixed points of sigma, sorted: abelian directions.
  std::vector<int> abelian_indices;
};

// Builds [X_i, X_{sigma(i)}] = lambda_{sigma^2(i)} X_{sigma^2(i)} over the
// cycles of sigma. Transpositions (2-cycles) are rejected: they would define
// [X_i, X_j] twice with incompatible values.
GeneralBuild build_general(const MilnorData& d);

// lambda'_i = lambda_{i-ell mod n}; relabels the cyclic data. Default sigma.
MilnorData shift(const MilnorData& d, int ell);

enum class SummandKind { h3, h4, abelian };

struct Summand {
  SummandKind kind = SummandKind::abelian;
  std::vector<int> indices;  // h3/h4 blocks in bracket order; abelian sorted
  bool operator==(const Summand&) const = default;
};

struct Decomposition {
  std::vector<Summand> summands;  // blocks in cyclic enumeration order, abelian last
  bool operator==(const Decomposition&) const = default;
};

struct DecomposeResult {
  // n = 3 with two or three nonzero constants: not covered by the splitting
  // (these are the 3-dim general, possibly non-nilpotent, algebras).
  bool three_dim_general = false;
  Decomposition decomposition;
  int step = 0;  // nilpotency step of the whole algebra (when split)
};

// Splits cyclic Milnor data into Heisenberg (h3), filiform 4-dim (h4) and
// abelian summands, reading the zero pattern of lambda. Requires the cyclic
// build to satisfy Jacobi; every block is verified to be an ideal.
DecomposeResult decompose(const MilnorData& d);

struct NormalizeResult {
  MilnorData data;  // same zero pattern, every nonzero constant scaled to 1
  QMat transform;   // diagonal T with change_of_basis(build_cyclic(d), T) = build_cyclic(data)
};

// Diagonal rescaling onto {0,1} constants: per h3 block the image direction
// is scaled by its constant, per h4 block the two image directions by
// lambda_{i+2} and lambda_{i+2}*lambda_{i+3}. Requires a Jacobi-satisfying
// cyclic build; for n = 3 only the one-block cases (at most one nonzero
// constant) can be normalized.
NormalizeResult normalize(const MilnorData& d);

}  // namespace milnor
