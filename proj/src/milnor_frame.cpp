#include "milnor/milnor_frame.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace milnor {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

void require_valid(const MilnorData& d) {
  if (d.n() < 3) throw std::invalid_argument("MilnorData: dimension must be at least 3");
  if (d.sigma) {
    int n = d.n();
    if (static_cast<int>(d.sigma->size()) != n)
      throw std::invalid_argument("MilnorData: sigma length differs from dimension");
    std::vector<bool> hit(n, false);
    for (int v : *d.sigma) {
      if (v < 0 || v >= n || hit[v])
        throw std::invalid_argument("MilnorData: sigma is not a permutation");
      hit[v] = true;
    }
  }
}

void require_default_sigma(const MilnorData& d, const char* op) {
  if (!d.has_default_sigma())
    throw std::invalid_argument(std::string(op) + ": requires the default cyclic sigma");
}

// Places c^k_{ij} = value respecting the i < j storage convention.
void place(LieAlgebra& g, int i, int j, int k, const Rational& value) {
  if (i < j)
    g.set_structure(i, j, k, value);
  else
    g.set_structure(j, i, k, -value);
}

}  // namespace

bool MilnorData::has_default_sigma() const {
  if (!sigma) return true;
  int nn = n();
  for (int i = 0; i < nn; ++i)
    if ((*sigma)[i] != (i + 1) % nn) return false;
  return true;
}

LieAlgebra build_cyclic(const MilnorData& d) {
  require_valid(d);
  require_default_sigma(d, "build_cyclic");
  int n = d.n();
  LieAlgebra g(n);
  for (int i = 0; i < n; ++i) {
    int j = mod(i + 1, n);
    int k = mod(i + 2, n);
    if (d.lambda[k] != 0) place(g, i, j, k, d.lambda[k]);
  }
  return g;
}

std::vector<int> adjacent_product_check(const MilnorData& d) {
  require_valid(d);
  require_default_sigma(d, "adjacent_product_check");
  if (d.n() < 4)
    throw std::invalid_argument("adjacent_product_check: requires dimension at least 4");
  std::vector<int> violations;
  int n = d.n();
  for (int i = 0; i < n; ++i)
    if (d.lambda[i] != 0 && d.lambda[mod(i + 2, n)] != 0) violations.push_back(i);
  return violations;
}

GeneralBuild build_general(const MilnorData& d) {
  require_valid(d);
  int n = d.n();
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = d.sigma ? (*d.sigma)[i] : (i + 1) % n;

  GeneralBuild out{LieAlgebra(n), {}, {}};
  std::vector<bool> visited(n, false);
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      visited[cur] = true;
      cycle.push_back(cur);
      cur = sigma[cur];
    } while (cur != start);
    if (cycle.size() == 1) {
      out.abelian_indices.push_back(cycle[0]);
    } else if (cycle.size() == 2) {
      throw std::invalid_argument(
          "build_general: sigma contains the transposition (" + std::to_string(cycle[0] + 1) +
          " " + std::to_string(cycle[1] + 1) +
          "); a 2-cycle would define the same bracket twice with incompatible values");
    } else {
      out.cycle_blocks.push_back(cycle);
    }
  }

  for (const auto& cycle : out.cycle_blocks) {
    int len = static_cast<int>(cycle.size());
    for (int p = 0; p < len; ++p) {
      int i = cycle[p];
      int j = cycle[(p + 1) % len];
      int k = cycle[(p + 2) % len];
      if (d.lambda[k] != 0) place(out.algebra, i, j, k, d.lambda[k]);
    }
  }
  return out;
}

MilnorData shift(const MilnorData& d, int ell) {
  require_valid(d);
  require_default_sigma(d, "shift");
  int n = d.n();
  MilnorData out;
  out.lambda.resize(n);
  for (int i = 0; i < n; ++i) out.lambda[i] = d.lambda[mod(i - ell, n)];
  return out;
}

namespace {

// Zero-pattern block scan shared by decompose and normalize. Preconditions
// (Jacobi for the cyclic build) are the caller's; under them the nonzero
// lambda positions form cyclic runs of length 1 (h3) or 2 (h4), and the
// blocks derived from distinct runs are disjoint.
std::vector<Summand> milnor_blocks(const MilnorData& d) {
  int n = d.n();
  std::vector<bool> nonzero(n);
  int count = 0;
  for (int i = 0; i < n; ++i) {
    nonzero[i] = d.lambda[i] != 0;
    count += nonzero[i];
  }
  std::vector<Summand> out;
  if (count == 0) {
    Summand ab;
    ab.kind = SummandKind::abelian;
    for (int i = 0; i < n; ++i) ab.indices.push_back(i);
    out.push_back(ab);
    return out;
  }
  // Canonical starting anchor: smallest i with lambda_i != 0, lambda_{i-1} = 0.
  int start = -1;
  for (int i = 0; i < n; ++i)
    if (nonzero[i] && !nonzero[mod(i - 1, n)]) {
      start = i;
      break;
    }
  if (start < 0)
    throw std::invalid_argument("decompose: every nonzero constant has a nonzero predecessor");

  std::vector<bool> used(n, false);
  int scanned = 0;
  int t = start;
  while (scanned < n) {
    if (!nonzero[t]) {
      ++scanned;
      t = mod(t + 1, n);
      continue;
    }
    bool pair = nonzero[mod(t + 1, n)];
    Summand s;
    s.kind = pair ? SummandKind::h4 : SummandKind::h3;
    int len = pair ? 4 : 3;
    for (int off = -2; off < len - 2; ++off) s.indices.push_back(mod(t + off, n));
    for (int idx : s.indices) {
      if (used[idx])
        throw std::invalid_argument("decompose: overlapping blocks (constants violate Jacobi)");
      used[idx] = true;
    }
    out.push_back(s);
    scanned += pair ? 2 : 1;
    t = mod(t + (pair ? 2 : 1), n);
  }
  Summand ab;
  ab.kind = SummandKind::abelian;
  for (int i = 0; i < n; ++i)
    if (!used[i]) ab.indices.push_back(i);
  if (!ab.indices.empty()) out.push_back(ab);
  return out;
}

int nonzero_count(const MilnorData& d) {
  int c = 0;
  for (const auto& l : d.lambda) c += (l != 0);
  return c;
}

}  // namespace

DecomposeResult decompose(const MilnorData& d) {
  require_valid(d);
  require_default_sigma(d, "decompose");
  int n = d.n();
  DecomposeResult res;
  if (n == 3) {
    int count = nonzero_count(d);
    if (count >= 2) {
      res.three_dim_general = true;
      return res;
    }
    if (count == 0) {
      Summand ab;
      ab.kind = SummandKind::abelian;
      ab.indices = {0, 1, 2};
      res.decomposition.summands = {ab};
      res.step = 1;
      return res;
    }
    int p = 0;
    while (d.lambda[p] == 0) ++p;
    Summand h3;
    h3.kind = SummandKind::h3;
    h3.indices = {mod(p + 1, 3), mod(p + 2, 3), p};
    res.decomposition.summands = {h3};
    res.step = 2;
    return res;
  }

  LieAlgebra g = build_cyclic(d);
  if (!jacobi_defect(g).empty())
    throw std::invalid_argument("decompose: cyclic build violates the Jacobi identity");
  res.decomposition.summands = milnor_blocks(d);

  res.step = 0;
  for (const auto& s : res.decomposition.summands) {
    int block_step = s.kind == SummandKind::h4 ? 3 : s.kind == SummandKind::h3 ? 2 : 1;
    res.step = std::max(res.step, block_step);
    QMat span(static_cast<int>(s.indices.size()), n);
    for (int r = 0; r < span.rows(); ++r) span(r, s.indices[r]) = 1;
    if (!is_ideal(g, span))
      throw std::logic_error("decompose: extracted block is not an ideal");
  }
  return res;
}

NormalizeResult normalize(const MilnorData& d) {
  require_valid(d);
  require_default_sigma(d, "normalize");
  int n = d.n();
  std::vector<Summand> blocks;
  if (n == 3) {
    if (nonzero_count(d) >= 2)
      throw std::invalid_argument(
          "normalize: 3-dim data with two or more nonzero constants cannot be scaled to {0,1}");
    blocks = milnor_blocks(d);  // runs of length 1 only
  } else {
    DecomposeResult dec = decompose(d);  // validates Jacobi
    blocks = dec.decomposition.summands;
  }

  NormalizeResult out;
  out.data.lambda.assign(n, Rational(0));
  out.transform = QMat::identity(n);
  for (const auto& s : blocks) {
    if (s.kind == SummandKind::h3) {
      int p = s.indices[2];
      out.data.lambda[p] = 1;
      out.transform(p, p) = d.lambda[p];
    } else if (s.kind == SummandKind::h4) {
      int p = s.indices[2];
      int q = s.indices[3];
      out.data.lambda[p] = 1;
      out.data.lambda[q] = 1;
      out.transform(p, p) = d.lambda[p];
      out.transform(q, q) = d.lambda[p] * d.lambda[q];
    }
  }
  return out;
}

}  // namespace milnor
