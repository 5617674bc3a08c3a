#pragma once

// Shared test helpers: a deterministic RNG for property tests and builders
// for the recurring algebras. Seeds are fixed so every run sees the same
// sample set.

#include <cstdint>

#include "milnor/lie_algebra.hpp"
#include "milnor/milnor_frame.hpp"
#include "milnor/rational.hpp"

namespace milnor::testutil {

// splitmix64: tiny, deterministic, good enough for sampling test points.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Inclusive bounds.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(int max_num = 9, int max_den = 9) {
    return Rational(uniform(-max_num, max_num), uniform(1, max_den));
  }

  Rational nonzero_rational(int max_num = 9, int max_den = 9) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

 private:
  std::uint64_t state_;
};

inline LieAlgebra h3(const Rational& l3 = 1) {
  return build_cyclic({{0, 0, l3}, std::nullopt});
}

inline LieAlgebra h4(const Rational& l3 = 1, const Rational& l4 = 1) {
  return build_cyclic({{0, 0, l3, l4}, std::nullopt});
}

// The 4-dim frame algebra with constants C^1_{24} = a, C^1_{34} = b,
// C^2_{34} = c (1-based), i.e. [F2,F4] = aF1, [F3,F4] = bF1 + cF2.
inline LieAlgebra abc_algebra(const Rational& a, const Rational& b, const Rational& c) {
  LieAlgebra g(4);
  g.set_structure(1, 3, 0, a);
  g.set_structure(2, 3, 0, b);
  g.set_structure(2, 3, 1, c);
  return g;
}

}  // namespace milnor::testutil
