#include <doctest.h>

#include <cmath>

#include "milnor/linalg.hpp"
#include "test_util.hpp"

using namespace milnor;

namespace {

QMat from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows.begin()->size());
  QMat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rref, rank and nullspace on a rank-2 matrix") {
  QMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  QMat r = rref(m);
  CHECK(rank(m) == 2);
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 1) == 0);
  CHECK(r(0, 2) == 1);
  CHECK(r(1, 0) == 0);
  CHECK(r(1, 1) == 1);
  CHECK(r(1, 2) == 1);
  for (int j = 0; j < 3; ++j) CHECK(r(2, j) == 0);

  QMat kernel = nullspace(m);
  REQUIRE(kernel.rows() == 1);
  // m * kernel-row = 0
  QVec prod = m.apply(kernel.row(0));
  CHECK(is_zero(prod));
}

TEST_CASE("row_space is canonical and membership works") {
  QMat a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  QMat b = from_rows({{3, 2, 5}, {1, 0, 1}});  // same span, different spanning set
  CHECK(row_space(a) == row_space(b));
  CHECK(space_contains(row_space(a), {Rational(2), Rational(2), Rational(4)}));
  CHECK(!space_contains(row_space(a), {Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("solve finds particular solutions and detects inconsistency") {
  QMat m = from_rows({{1, 1}, {1, -1}});
  auto x = solve(m, {Rational(3), Rational(1)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);

  QMat s = from_rows({{1, 1}, {2, 2}});
  CHECK(!solve(s, {Rational(1), Rational(3)}));
  auto y = solve(s, {Rational(1), Rational(2)});
  REQUIRE(y);
  CHECK((*y)[0] + (*y)[1] == 1);
}

TEST_CASE("inverse and det") {
  QMat m = from_rows({{2, 1}, {1, 1}});
  CHECK(det(m) == 1);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((*inv) * m == QMat::identity(2));
  CHECK(!inverse(from_rows({{1, 2}, {2, 4}})));
  CHECK(det(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("char_poly is monic with ascending coefficients") {
  // [[2,1],[1,2]]: det(xI - m) = x^2 - 4x + 3.
  QVec p = char_poly(from_rows({{2, 1}, {1, 2}}));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == 3);
  CHECK(p[1] == -4);
  CHECK(p[2] == 1);

  // Nilpotent: x^3.
  QVec q = char_poly(from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(q[0] == 0);
  CHECK(q[1] == 0);
  CHECK(q[2] == 0);
  CHECK(q[3] == 1);
}

TEST_CASE("signature via Descartes on symmetric matrices") {
  CHECK(signature_symmetric(from_rows({{1, 0}, {0, -1}})) == Signature{1, 0, 1});
  CHECK(signature_symmetric(from_rows({{0, 0}, {0, 0}})) == Signature{0, 2, 0});
  CHECK(signature_symmetric(from_rows({{2, 1}, {1, 2}})) == Signature{0, 0, 2});
  CHECK(signature_symmetric(from_rows({{-2, 1}, {1, -2}})) == Signature{2, 0, 0});
  // diag-like with a kernel direction
  CHECK(signature_symmetric(from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, -3}})) ==
        Signature{1, 1, 1});
}

TEST_CASE("positive definiteness by leading minors") {
  CHECK(is_positive_definite(QMat::identity(4)));
  CHECK(is_positive_definite(from_rows({{2, 1}, {1, 2}})));
  CHECK(!is_positive_definite(from_rows({{1, 2}, {2, 1}})));
  CHECK(!is_positive_definite(from_rows({{0, 0}, {0, 1}})));
  CHECK(!is_positive_definite(from_rows({{-1, 0}, {0, -1}})));

  QMat g = QMat::identity(4);
  g(0, 2) = Rational(1, 10);
  g(2, 0) = Rational(1, 10);
  CHECK(is_positive_definite(g));
  g(0, 2) = 1;
  g(2, 0) = 1;
  CHECK(!is_positive_definite(g));
}

TEST_CASE("signature of random congruent diagonal forms matches the diagonal") {
  testutil::Rng rng(0x5ec7a11u);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform(2, 4);
    QMat d(n, n);
    Signature expect;
    for (int i = 0; i < n; ++i) {
      int s = rng.uniform(-1, 1);
      d(i, i) = s;
      if (s < 0)
        ++expect.negative;
      else if (s == 0)
        ++expect.zero;
      else
        ++expect.positive;
    }
    // Random invertible congruence a^T d a preserves the signature.
    QMat a(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.rational(3, 2);
    } while (det(a) == 0);
    CHECK(signature_symmetric(a.transpose() * d * a) == expect);
  }
}

TEST_CASE("symmetric eigensolver on an exactly known matrix") {
  // [[2,1],[1,2]]: eigenvalues 1 and 3.
  SymmetricEigen e = eigen_symmetric(to_double(from_rows({{2, 1}, {1, 2}})));
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-12));
  // Columns orthonormal.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double dot = 0;
      for (int r = 0; r < 2; ++r) dot += e.vectors(r, i) * e.vectors(r, j);
      CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("least squares reproduces exact solutions and minimizes residual") {
  DMat m(3, 2);
  m(0, 0) = 1; m(0, 1) = 0;
  m(1, 0) = 0; m(1, 1) = 1;
  m(2, 0) = 1; m(2, 1) = 1;
  DVec b = {1.0, 2.0, 3.0};  // consistent: x = (1, 2)
  DVec x = least_squares(m, b);
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-12));

  DVec b2 = {0.0, 0.0, 3.0};  // inconsistent: minimizer (1, 1)
  DVec x2 = least_squares(m, b2);
  CHECK(x2[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x2[1] == doctest::Approx(1.0).epsilon(1e-12));
}
