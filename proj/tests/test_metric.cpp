#include <doctest.h>

#include <cmath>
#include <variant>

#include "milnor/metric.hpp"
#include "milnor/milnor_frame.hpp"
#include "test_util.hpp"

using namespace milnor;
using testutil::h3;
using testutil::h4;

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

QMat diag(std::initializer_list<int> d) {
  QMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  int i = 0;
  for (int v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("inner product construction validates shape and symmetry") {
  CHECK_THROWS_AS(InnerProduct(QMat(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(InnerProduct(from_rows({{1, 2}, {0, 1}})), std::invalid_argument);

  InnerProduct g(from_rows({{2, 1}, {1, 1}}));
  CHECK(g.dim() == 2);
  CHECK(g.is_positive_definite());
  // pair is the bilinear form x^T G y.
  QVec x = {Rational(1), Rational(0)};
  QVec y = {Rational(0), Rational(1)};
  CHECK(g.pair(x, y) == 1);
  CHECK(g.pair(x, x) == 2);
  CHECK(g.pair(y, y) == 1);
  CHECK_THROWS_AS(g.pair(x, QVec{Rational(1)}), std::invalid_argument);

  // Symmetric but indefinite grams are representable; definiteness is a query.
  InnerProduct lorentz(diag({1, -1}));
  CHECK(!lorentz.is_positive_definite());
}

TEST_CASE("metric Lie algebra construction enforces dimensions and definiteness") {
  CHECK_NOTHROW(MetricLieAlgebra(h3(), InnerProduct::identity(3)));
  CHECK_THROWS_AS(MetricLieAlgebra(h3(), InnerProduct::identity(4)), std::invalid_argument);
  CHECK_THROWS_AS(MetricLieAlgebra(h3(), InnerProduct(diag({1, 1, -1}))), std::domain_error);
  CHECK_THROWS_AS(MetricLieAlgebra(h3(), InnerProduct(QMat(3, 3))), std::domain_error);
}

TEST_CASE("flag-adapted basis: empty flag with the identity metric is the standard basis") {
  std::vector<QVec> b = flag_adapted_basis(InnerProduct::identity(3), {});
  REQUIRE(b.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(b[static_cast<size_t>(i)] == unit_vec<Rational>(3, i));
}

TEST_CASE("flag-adapted basis orthogonalizes along the flag") {
  InnerProduct g = InnerProduct::identity(3);
  QMat first = row_space(from_rows({{1, 1, 0}}));
  std::vector<QVec> b = flag_adapted_basis(g, {first});
  REQUIRE(b.size() == 3);
  // v0 spans the flag step; v1 is the Gram-Schmidt image of e0; e1 is then
  // already covered and the completion continues with e2.
  CHECK(b[0] == QVec{Rational(1), Rational(1), Rational(0)});
  CHECK(b[1] == QVec{Rational(1, 2), Rational(-1, 2), Rational(0)});
  CHECK(b[2] == unit_vec<Rational>(3, 2));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) CHECK(g.pair(b[i], b[j]) == 0);
}

TEST_CASE("flag-adapted basis respects a non-identity metric") {
  InnerProduct g(from_rows({{2, 1}, {1, 1}}));
  std::vector<QVec> b = flag_adapted_basis(g, {});
  REQUIRE(b.size() == 2);
  CHECK(b[0] == QVec{Rational(1), Rational(0)});
  // e1 - (g(e1,e0)/g(e0,e0)) e0 = e1 - e0/2.
  CHECK(b[1] == QVec{Rational(-1, 2), Rational(1)});
  CHECK(g.pair(b[0], b[1]) == 0);
}

TEST_CASE("flag-adapted basis rejects non-nested and ill-shaped flags") {
  InnerProduct g = InnerProduct::identity(3);
  QMat e0 = row_space(from_rows({{1, 0, 0}}));
  QMat e1 = row_space(from_rows({{0, 1, 0}}));
  CHECK_THROWS_AS(flag_adapted_basis(g, {e0, e1}), std::invalid_argument);
  CHECK_THROWS_AS(flag_adapted_basis(g, {QMat(1, 2)}), std::invalid_argument);
}

TEST_CASE("frame constants of an explicit frame") {
  LieAlgebra g = h3();
  InnerProduct ip = InnerProduct::identity(3);
  // Swapping the first two basis vectors flips the only bracket's sign
  // relative to the frame order; flipping the image direction flips it back.
  std::vector<QVec> frame = {unit_vec<Rational>(3, 1), unit_vec<Rational>(3, 0),
                             QVec{Rational(0), Rational(0), Rational(-1)}};
  FrameConstants<Rational> fc = frame_constants(g, ip, frame);
  CHECK(fc.alpha(0, 1, 2) == 1);
  CHECK(fc.alpha(1, 0, 2) == -1);
  CHECK(fc.alpha(0, 2, 1) == 0);
}

TEST_CASE("orthonormal frame stays exact when the squared norms are perfect squares") {
  LieAlgebra g = h4();  // [X0,X1] = X2, [X1,X2] = X3
  MetricLieAlgebra m(g, InnerProduct(diag({1, 1, 4, 1})));
  OrthonormalFrame f = orthonormal_frame(m, 1e-9);
  REQUIRE(is_exact(f));
  const ExactFrame& ef = std::get<ExactFrame>(f);
  REQUIRE(ef.vectors.size() == 4);
  CHECK(ef.vectors[2] == QVec{Rational(0), Rational(0), Rational(1, 2), Rational(0)});
  // [f0,f1] = X2 = 2 f2 and [f1,f2] = X3/2 = f3/2.
  CHECK(ef.constants.alpha(0, 1, 2) == 2);
  CHECK(ef.constants.alpha(1, 2, 3) == Rational(1, 2));
  CHECK(ef.constants.alpha(1, 0, 2) == -2);
  CHECK(ef.constants.alpha(0, 1, 3) == 0);
  CHECK(ef.constants.alpha(0, 2, 3) == 0);
}

TEST_CASE("orthonormal frame is exact for off-diagonal grams with square norms") {
  // G = [[1,1],[1,2]]: both Gram-Schmidt squared norms are 1.
  MetricLieAlgebra m(LieAlgebra(2), InnerProduct(from_rows({{1, 1}, {1, 2}})));
  OrthonormalFrame f = orthonormal_frame(m, 1e-9);
  REQUIRE(is_exact(f));
  const ExactFrame& ef = std::get<ExactFrame>(f);
  CHECK(ef.vectors[0] == QVec{Rational(1), Rational(0)});
  CHECK(ef.vectors[1] == QVec{Rational(-1), Rational(1)});
}

TEST_CASE("orthonormal frame falls back to floats on irrational norms") {
  LieAlgebra g = h3();
  MetricLieAlgebra m(g, InnerProduct(diag({2, 1, 1})));
  OrthonormalFrame f = orthonormal_frame(m, 1e-9);
  REQUIRE(!is_exact(f));
  const FloatFrame& ff = std::get<FloatFrame>(f);
  CHECK(ff.orthonormality_residual <= 1e-12);
  // f0 = X0/sqrt(2), so alpha(0,1,2) = 1/sqrt(2).
  CHECK(ff.constants.alpha(0, 1, 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(ff.constants.alpha(0, 2, 1) == doctest::Approx(0.0));
}
