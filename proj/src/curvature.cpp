#include "milnor/curvature.hpp"

namespace milnor {

QMat killing_in_frame(const LieAlgebra& g, const std::vector<QVec>& frame) {
  int n = g.dim();
  QMat b = killing_form(g);
  QMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s(0);
      for (int p = 0; p < n; ++p) {
        if (frame[i][p] == 0) continue;
        for (int q = 0; q < n; ++q)
          if (b(p, q) != 0) s += frame[i][p] * b(p, q) * frame[j][q];
      }
      out(i, j) = s;
    }
  return out;
}

DMat killing_in_frame(const LieAlgebra& g, const std::vector<DVec>& frame) {
  int n = g.dim();
  DMat b = to_double(killing_form(g));
  DMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) s += frame[i][p] * b(p, q) * frame[j][q];
      out(i, j) = s;
    }
  return out;
}

}  // namespace milnor
