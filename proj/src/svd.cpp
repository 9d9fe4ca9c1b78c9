#include "gobs/svd.hpp"

#include <algorithm>
#include <cmath>

#include "gobs/errors.hpp"

namespace gobs {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kTol = 1e-14;

}  // namespace

std::vector<double> singular_values(int rows, int cols, const cplx* a) {
  if (rows < 1 || cols < 1) throw precondition_error("singular_values: empty matrix");
  // Work on the thinner column family: columns of A when cols <= rows,
  // otherwise columns of A^H. Either way the nonzero spectrum matches A's.
  const int nc = std::min(rows, cols);
  const int nl = std::max(rows, cols);
  std::vector<std::vector<cplx>> col(static_cast<size_t>(nc),
                                     std::vector<cplx>(static_cast<size_t>(nl)));
  if (cols <= rows) {
    for (int j = 0; j < nc; ++j)
      for (int i = 0; i < nl; ++i) col[j][i] = a[static_cast<size_t>(i) * cols + j];
  } else {
    for (int j = 0; j < nc; ++j)
      for (int i = 0; i < nl; ++i) col[j][i] = std::conj(a[static_cast<size_t>(j) * cols + i]);
  }

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int i = 0; i < nc; ++i) {
      for (int j = i + 1; j < nc; ++j) {
        double aii = 0.0, ajj = 0.0;
        cplx g(0.0, 0.0);
        for (int k = 0; k < nl; ++k) {
          aii += std::norm(col[i][k]);
          ajj += std::norm(col[j][k]);
          g += std::conj(col[i][k]) * col[j][k];
        }
        double gm = std::abs(g);
        if (gm <= kTol * std::sqrt(aii * ajj) || gm == 0.0) continue;
        rotated = true;
        cplx phase = g / gm;
        // Real Jacobi rotation on (c_i, e^{-i phi} c_j) to zero the coupling.
        double zeta = (ajj - aii) / (2.0 * gm);
        double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        double cs = 1.0 / std::sqrt(1.0 + t * t);
        double sn = t * cs;
        for (int k = 0; k < nl; ++k) {
          cplx x = col[i][k];
          cplx y = col[j][k] * std::conj(phase);
          col[i][k] = cs * x - sn * y;
          col[j][k] = (sn * x + cs * y) * phase;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(static_cast<size_t>(nc));
  for (int j = 0; j < nc; ++j) {
    double s = 0.0;
    for (int k = 0; k < nl; ++k) s += std::norm(col[j][k]);
    sv[static_cast<size_t>(j)] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

double smallest_singular_value(int rows, int cols, const cplx* a) {
  return singular_values(rows, cols, a).back();
}

}  // namespace gobs
