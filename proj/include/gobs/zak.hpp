#pragma once

#include <complex>
#include <vector>

#include "gobs/circle_set.hpp"
#include "gobs/rational.hpp"
#include "gobs/svd.hpp"

namespace gobs {

// Rationally oversampled lattice: a, b > 0 rational with a*b = p/q in lowest
// terms. p and q are derived on construction.
struct LatticeParams {
  Rational a;
  Rational b;
  long long p = 0;
  long long q = 0;

  static LatticeParams create(const Rational& a, const Rational& b);
};

// A point of the unit square; both coordinates are reduced mod 1.
struct ZZPoint {
  Rational x;
  Rational gamma;

  static ZZPoint create(const Rational& x, const Rational& gamma);
};

// p x q Zibulski-Zeevi matrix, row-major. Entry (k, l) is
// p^{-1/2} (Z_{1/b} N_n)(x - l p/q, gamma + k/p).
struct ZZMatrix {
  int n = 0;
  LatticeParams lat;
  ZZPoint pt;
  long long p = 0;
  long long q = 0;
  std::vector<cplx> e;

  cplx& at(long long k, long long l) { return e[static_cast<size_t>(k * q + l)]; }
  const cplx& at(long long k, long long l) const { return e[static_cast<size_t>(k * q + l)]; }
  double frobenius() const;
};

// Zak transform sqrt(lambda) * sum_k N_n(lambda (x - k)) e^{2 pi i k gamma}.
// Spline arguments stay exact rationals; spline values and the unit phases
// meet in double precision only in the final combination.
cplx zak_eval(int n, const Rational& lambda, const Rational& x, const Rational& gamma);

ZZMatrix zz_matrix(int n, const LatticeParams& lat, const ZZPoint& pt);

double smallest_singular_value(const ZZMatrix& m);

// sigma = 0 decision threshold: 1e-9 * max(1, ||Phi||_F).
double sigma_zero_tol(double frobenius_norm);

// Sum of every mu-th column of Phi(x/r, 0) starting at column 0:
// sum_{l=0}^{r-1} phi_{l mu}(x/r, 0). The x passed in is the scaled variable
// of the cancellation lemma; the constancy region below is expressed in it.
// offset is rb - p exactly (not the signed fractional part: for n = 1 the
// admissible offsets can exceed 1/2 in magnitude and rounding would pick the
// wrong integer). Requires q = r*mu and |offset| <= 1/n.
struct GroupSum {
  std::vector<cplx> v;
  cplx K;  // v[0]
  Rational offset;
  CircleIntervalSet region;
  bool in_region = false;
};

GroupSum column_group_sum(int n, const LatticeParams& lat, long long mu, long long r,
                          const Rational& x);

// Smallest singular value field over the closed grid {(i/M, j/M)}, i, j in
// 0..M-1. The grid contains gamma = 0, where the certificates live. Argmin
// ties break to the lexicographically smallest (i, j).
struct ScanResult {
  int M = 0;
  std::vector<double> values;  // values[i*M + j] at x = i/M, gamma = j/M
  double min = 0.0;
  int argmin_i = 0;
  int argmin_j = 0;
};

ScanResult scan(int n, const LatticeParams& lat, int M);

}  // namespace gobs
