#pragma once

#include <utility>
#include <vector>

#include "gobs/circle_set.hpp"
#include "gobs/rational.hpp"

namespace gobs {

// Cardinal B-spline N_n as an exact piecewise polynomial. Piece j lives on
// [j, j+1) in the local coordinate t = x - j; pieces[j][i] is the coefficient
// of t^i. Support is [0, n): evaluation is 0 for x < 0 and x >= n. For n = 1
// this makes the window the right-open indicator of [0, 1), which keeps the
// partition of unity exact at every rational point (the closed indicator
// would sum to 2 at integers).
struct PiecewisePolynomial {
  int order = 0;
  std::vector<std::vector<Rational>> pieces;
};

// Exact construction via the running-integral form of the convolution
// recursion: N_{n+1}(x) = F_n(x) - F_n(x-1) with F_n the antiderivative.
PiecewisePolynomial build_bspline(int n);

// Cached accessor; thread-safe.
const PiecewisePolynomial& bspline(int n);

Rational bspline_eval(const PiecewisePolynomial& spl, const Rational& x);
Rational bspline_eval(int n, const Rational& x);

// Antiderivative pieces of spl with F(0) = 0, in the same local-coordinate
// layout, one piece per support interval. Exposes the integral form the
// construction uses so it can be cross-checked independently.
std::vector<std::vector<Rational>> antiderivative(const PiecewisePolynomial& spl);

// sum_k N_n((x + k)/c) over the finitely many k with (x+k)/c in [0, n). c > 0.
Rational periodization(int n, const Rational& c, const Rational& x);

// Constancy region of the dilated periodization (mod 1), valid when
// |{c}| <= 1/n: [n{c}, 1] for {c} >= 0, [0, 1 + n{c}] for {c} <= 0.
// Throws precondition_error when |{c}| > 1/n.
CircleIntervalSet pou_region(int n, const Rational& c);

struct PouReport {
  int n = 0;
  Rational c;
  CircleIntervalSet region;
  size_t samples = 0;
  bool pass = false;
  Rational constant;  // the observed constant (value at the first sample)
  std::vector<std::pair<Rational, Rational>> mismatches;  // (x, value)
};

// Samples deterministic rational points strictly inside the region (interval
// endpoints are avoided: for n = 1 the periodization is only right-continuous
// and the closed-region endpoints are measure-zero jump points) and checks
// that all values are exactly equal.
PouReport verify_partly_pou(int n, const Rational& c, int sample_count);

}  // namespace gobs
