#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gobs/rational.hpp"

namespace gobs {

// One obstruction point (a0, b0) = (1/mu, mu - k/r) with
// mu >= 3, r >= 2, 1 <= k <= mu-2, gcd(k, mu) = gcd(k, r) = 1,
// and the derived lattice data p = r*mu - k, q = r*mu.
struct ObstructionParams {
  long long mu = 0;
  long long r = 0;
  long long k = 0;
  long long p = 0;
  long long q = 0;
  Rational a0;
  Rational b0;

  static ObstructionParams create(long long mu, long long r, long long k);

  friend bool operator==(const ObstructionParams& a, const ObstructionParams& b) {
    return a.mu == b.mu && a.r == b.r && a.k == b.k;
  }
};

// The same points in the p = r*nu + j, q = r*mu parameterization.
struct GrochenigParams {
  long long mu = 0;
  long long nu = 0;
  long long r = 0;
  long long j = 0;
  long long p = 0;
  long long q = 0;
  Rational a0;
  Rational b0;

  static GrochenigParams create(long long mu, long long nu, long long r, long long j);
};

// All points with b0 <= b_max and r <= r_max, in (mu, r, k) lexicographic
// order. The set is infinite in r, so the cutoff is a required argument.
std::vector<ObstructionParams> enum_P(const Rational& b_max, long long r_max);
std::vector<GrochenigParams> enum_P_grochenig(const Rational& b_max, long long r_max);

// Hyperbolic segment around (a0, b0) on ab = p/q: |b - b0| <= (mu-k-1)/(n q).
// widen replaces mu-k-1 by mu-k (tightness probe).
struct HyperbolicSegment {
  ObstructionParams center;
  int n = 0;
  bool widened = false;
  Rational half_width;
  Rational b_lo;
  Rational b_hi;
  Rational ab;
};

HyperbolicSegment segment_H(const ObstructionParams& params, int n, bool widen = false);

// Membership in the integer-centered obstruction family:
// ab = p/q < 1, |{b}| <= 1/(n q), b > 3/2. Exact arithmetic.
bool in_old_hyperbolas(int n, const Rational& a, const Rational& b);

// Comparison segments for the hat spline (n fixed at 2):
// center (1/(2m+1), (2k+1)/2), half-width (k-m)/(2(2m+1)).
struct GhoshSelvanSegment {
  long long m = 0;
  long long k = 0;
  Rational a0;
  Rational b0;
  Rational half_width;
  Rational b_lo;
  Rational b_hi;
  Rational ab;
};

GhoshSelvanSegment ghosh_selvan_segment(long long m, long long k);

// The tile T_N containing (a, b): smallest N >= 2 with
// b(1+a) >= N+1, b(1-a) <= N, ab < 1; nullopt when there is none.
std::optional<long long> tile_of(const Rational& a, const Rational& b);

// Local gap data around integer b values for one obstruction point.
struct GapReport {
  ObstructionParams params;
  long long N = 0;  // floor(b0)
  long long M = 0;  // mu - N
  long long X = 0;  // r(mu - N) - k >= 1
  long long Y = 0;  // k - r(mu - N - 1), >= 1 iff b0 < N+1 (always here)
  Rational lower_gap;  // b0 - N
  Rational upper_gap;  // (N+1) - b0
  bool lower_ok = false;           // b0 - N >= (mu-N)/(mu-1)
  bool upper_applicable = false;   // mu >= N + 2
  bool upper_ok = false;           // (N+1) - b0 >= (mu-N-1)/(mu-3), when applicable
  bool corollary_ok = false;       // b0 not in [N, N + 1/N)
  bool band_ok = false;            // mu in {N+1, ..., 2N+1}
};

GapReport local_gaps(const ObstructionParams& params);

struct ContainmentViolation {
  ObstructionParams params;
  Rational b;       // offending endpoint
  std::string what;
};

struct ContainmentReport {
  int n = 0;
  bool widened = false;
  size_t points = 0;
  std::vector<ContainmentViolation> violations;
  // smallest slack of the two linearized tile inequalities over all endpoints
  Rational min_margin;
  bool min_margin_set = false;
  std::vector<GapReport> gaps;
};

// Exact verification that every enumerated point lies in its segment and
// both segment endpoints lie in the tile T_N, N = floor(b0). Violations are
// reported, not thrown.
ContainmentReport verify_containment(const Rational& b_max, long long r_max, int n,
                                     bool widen = false);

}  // namespace gobs
