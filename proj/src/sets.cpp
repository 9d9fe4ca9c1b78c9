#include "gobs/sets.hpp"

#include <numeric>

#include "gobs/errors.hpp"

namespace gobs {

ObstructionParams ObstructionParams::create(long long mu, long long r, long long k) {
  if (mu < 3 || r < 2 || k < 1 || k > mu - 2) {
    throw precondition_error("obstruction params out of range");
  }
  if (std::gcd(k, mu) != 1 || std::gcd(k, r) != 1) {
    throw precondition_error("obstruction params need gcd(k,mu) = gcd(k,r) = 1");
  }
  ObstructionParams o;
  o.mu = mu;
  o.r = r;
  o.k = k;
  o.p = r * mu - k;
  o.q = r * mu;
  o.a0 = Rational(1, mu);
  o.b0 = Rational(mu) - Rational(k, r);
  if (std::gcd(o.p, o.q) != 1) throw precondition_error("derived p, q not coprime");
  Rational density = o.a0 * o.b0;
  if (!(Rational(1, 2) < density && density < Rational(1))) {
    throw precondition_error("derived density outside (1/2, 1)");
  }
  return o;
}

GrochenigParams GrochenigParams::create(long long mu, long long nu, long long r, long long j) {
  if (mu < 1 || nu < 1 || r < 2 || j < 1 || j > r - 1) {
    throw precondition_error("grochenig params out of range");
  }
  GrochenigParams g;
  g.mu = mu;
  g.nu = nu;
  g.r = r;
  g.j = j;
  g.p = r * nu + j;
  g.q = r * mu;
  if (std::gcd(g.p, g.q) != 1) throw precondition_error("grochenig p, q not coprime");
  if (!(g.q - g.mu + 1 < g.p && g.p < g.q)) {
    throw precondition_error("grochenig constraint q - mu + 1 < p < q violated");
  }
  g.a0 = Rational(1, mu);
  g.b0 = Rational(g.p, r);
  return g;
}

std::vector<ObstructionParams> enum_P(const Rational& b_max, long long r_max) {
  if (b_max < Rational(2) || r_max < 2) {
    throw precondition_error("enum_P needs b_max >= 2 and r_max >= 2");
  }
  std::vector<ObstructionParams> out;
  // b0 >= mu/2 + 1, so mu <= 2(b_max - 1)
  long long mu_cap = ((b_max - Rational(1)) * Rational(2)).floor().as_i64();
  for (long long mu = 3; mu <= mu_cap; ++mu) {
    for (long long r = 2; r <= r_max; ++r) {
      for (long long k = 1; k <= mu - 2; ++k) {
        if (std::gcd(k, mu) != 1 || std::gcd(k, r) != 1) continue;
        if (Rational(mu) - Rational(k, r) > b_max) continue;
        out.push_back(ObstructionParams::create(mu, r, k));
      }
    }
  }
  return out;
}

std::vector<GrochenigParams> enum_P_grochenig(const Rational& b_max, long long r_max) {
  if (b_max < Rational(2) || r_max < 2) {
    throw precondition_error("enum_P_grochenig needs b_max >= 2 and r_max >= 2");
  }
  std::vector<GrochenigParams> out;
  long long mu_cap = (b_max * Rational(2)).floor().as_i64() + 1;
  for (long long mu = 1; mu <= mu_cap; ++mu) {
    for (long long r = 2; r <= r_max; ++r) {
      long long q = r * mu;
      for (long long nu = 1; nu < mu; ++nu) {
        for (long long j = 1; j <= r - 1; ++j) {
          long long p = r * nu + j;
          if (!(q - mu + 1 < p && p < q)) continue;
          if (std::gcd(p, q) != 1) continue;
          if (Rational(p, r) > b_max) continue;
          out.push_back(GrochenigParams::create(mu, nu, r, j));
        }
      }
    }
  }
  return out;
}

HyperbolicSegment segment_H(const ObstructionParams& params, int n, bool widen) {
  if (n < 1) throw precondition_error("segment_H needs n >= 1");
  HyperbolicSegment s;
  s.center = params;
  s.n = n;
  s.widened = widen;
  long long w = widen ? params.mu - params.k : params.mu - params.k - 1;
  s.half_width = Rational(w, static_cast<long long>(n) * params.q);
  s.b_lo = params.b0 - s.half_width;
  s.b_hi = params.b0 + s.half_width;
  s.ab = Rational(params.p, params.q);
  return s;
}

bool in_old_hyperbolas(int n, const Rational& a, const Rational& b) {
  if (!(a > Rational(0)) || !(b > Rational(0))) return false;
  Rational ab = a * b;
  if (!(ab < Rational(1))) return false;
  if (!(b > Rational(3, 2))) return false;
  if (!ab.den().fits_i64()) return false;
  long long q = ab.den().as_i64();
  return signed_frac(b).abs() <= Rational(1, static_cast<long long>(n) * q);
}

GhoshSelvanSegment ghosh_selvan_segment(long long m, long long k) {
  if (m < 1 || k <= m) throw precondition_error("ghosh_selvan_segment needs k > m >= 1");
  GhoshSelvanSegment s;
  s.m = m;
  s.k = k;
  s.a0 = Rational(1, 2 * m + 1);
  s.b0 = Rational(2 * k + 1, 2);
  s.ab = s.a0 * s.b0;
  if (!(s.ab < Rational(1))) {
    throw precondition_error("ghosh_selvan_segment needs a0*b0 < 1");
  }
  s.half_width = Rational(k - m, 2 * (2 * m + 1));
  s.b_lo = s.b0 - s.half_width;
  s.b_hi = s.b0 + s.half_width;
  return s;
}

std::optional<long long> tile_of(const Rational& a, const Rational& b) {
  if (!(a > Rational(0)) || !(b > Rational(0))) return std::nullopt;
  if (!(a * b < Rational(1))) return std::nullopt;
  // b(1-a) <= N and N <= b(1+a) - 1; smallest admissible N >= 2 wins
  Rational lo = b * (Rational(1) - a);
  Rational hi = b * (Rational(1) + a) - Rational(1);
  long long n_lo = lo.is_integer() ? lo.floor().as_i64() : lo.floor().as_i64() + 1;
  long long n_hi = hi.floor().as_i64();
  long long n = std::max<long long>(2, n_lo);
  if (n > n_hi) return std::nullopt;
  return n;
}

GapReport local_gaps(const ObstructionParams& params) {
  GapReport g;
  g.params = params;
  g.N = params.b0.floor().as_i64();
  g.M = params.mu - g.N;
  g.X = params.r * g.M - params.k;
  g.Y = params.k - params.r * (g.M - 1);
  g.lower_gap = params.b0 - Rational(g.N);
  g.upper_gap = Rational(g.N + 1) - params.b0;
  g.lower_ok = g.lower_gap >= Rational(params.mu - g.N, params.mu - 1);
  g.upper_applicable = params.mu >= g.N + 2;
  g.upper_ok = !g.upper_applicable ||
               g.upper_gap >= Rational(params.mu - g.N - 1, params.mu - 3);
  g.corollary_ok = g.lower_gap >= Rational(1, g.N);
  g.band_ok = params.mu >= g.N + 1 && params.mu <= 2 * g.N + 1;
  return g;
}

ContainmentReport verify_containment(const Rational& b_max, long long r_max, int n,
                                     bool widen) {
  ContainmentReport rep;
  rep.n = n;
  rep.widened = widen;
  auto points = enum_P(b_max, r_max);
  rep.points = points.size();
  for (const auto& pt : points) {
    HyperbolicSegment seg = segment_H(pt, n, widen);
    GapReport gap = local_gaps(pt);
    rep.gaps.push_back(gap);
    if (!(seg.b_lo <= pt.b0 && pt.b0 <= seg.b_hi)) {
      rep.violations.push_back({pt, pt.b0, "center outside its own segment"});
    }
    long long N = gap.N;
    for (const Rational& be : {seg.b_lo, seg.b_hi}) {
      // tile inequalities linearized along ab = const:
      // b(1+a) >= N+1  <=>  b >= N+1 - ab;  b(1-a) <= N  <=>  b <= N + ab
      Rational lower_margin = be - (Rational(N + 1) - seg.ab);
      Rational upper_margin = (Rational(N) + seg.ab) - be;
      for (const Rational& mgn : {lower_margin, upper_margin}) {
        if (!rep.min_margin_set || mgn < rep.min_margin) {
          rep.min_margin = mgn;
          rep.min_margin_set = true;
        }
      }
      if (lower_margin.is_negative()) {
        rep.violations.push_back({pt, be, "endpoint below tile boundary b(1+a) = N+1"});
      }
      if (upper_margin.is_negative()) {
        rep.violations.push_back({pt, be, "endpoint above tile boundary b(1-a) = N"});
      }
      Rational ae = seg.ab / be;
      if (!(ae * be < Rational(1))) {
        rep.violations.push_back({pt, be, "endpoint density not below 1"});
      }
    }
  }
  return rep;
}

}  // namespace gobs
