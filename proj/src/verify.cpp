#include "gobs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gobs/bspline.hpp"
#include "gobs/sets.hpp"
#include "gobs/zak.hpp"

namespace gobs {

namespace {

using PointKey = std::pair<std::string, std::string>;

PointKey key(const Rational& a, const Rational& b) {
  return {a.to_string(), b.to_string()};
}

SuiteResult suite_equivalence(const VerifyOptions& opt) {
  SuiteResult s;
  s.name = "P = P' (parameterization equivalence)";
  std::set<PointKey> lhs, rhs;
  for (const auto& p : enum_P(opt.b_max, opt.r_max)) lhs.insert(key(p.a0, p.b0));
  for (const auto& g : enum_P_grochenig(opt.b_max, opt.r_max)) rhs.insert(key(g.a0, g.b0));
  s.checked = lhs.size() + rhs.size();
  if (lhs != rhs) {
    s.failures = 1;
    s.detail = "point sets differ (" + std::to_string(lhs.size()) + " vs " +
               std::to_string(rhs.size()) + ")";
  } else {
    s.detail = std::to_string(lhs.size()) + " points";
  }
  return s;
}

SuiteResult suite_density(const VerifyOptions& opt) {
  SuiteResult s;
  s.name = "density bounds 1/2 < ab < 1 and (r-1)mu/r < b0 < mu";
  for (const auto& p : enum_P(opt.b_max, opt.r_max)) {
    ++s.checked;
    Rational ab = p.a0 * p.b0;
    bool ok = Rational(1, 2) < ab && ab < Rational(1) &&
              Rational((p.r - 1) * p.mu, p.r) < p.b0 && p.b0 < Rational(p.mu);
    if (!ok) ++s.failures;
  }
  return s;
}

SuiteResult suite_gaps(const VerifyOptions& opt) {
  SuiteResult s;
  s.name = "local gaps (lower bound, corollary, mu band)";
  for (const auto& p : enum_P(opt.b_max, opt.r_max)) {
    ++s.checked;
    GapReport g = local_gaps(p);
    bool ok = g.lower_ok && g.corollary_ok && g.band_ok && g.X >= 1 && g.Y >= 1 &&
              (!g.upper_applicable || g.upper_ok);
    if (!ok) ++s.failures;
  }
  return s;
}

SuiteResult suite_containment(const VerifyOptions& opt) {
  SuiteResult s;
  s.name = opt.widen ? "tile containment P in H in T (widened probe)"
                     : "tile containment P in H in T";
  for (int n : opt.orders) {
    ContainmentReport rep = verify_containment(opt.b_max, opt.r_max, n, opt.widen);
    s.checked += rep.points;
    s.failures += rep.violations.size();
    if (!rep.violations.empty() && s.detail.empty()) {
      s.detail = "first: n = " + std::to_string(n) + ", " + rep.violations.front().what;
    }
  }
  return s;
}

SuiteResult suite_partly_pou(const VerifyOptions&) {
  SuiteResult s;
  s.name = "partly partition of unity constancy";
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    for (long long m = 1; m <= 3; ++m) {
      for (long long mp = 1; mp <= 3; ++mp) {
        for (long long j = 1; j <= 2; ++j) {
          for (int sgn : {-1, 1}) {
            Rational c = Rational(m) + Rational(sgn * j, 2 * n * mp);
            if (!(c > Rational(0))) continue;
            if (signed_frac(c).abs() * Rational(n) > Rational(1)) continue;
            if (!seen.insert(c.to_string()).second) continue;
            ++s.checked;
            PouReport rep = verify_partly_pou(n, c, 48);
            bool ok = rep.pass;
            if (c.is_integer() && rep.constant != c) ok = false;
            if (!ok) {
              ++s.failures;
              if (s.detail.empty()) {
                s.detail = "n = " + std::to_string(n) + ", c = " + c.to_string();
              }
            }
          }
        }
      }
      // integer dilations: constant must equal c exactly
      Rational c(m);
      if (seen.insert(c.to_string()).second) {
        ++s.checked;
        PouReport rep = verify_partly_pou(n, c, 48);
        if (!rep.pass || rep.constant != c) ++s.failures;
      }
    }
  }
  return s;
}

SuiteResult suite_cancellation(const VerifyOptions& opt) {
  SuiteResult s;
  s.name = "column-group cancellation (n = 2)";
  const int n = 2;
  for (const auto& p : enum_P(opt.b_max, opt.r_max)) {
    if (p.q > opt.cancellation_q_cap) continue;
    HyperbolicSegment seg = segment_H(p, n);
    for (const Rational& b : {p.b0, p.b0 + seg.half_width / Rational(2),
                              p.b0 - seg.half_width / Rational(2)}) {
      Rational a = Rational(p.p, p.q) / b;
      LatticeParams lat = LatticeParams::create(a, b);
      Rational offset = Rational(p.r) * b - Rational(p.p);
      Rational ne = Rational(n) * offset;
      Rational lo = offset.is_negative() ? Rational(0) : ne;
      Rational hi = offset.is_negative() ? Rational(1) + ne : Rational(1);
      int probes = std::max(1, opt.cancellation_probes / 3);
      for (int t = 0; t < probes; ++t) {
        Rational x = lo + (hi - lo) * Rational(2 * t + 1, 2 * probes);
        GroupSum gs = column_group_sum(n, lat, p.mu, p.r, x);
        ++s.checked;
        if (!gs.in_region) {
          ++s.failures;
          continue;
        }
        double limit = 1e-10 * (1.0 + std::abs(gs.K));
        for (size_t row = 1; row < gs.v.size(); ++row) {
          if (std::abs(gs.v[row]) > limit) {
            ++s.failures;
            if (s.detail.empty()) {
              s.detail = "mu = " + std::to_string(p.mu) + ", r = " + std::to_string(p.r) +
                         ", k = " + std::to_string(p.k) + ", b = " + b.to_string();
            }
            break;
          }
        }
      }
    }
  }
  return s;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.pass(); });
}

VerifyReport run_verify_suites(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suites.push_back(suite_equivalence(opt));
  rep.suites.push_back(suite_density(opt));
  rep.suites.push_back(suite_gaps(opt));
  rep.suites.push_back(suite_containment(opt));
  rep.suites.push_back(suite_partly_pou(opt));
  rep.suites.push_back(suite_cancellation(opt));
  return rep;
}

void print_report(std::ostream& os, const VerifyReport& rep) {
  for (const auto& s : rep.suites) {
    os << (s.pass() ? "[PASS] " : "[FAIL] ") << s.name << ": " << s.checked << " checks, "
       << s.failures << " failures";
    if (!s.detail.empty()) os << " (" << s.detail << ")";
    os << "\n";
  }
  os << (rep.all_pass() ? "all suites passed" : "SUITE FAILURES PRESENT") << "\n";
}

}  // namespace gobs
