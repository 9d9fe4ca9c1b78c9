// Acceptance suite. Runs each acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion; exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gobs/bspline.hpp"
#include "gobs/certify.hpp"
#include "gobs/io.hpp"
#include "gobs/sets.hpp"
#include "gobs/verify.hpp"
#include "gobs/zak.hpp"

using namespace gobs;

namespace {

struct Criterion {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Criterion> results;

void report(int id, bool pass, const std::string& detail) {
  results.push_back({id, pass, detail});
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
}

Rational rand_rational(std::mt19937_64& rng, long long span, long long den_max) {
  std::uniform_int_distribution<long long> den_dist(1, den_max);
  long long den = den_dist(rng);
  std::uniform_int_distribution<long long> num_dist(-span * den, span * den);
  return Rational(num_dist(rng), den);
}

// ---------------------------------------------------------------- criterion 1
void criterion_certificates() {
  auto t0 = std::chrono::steady_clock::now();
  size_t total = 0, ok = 0, failed_n1_endpoint = 0, failed_other = 0;
  std::string first_fail;
  for (const auto& pt : enum_P(Rational(31), 29)) {
    if (pt.q > 60) continue;
    for (int n : {1, 2, 3}) {
      HyperbolicSegment seg = segment_H(pt, n);
      for (int which = 0; which < 3; ++which) {
        const Rational& b = which == 0 ? seg.b_lo : which == 1 ? pt.b0 : seg.b_hi;
        ++total;
        Certificate c = build_certificate(n, pt, b);
        bool good = c.verified() && c.kernel_dim >= pt.q - pt.p + 1;
        if (good) {
          ++ok;
        } else if (n == 1 && which != 1) {
          ++failed_n1_endpoint;
        } else {
          ++failed_other;
          if (first_fail.empty()) {
            first_fail = " first unexpected: mu=" + std::to_string(pt.mu) +
                         " r=" + std::to_string(pt.r) + " k=" + std::to_string(pt.k) +
                         " n=" + std::to_string(n) + " b=" + b.to_string();
          }
        }
      }
    }
  }
  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  bool pass = total > 0 && ok == total;
  report(1, pass,
         "certificate suite (q <= 60, n in {1,2,3}, b in {b_lo, b0, b_hi}): " +
             std::to_string(ok) + "/" + std::to_string(total) + " verified, " +
             std::to_string(failed_n1_endpoint) + " n=1 endpoint failures, " +
             std::to_string(failed_other) + " other failures," + first_fail + " [" +
             std::to_string(dt) + " ms]");
}

// ---------------------------------------------------------------- criterion 2
void criterion_equivalence() {
  std::set<std::string> lhs, rhs;
  for (const auto& p : enum_P(Rational(15), 50)) {
    lhs.insert(p.a0.to_string() + "|" + p.b0.to_string());
  }
  for (const auto& g : enum_P_grochenig(Rational(15), 50)) {
    rhs.insert(g.a0.to_string() + "|" + g.b0.to_string());
  }
  bool pass = !lhs.empty() && lhs == rhs;
  report(2, pass,
         "enum_P vs enum_P_grochenig, b_max=15, r_max=50: " + std::to_string(lhs.size()) +
             " vs " + std::to_string(rhs.size()) + " points, exact set equality " +
             (pass ? "holds" : "FAILS"));
}

// ---------------------------------------------------------------- criterion 3
void criterion_containment() {
  size_t violations = 0, points = 0;
  for (int n : {1, 2, 3, 4}) {
    auto rep = verify_containment(Rational(30), 50, n);
    points += rep.points;
    violations += rep.violations.size();
  }
  auto widened = verify_containment(Rational(30), 50, 2, /*widen=*/true);
  bool strict_ok = violations == 0 && points > 0;
  bool widen_ok = !widened.violations.empty();
  std::string msg = "containment b_max=30, r_max=50, n in {1,2,3,4}: " +
                    std::to_string(violations) + " violations over " + std::to_string(points) +
                    " points (exact); widen probe found " +
                    std::to_string(widened.violations.size()) +
                    " violations (>=1 required), min widened margin " +
                    (widened.min_margin_set ? widened.min_margin.to_string() : "n/a");
  report(3, strict_ok && widen_ok, msg);
}

// ---------------------------------------------------------------- criterion 4
void criterion_gaps() {
  size_t checked = 0, bad = 0;
  for (const auto& p : enum_P(Rational(30), 50)) {
    GapReport g = local_gaps(p);
    ++checked;
    if (!g.lower_ok || !g.corollary_ok) ++bad;
  }
  Rational best(10);
  long long best_r = 0, best_k = 0;
  for (const auto& p : enum_P(Rational(5), 200)) {
    if (p.mu != 5) continue;
    GapReport g = local_gaps(p);
    if (g.N != 4) continue;
    if (g.lower_gap < best) {
      best = g.lower_gap;
      best_r = p.r;
      best_k = p.k;
    }
  }
  bool min_ok = best == Rational(1, 4) && best_r == 4 && best_k == 3;
  bool pass = checked > 0 && bad == 0 && min_ok;
  report(4, pass,
         "gap bounds: " + std::to_string(bad) + "/" + std::to_string(checked) +
             " violations; mu=5 N=4 min gap over r<=200 is " + best.to_string() + " at (r,k)=(" +
             std::to_string(best_r) + "," + std::to_string(best_k) + ") [expect 1/4 at (4,3)]");
}

// ---------------------------------------------------------------- criterion 5
void criterion_exact_identities() {
  std::mt19937_64 rng(20250808);
  size_t bad = 0, checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int i = 0; i < 125; ++i) {
      Rational x = rand_rational(rng, 3, 997);
      ++checked;
      if (periodization(n, Rational(1), x) != Rational(1)) ++bad;
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (long long c = 1; c <= 5; ++c) {
      for (int i = 0; i < 50; ++i) {
        Rational x = rand_rational(rng, 3, 499);
        ++checked;
        if (periodization(n, Rational(c), x) != Rational(c)) ++bad;
      }
    }
  }
  size_t pou_bad = 0, pou_checked = 0;
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
            ++pou_checked;
            PouReport rep = verify_partly_pou(n, c, 100);
            if (!rep.pass) ++pou_bad;
            if (c.is_integer() && rep.constant != c) ++pou_bad;
          }
        }
      }
    }
  }
  bool pass = bad == 0 && pou_bad == 0 && checked > 0 && pou_checked > 0;
  report(5, pass,
         "exact identities: PoU+dilation " + std::to_string(bad) + "/" +
             std::to_string(checked) + " failures; Lemma-constancy matrix " +
             std::to_string(pou_bad) + "/" + std::to_string(pou_checked) + " failures");
}

// ---------------------------------------------------------------- criterion 6
void criterion_zak_numerics() {
  std::mt19937_64 rng(424242);
  double worst_qp = 0.0;
  size_t samples = 0;
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + static_cast<int>(i % 3);
    Rational lambda = (i % 2) ? Rational(3, 8) : Rational(2, 5);
    Rational x = rand_rational(rng, 3, 499);
    Rational gamma = rand_rational(rng, 3, 499);
    cplx zx = zak_eval(n, lambda, x, gamma);
    cplx zx1 = zak_eval(n, lambda, x + Rational(1), gamma);
    cplx phase = std::polar(1.0, 2.0 * std::numbers::pi * mod1(gamma).to_double());
    worst_qp = std::max(worst_qp, std::abs(zx1 - phase * zx));
    worst_qp = std::max(worst_qp, std::abs(zak_eval(n, lambda, x, gamma + Rational(1)) - zx));
    ++samples;
  }
  bool qp_ok = worst_qp <= 1e-12;

  size_t canc_checked = 0, canc_bad = 0;
  double worst_rel = 0.0;
  const int n = 2;
  for (const auto& pt : enum_P(Rational(31), 29)) {
    if (pt.q > 60) continue;
    HyperbolicSegment seg = segment_H(pt, n);
    for (const Rational& b : {pt.b0, pt.b0 + seg.half_width / Rational(2),
                              pt.b0 - seg.half_width / Rational(2)}) {
      LatticeParams lat = LatticeParams::create(Rational(pt.p, pt.q) / b, b);
      Rational offset = Rational(pt.r) * b - Rational(pt.p);
      Rational ne = Rational(n) * offset;
      Rational lo = offset.is_negative() ? Rational(0) : ne;
      Rational hi = offset.is_negative() ? Rational(1) + ne : Rational(1);
      for (int t = 0; t < 17; ++t) {
        Rational x = lo + (hi - lo) * Rational(2 * t + 1, 34);
        GroupSum gs = column_group_sum(n, lat, pt.mu, pt.r, x);
        ++canc_checked;
        double limit = 1e-10 * (1.0 + std::abs(gs.K));
        for (size_t row = 1; row < gs.v.size(); ++row) {
          worst_rel = std::max(worst_rel, std::abs(gs.v[row]) / limit);
          if (std::abs(gs.v[row]) > limit) {
            ++canc_bad;
            break;
          }
        }
      }
    }
  }
  bool canc_ok = canc_bad == 0 && canc_checked > 0;
  report(6, qp_ok && canc_ok,
         "zak numerics: quasi-periodicity worst residual " + format_double(worst_qp) +
             " over " + std::to_string(2 * samples) + " checks (<= 1e-12); cancellation " +
             std::to_string(canc_bad) + "/" + std::to_string(canc_checked) +
             " probes above 1e-10*(1+|K|), worst ratio " + format_double(worst_rel));
}

// ---------------------------------------------------------------- criterion 7
void criterion_scan() {
  auto lat_bad = LatticeParams::create(Rational(1, 3), Rational(5, 2));
  ScanResult bad = scan(2, lat_bad, 64);
  bool zero_found = bad.min <= 1e-6 && bad.argmin_j == 0;

  auto lat_good = LatticeParams::create(Rational(1, 3), Rational(1, 2));
  ScanResult g32 = scan(2, lat_good, 32);
  ScanResult g64 = scan(2, lat_good, 64);
  // regression baseline recorded at the first run of this suite
  const double baseline = 1.9720265943665383;
  bool painless_ok = g32.min > 0.0 && std::abs(g64.min - g32.min) < 0.10 * g32.min;
  bool baseline_ok = std::abs(g32.min - baseline) <= 1e-9;
  report(7, zero_found && painless_ok && baseline_ok,
         "scan: (1/3,5/2,M=64) min " + format_double(bad.min) + " at (i,j)=(" +
             std::to_string(bad.argmin_i) + "," + std::to_string(bad.argmin_j) +
             ") [gamma=0 row required]; painless (1/3,1/2) min " + format_double(g32.min) +
             " -> " + format_double(g64.min) + " under refinement");
}

// ---------------------------------------------------------------- criterion 8
void criterion_figures() {
  auto pts = enum_P(Rational(15), 50);
  bool density_ok = !pts.empty();
  for (const auto& p : pts) {
    Rational ab(p.p, p.q);
    if (!(Rational(1, 2) < ab && ab < Rational(1))) density_ok = false;
  }
  // accumulation family (1/5, 5 - 1/r) for every admissible r <= 50
  bool family_ok = true;
  for (long long r = 2; r <= 50; ++r) {
    bool found = false;
    for (const auto& p : pts) {
      if (p.mu == 5 && p.k == 1 && p.r == r) found = true;
    }
    if (!found) family_ok = false;
  }
  // n = 2 vs n = 4: exact halving of every half-width
  auto segs2 = std::vector<HyperbolicSegment>();
  auto segs4 = std::vector<HyperbolicSegment>();
  for (const auto& p : pts) {
    segs2.push_back(segment_H(p, 2));
    segs4.push_back(segment_H(p, 4));
  }
  bool scaling_ok = segs2.size() == segs4.size() && !segs2.empty();
  for (size_t i = 0; i < segs2.size() && scaling_ok; ++i) {
    if (segs2[i].half_width != segs4[i].half_width * Rational(2)) scaling_ok = false;
  }
  report(8, density_ok && family_ok && scaling_ok,
         "figure parity: all ab in (1/2,1) " + std::string(density_ok ? "yes" : "NO") +
             "; accumulation family (1/5, 5-1/r), r<=50, present " +
             std::string(family_ok ? "yes" : "NO") + "; n=2 vs n=4 exact 2x half-width " +
             std::string(scaling_ok ? "yes" : "NO") + " (" + std::to_string(pts.size()) +
             " points)");
}

}  // namespace

int main() {
  criterion_certificates();
  criterion_equivalence();
  criterion_containment();
  criterion_gaps();
  criterion_exact_identities();
  criterion_zak_numerics();
  criterion_scan();
  criterion_figures();

  size_t failed = 0;
  for (const auto& c : results) {
    if (!c.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
