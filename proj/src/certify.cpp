#include "gobs/certify.hpp"

#include <cmath>
#include <sstream>

#include "gobs/errors.hpp"
#include "gobs/io.hpp"

namespace gobs {

namespace {

long long mod_inverse(long long a, long long m) {
  long long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    long long qq = r / new_r;
    t -= qq * new_t;
    std::swap(t, new_t);
    r -= qq * new_r;
    std::swap(r, new_r);
  }
  return ((t % m) + m) % m;
}

// The column group with index s has its cancellation constraint shifted by
// s*p/mu = -s*k/mu (mod 1). A feasible witness needs S = q-p+2 groups whose
// shift positions fit together with the constancy region; that forces the
// positions to be a consecutive run of multiples of 1/mu. Anchoring the run
// to end at position 0 gives groups s_t = t * k^{-1} (mod mu), t = 0..S-1,
// which for k = 1 is exactly the plain index range s = 0..q-p+1.
std::vector<long long> group_run(const ObstructionParams& P, long long S) {
  long long kinv = mod_inverse(P.k, P.mu);
  std::vector<long long> groups;
  groups.reserve(static_cast<size_t>(S));
  for (long long t = 0; t < S; ++t) groups.push_back((t * kinv) % P.mu);
  return groups;
}

CircleIntervalSet feasible_set(int n, const ObstructionParams& P, const Rational& offset,
                               long long S) {
  Rational ne = Rational(n) * offset;
  CircleIntervalSet region =
      offset.is_negative() ? CircleIntervalSet::interval(Rational(0), Rational(1) + ne)
                           : CircleIntervalSet::interval(ne, Rational(1));
  CircleIntervalSet F = region;
  for (long long t = 1; t < S; ++t) {
    F = circle_intersect(F, circle_shift(region, Rational(-t, P.mu)));
    if (F.empty()) break;
  }
  return F;
}

}  // namespace

WitnessPoint find_x0(int n, const ObstructionParams& P, const Rational& b) {
  if (n < 1) throw precondition_error("find_x0 needs n >= 1");
  // exact offset of rb from the integer p: equals {rb} whenever |rb - p| <= 1/2
  Rational offset = Rational(P.r) * b - Rational(P.p);
  Rational bound(P.mu - P.k - 1, static_cast<long long>(n) * P.mu);
  if (offset.abs() > bound) {
    throw precondition_error("find_x0: b outside the hyperbolic segment");
  }

  WitnessPoint w;
  w.groups = P.q - P.p + 2;
  w.feasible = feasible_set(n, P, offset, w.groups);
  if (w.feasible.empty()) {
    // proof-side ambiguity: retry with one group fewer rather than guessing
    CircleIntervalSet reduced = feasible_set(n, P, offset, w.groups - 1);
    if (reduced.empty()) {
      throw infeasible_witness("find_x0: empty feasible set for both index ranges");
    }
    w.feasible = reduced;
    w.groups -= 1;
    w.reduced_range = true;
  }
  w.group_indices = group_run(P, w.groups);
  w.scaled_x0 = w.feasible.largest_arc().midpoint;
  w.x0 = w.scaled_x0 / Rational(P.r);
  return w;
}

Certificate build_certificate(int n, const ObstructionParams& P, const Rational& b) {
  WitnessPoint w = find_x0(n, P, b);

  Certificate cert;
  cert.n = n;
  cert.params = P;
  cert.b = b;
  cert.a = Rational(P.p, P.q) / b;
  cert.x0 = w.x0;
  cert.S = w.groups;
  cert.reduced_range = w.reduced_range;
  cert.rank_bound = P.p - 1;

  LatticeParams lat = LatticeParams::create(cert.a, cert.b);
  ZZMatrix phi = zz_matrix(n, lat, ZZPoint::create(cert.x0, Rational(0)));
  cert.frobenius = phi.frobenius();
  cert.tau = sigma_zero_tol(cert.frobenius);

  // group sums g_t = sum_l phi_{l mu + s_t}(x0, 0) straight from the columns;
  // identical by definition to column_group_sum at the shifted argument
  cert.groups = w.group_indices;
  std::vector<std::vector<cplx>> g(static_cast<size_t>(cert.S),
                                   std::vector<cplx>(static_cast<size_t>(P.p)));
  for (long long t = 0; t < cert.S; ++t) {
    long long s = cert.groups[static_cast<size_t>(t)];
    for (long long row = 0; row < P.p; ++row) {
      cplx acc(0.0, 0.0);
      for (long long l = 0; l < P.r; ++l) acc += phi.at(row, l * P.mu + s);
      g[static_cast<size_t>(t)][static_cast<size_t>(row)] = acc;
    }
    cert.K.push_back(g[static_cast<size_t>(t)][0]);
    if (std::abs(cert.K.back()) <= cert.tau) {
      throw degenerate_constant(s, "group constant K for column group " + std::to_string(s) +
                                       " vanishes numerically");
    }
  }

  // Phi v_t = g_t / K_t; unit residual measures distance to delta_0.
  double worst_unit = 0.0;
  for (long long t = 0; t < cert.S; ++t) {
    double acc = 0.0;
    for (long long row = 0; row < P.p; ++row) {
      cplx v = g[static_cast<size_t>(t)][static_cast<size_t>(row)] / cert.K[static_cast<size_t>(t)];
      if (row == 0) v -= cplx(1.0, 0.0);
      acc += std::norm(v);
    }
    cert.unit_residuals.push_back(std::sqrt(acc));
    worst_unit = std::max(worst_unit, cert.unit_residuals.back());
  }

  double worst_kernel = 0.0;
  for (long long t = 1; t < cert.S; ++t) {
    // kernel vector v_t - v_0: 1/K_t on columns {l mu + s_t}, -1/K_0 on {l mu}
    long long s = cert.groups[static_cast<size_t>(t)];
    std::vector<cplx> vec(static_cast<size_t>(P.q), cplx(0.0, 0.0));
    for (long long l = 0; l < P.r; ++l) {
      vec[static_cast<size_t>(l * P.mu + s)] = cplx(1.0, 0.0) / cert.K[static_cast<size_t>(t)];
      vec[static_cast<size_t>(l * P.mu)] = -cplx(1.0, 0.0) / cert.K[0];
    }
    cert.kernel_vectors.push_back(std::move(vec));
    double acc = 0.0;
    for (long long row = 0; row < P.p; ++row) {
      cplx v = g[static_cast<size_t>(t)][static_cast<size_t>(row)] / cert.K[static_cast<size_t>(t)] -
               g[0][static_cast<size_t>(row)] / cert.K[0];
      acc += std::norm(v);
    }
    cert.kernel_residuals.push_back(std::sqrt(acc));
    worst_kernel = std::max(worst_kernel, cert.kernel_residuals.back());
  }
  cert.kernel_dim = cert.S - 1;
  cert.residual_max = std::max(worst_unit, worst_kernel);
  cert.sigma_min = smallest_singular_value(phi);

  std::string why;
  if (worst_unit > cert.tau) why = "unit residual above tau";
  if (why.empty() && worst_kernel > cert.tau) why = "kernel residual above tau";
  if (why.empty() && cert.sigma_min > cert.tau) why = "sigma_min above tau";
  if (why.empty() && cert.kernel_dim < P.q - P.p + 1) {
    why = "witnessed kernel dimension below q - p + 1";
  }
  if (why.empty() && cert.reduced_range) why = "reduced-range index set";
  if (why.empty()) {
    cert.status = Certificate::Status::verified;
  } else {
    cert.status = Certificate::Status::failed;
    cert.reason = why;
  }
  return cert;
}

CertifyOutcome certify_nonframe(int n, const Rational& a, const Rational& b) {
  if (!(a > Rational(0)) || !(b > Rational(0))) {
    throw precondition_error("certify_nonframe needs a, b > 0");
  }
  Rational ab = a * b;
  NotInH miss;
  miss.a = a;
  miss.b = b;
  miss.ab = ab;
  if (!(ab < Rational(1)) || !(Rational(1, 2) < ab)) {
    miss.detail = "density " + ab.to_string() + " outside (1/2, 1)";
    return miss;
  }
  if (!ab.num().fits_i64() || !ab.den().fits_i64()) {
    throw precondition_error("certify_nonframe: density p/q out of range");
  }
  long long p = ab.num().as_i64();
  long long q = ab.den().as_i64();
  long long k = q - p;
  for (long long mu = 3; mu <= q / 2; ++mu) {
    if (q % mu != 0) continue;
    long long r = q / mu;
    if (r < 2) continue;
    miss.factorizations.emplace_back(r, mu);
    if (k < 1 || k > mu - 2) continue;
    // gcd(k, mu) = gcd(k, r) = 1 follows from gcd(p, q) = 1
    ObstructionParams P = ObstructionParams::create(mu, r, k);
    HyperbolicSegment seg = segment_H(P, n);
    if (seg.b_lo <= b && b <= seg.b_hi) {
      return build_certificate(n, P, b);
    }
  }
  miss.detail = miss.factorizations.empty()
                    ? "q = " + std::to_string(q) + " has no factorization r*mu, r >= 2, mu >= 3"
                    : "no segment on ab = " + ab.to_string() + " contains b";
  return miss;
}

std::string to_record(const Certificate& cert) {
  std::ostringstream os;
  os << "format = gobs-certificate/1\n";
  os << "status = " << (cert.verified() ? "verified" : "failed") << "\n";
  if (!cert.reason.empty()) os << "reason = " << cert.reason << "\n";
  os << "n = " << cert.n << "\n";
  os << "mu = " << cert.params.mu << "\n";
  os << "r = " << cert.params.r << "\n";
  os << "k = " << cert.params.k << "\n";
  os << "p = " << cert.params.p << "\n";
  os << "q = " << cert.params.q << "\n";
  os << "a = " << cert.a.to_string() << "\n";
  os << "b = " << cert.b.to_string() << "\n";
  os << "x0 = " << cert.x0.to_string() << "\n";
  os << "gamma0 = 0\n";
  os << "S = " << cert.S << "\n";
  os << "reduced_range = " << (cert.reduced_range ? 1 : 0) << "\n";
  os << "groups = ";
  for (size_t t = 0; t < cert.groups.size(); ++t) {
    if (t) os << ",";
    os << cert.groups[t];
  }
  os << "\n";
  for (size_t t = 0; t < cert.K.size(); ++t) {
    os << "K_" << t << "_re = " << format_double17(cert.K[t].real()) << "\n";
    os << "K_" << t << "_im = " << format_double17(cert.K[t].imag()) << "\n";
  }
  for (size_t s = 0; s < cert.kernel_residuals.size(); ++s) {
    os << "kernel_residual_" << (s + 1) << " = " << format_double(cert.kernel_residuals[s])
       << "\n";
  }
  os << "residual_max = " << format_double(cert.residual_max) << "\n";
  os << "sigma_min = " << format_double(cert.sigma_min) << "\n";
  os << "frobenius = " << format_double(cert.frobenius) << "\n";
  os << "tau = " << format_double(cert.tau) << "\n";
  os << "kernel_dim = " << cert.kernel_dim << "\n";
  os << "rank_bound = " << cert.rank_bound << "\n";
  return os.str();
}

}  // namespace gobs
