#include "gobs/zak.hpp"

#include <cmath>
#include <numbers>

#include "gobs/bspline.hpp"
#include "gobs/errors.hpp"

namespace gobs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(const Rational& turns) {
  double t = mod1(turns).to_double();
  return std::polar(1.0, kTwoPi * t);
}

// Spline weights of one Zak sum: pairs (k, N_n(lambda (x - k))) over the
// exact support window lambda (x - k) in [0, n), i.e. k in (x - n/lambda, x].
struct ZakPlan {
  long long k_lo = 0;
  std::vector<double> w;
};

ZakPlan zak_plan(const PiecewisePolynomial& spl, const Rational& lambda, const Rational& x) {
  ZakPlan plan;
  Rational lo = x - Rational(spl.order) / lambda;  // exclusive
  long long k0 = lo.floor().as_i64() + 1;
  plan.k_lo = k0;
  for (Rational k(k0); k <= x; k += Rational(1)) {
    plan.w.push_back(bspline_eval(spl, lambda * (x - k)).to_double());
  }
  return plan;
}

}  // namespace

LatticeParams LatticeParams::create(const Rational& a, const Rational& b) {
  if (!(a > Rational(0)) || !(b > Rational(0))) {
    throw precondition_error("lattice parameters must be positive");
  }
  Rational ab = a * b;
  if (!ab.num().fits_i64() || !ab.den().fits_i64()) {
    throw precondition_error("lattice density p/q out of range");
  }
  LatticeParams lat;
  lat.a = a;
  lat.b = b;
  lat.p = ab.num().as_i64();
  lat.q = ab.den().as_i64();
  return lat;
}

ZZPoint ZZPoint::create(const Rational& x, const Rational& gamma) {
  return ZZPoint{mod1(x), mod1(gamma)};
}

double ZZMatrix::frobenius() const {
  double s = 0.0;
  for (const cplx& v : e) s += std::norm(v);
  return std::sqrt(s);
}

cplx zak_eval(int n, const Rational& lambda, const Rational& x, const Rational& gamma) {
  if (!(lambda > Rational(0))) throw precondition_error("zak_eval needs lambda > 0");
  const PiecewisePolynomial& spl = bspline(n);
  ZakPlan plan = zak_plan(spl, lambda, x);
  cplx sum(0.0, 0.0);
  for (size_t i = 0; i < plan.w.size(); ++i) {
    long long k = plan.k_lo + static_cast<long long>(i);
    sum += plan.w[i] * unit_phase(Rational(k) * gamma);
  }
  return std::sqrt(lambda.to_double()) * sum;
}

ZZMatrix zz_matrix(int n, const LatticeParams& lat, const ZZPoint& pt) {
  ZZMatrix m;
  m.n = n;
  m.lat = lat;
  m.pt = pt;
  m.p = lat.p;
  m.q = lat.q;
  m.e.assign(static_cast<size_t>(m.p * m.q), cplx(0.0, 0.0));

  const PiecewisePolynomial& spl = bspline(n);
  const Rational lambda = Rational(1) / lat.b;
  const double pref = 1.0 / std::sqrt(static_cast<double>(m.p) * lat.b.to_double());
  std::vector<cplx> omega(static_cast<size_t>(m.p));
  for (long long j = 0; j < m.p; ++j) {
    omega[static_cast<size_t>(j)] = std::polar(1.0, kTwoPi * static_cast<double>(j) /
                                                        static_cast<double>(m.p));
  }

  for (long long l = 0; l < m.q; ++l) {
    Rational u = pt.x - Rational(l * m.p, m.q);
    ZakPlan plan = zak_plan(spl, lambda, u);
    for (size_t i = 0; i < plan.w.size(); ++i) {
      if (plan.w[i] == 0.0) continue;
      long long k = plan.k_lo + static_cast<long long>(i);
      cplx base = plan.w[i] * unit_phase(Rational(k) * pt.gamma);
      long long km = ((k % m.p) + m.p) % m.p;
      for (long long row = 0; row < m.p; ++row) {
        m.at(row, l) += base * omega[static_cast<size_t>((km * row) % m.p)];
      }
    }
  }
  for (cplx& v : m.e) v *= pref;
  return m;
}

double smallest_singular_value(const ZZMatrix& m) {
  return smallest_singular_value(static_cast<int>(m.p), static_cast<int>(m.q), m.e.data());
}

double sigma_zero_tol(double frobenius_norm) {
  return 1e-9 * std::max(1.0, frobenius_norm);
}

GroupSum column_group_sum(int n, const LatticeParams& lat, long long mu, long long r,
                          const Rational& x) {
  if (mu < 1 || r < 1 || lat.q != r * mu) {
    throw precondition_error("column_group_sum needs q = r * mu");
  }
  GroupSum gs;
  gs.offset = Rational(r) * lat.b - Rational(lat.p);
  if (gs.offset.abs() * Rational(n) > Rational(1)) {
    throw precondition_error("column_group_sum: |rb - p| > 1/n, cancellation lemma silent");
  }
  Rational ne = Rational(n) * gs.offset;
  gs.region = gs.offset.is_negative()
                  ? CircleIntervalSet::interval(Rational(0), Rational(1) + ne)
                  : CircleIntervalSet::interval(ne, Rational(1));
  gs.in_region = gs.region.contains(x);

  const PiecewisePolynomial& spl = bspline(n);
  const Rational lambda = Rational(1) / lat.b;
  const double pref = 1.0 / std::sqrt(static_cast<double>(lat.p) * lat.b.to_double());
  std::vector<cplx> omega(static_cast<size_t>(lat.p));
  for (long long j = 0; j < lat.p; ++j) {
    omega[static_cast<size_t>(j)] = std::polar(1.0, kTwoPi * static_cast<double>(j) /
                                                        static_cast<double>(lat.p));
  }
  gs.v.assign(static_cast<size_t>(lat.p), cplx(0.0, 0.0));
  for (long long l = 0; l < r; ++l) {
    // phi_{l mu}(x/r, 0): argument x/r - (l mu) p / q = x/r - l p / r
    Rational u = (x - Rational(l * lat.p)) / Rational(r);
    ZakPlan plan = zak_plan(spl, lambda, u);
    for (size_t i = 0; i < plan.w.size(); ++i) {
      if (plan.w[i] == 0.0) continue;
      long long k = plan.k_lo + static_cast<long long>(i);
      long long km = ((k % lat.p) + lat.p) % lat.p;
      for (long long row = 0; row < lat.p; ++row) {
        gs.v[static_cast<size_t>(row)] +=
            plan.w[i] * omega[static_cast<size_t>((km * row) % lat.p)];
      }
    }
  }
  for (cplx& v : gs.v) v *= pref;
  gs.K = gs.v[0];
  return gs;
}

ScanResult scan(int n, const LatticeParams& lat, int M) {
  if (M < 2) throw precondition_error("scan needs M >= 2");
  ScanResult res;
  res.M = M;
  res.values.assign(static_cast<size_t>(M) * static_cast<size_t>(M), 0.0);
  res.min = 0.0;

  const PiecewisePolynomial& spl = bspline(n);
  const Rational lambda = Rational(1) / lat.b;
  const double pref = 1.0 / std::sqrt(static_cast<double>(lat.p) * lat.b.to_double());
  std::vector<cplx> omega(static_cast<size_t>(lat.p));
  for (long long j = 0; j < lat.p; ++j) {
    omega[static_cast<size_t>(j)] = std::polar(1.0, kTwoPi * static_cast<double>(j) /
                                                        static_cast<double>(lat.p));
  }

  bool first = true;
  std::vector<cplx> mat(static_cast<size_t>(lat.p * lat.q));
  for (int i = 0; i < M; ++i) {
    Rational x(i, M);
    // spline weights do not depend on gamma: plan once per column
    std::vector<ZakPlan> plans;
    plans.reserve(static_cast<size_t>(lat.q));
    for (long long l = 0; l < lat.q; ++l) {
      plans.push_back(zak_plan(spl, lambda, x - Rational(l * lat.p, lat.q)));
    }
    for (int j = 0; j < M; ++j) {
      Rational gamma(j, M);
      std::fill(mat.begin(), mat.end(), cplx(0.0, 0.0));
      for (long long l = 0; l < lat.q; ++l) {
        const ZakPlan& plan = plans[static_cast<size_t>(l)];
        for (size_t t = 0; t < plan.w.size(); ++t) {
          if (plan.w[t] == 0.0) continue;
          long long k = plan.k_lo + static_cast<long long>(t);
          cplx base = plan.w[t] * unit_phase(Rational(k) * gamma);
          long long km = ((k % lat.p) + lat.p) % lat.p;
          for (long long row = 0; row < lat.p; ++row) {
            mat[static_cast<size_t>(row * lat.q + l)] +=
                base * omega[static_cast<size_t>((km * row) % lat.p)];
          }
        }
      }
      for (cplx& v : mat) v *= pref;
      double sv = smallest_singular_value(static_cast<int>(lat.p), static_cast<int>(lat.q),
                                          mat.data());
      res.values[static_cast<size_t>(i) * M + j] = sv;
      if (first || sv < res.min) {
        res.min = sv;
        res.argmin_i = i;
        res.argmin_j = j;
        first = false;
      }
    }
  }
  return res;
}

}  // namespace gobs
