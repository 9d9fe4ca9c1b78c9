#include "gobs/bspline.hpp"

#include <map>
#include <mutex>

#include "gobs/errors.hpp"

namespace gobs {

namespace {

// F(j + t) = A_j + int_0^t piece_j(s) ds for t in [0, 1); A_j accumulates the
// full-piece integrals so F is continuous with F(0) = 0.
std::vector<std::vector<Rational>> antiderivative_pieces(const PiecewisePolynomial& spl) {
  std::vector<std::vector<Rational>> F;
  Rational acc(0);
  for (const auto& piece : spl.pieces) {
    std::vector<Rational> f;
    f.reserve(piece.size() + 1);
    f.push_back(acc);
    for (size_t i = 0; i < piece.size(); ++i) {
      f.push_back(piece[i] / Rational(static_cast<long long>(i + 1)));
    }
    Rational full(0);
    for (size_t i = 0; i < piece.size(); ++i) {
      full += piece[i] / Rational(static_cast<long long>(i + 1));
    }
    acc += full;
    F.push_back(std::move(f));
  }
  return F;
}

std::vector<Rational> poly_sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

}  // namespace

std::vector<std::vector<Rational>> antiderivative(const PiecewisePolynomial& spl) {
  return antiderivative_pieces(spl);
}

PiecewisePolynomial build_bspline(int n) {
  if (n < 1) throw precondition_error("B-spline order must be >= 1");
  PiecewisePolynomial cur;
  cur.order = 1;
  cur.pieces = {{Rational(1)}};
  for (int m = 1; m < n; ++m) {
    auto F = antiderivative_pieces(cur);  // m pieces; total integral is 1
    PiecewisePolynomial next;
    next.order = m + 1;
    next.pieces.resize(static_cast<size_t>(m) + 1);
    const std::vector<Rational> one{Rational(1)};
    const std::vector<Rational> zero{};
    for (int j = 0; j <= m; ++j) {
      // N_{m+1}(j + t) = F(j + t) - F(j - 1 + t); F is 0 left of the support
      // and identically 1 right of it.
      const std::vector<Rational>& hi = (j <= m - 1) ? F[static_cast<size_t>(j)] : one;
      const std::vector<Rational>& lo = (j >= 1) ? F[static_cast<size_t>(j) - 1] : zero;
      next.pieces[static_cast<size_t>(j)] = poly_sub(hi, lo);
    }
    cur = std::move(next);
  }
  return cur;
}

const PiecewisePolynomial& bspline(int n) {
  static std::mutex mu;
  static std::map<int, PiecewisePolynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_bspline(n)).first;
  return it->second;
}

Rational bspline_eval(const PiecewisePolynomial& spl, const Rational& x) {
  if (x.is_negative() || x >= Rational(spl.order)) return Rational(0);
  long long j = x.floor().as_i64();
  Rational t = x - Rational(j);
  const auto& piece = spl.pieces[static_cast<size_t>(j)];
  Rational v(0);
  for (size_t i = piece.size(); i-- > 0;) v = v * t + piece[i];
  return v;
}

Rational bspline_eval(int n, const Rational& x) { return bspline_eval(bspline(n), x); }

Rational periodization(int n, const Rational& c, const Rational& x) {
  if (!(c > Rational(0))) throw precondition_error("periodization needs c > 0");
  const PiecewisePolynomial& spl = bspline(n);
  // (x + k)/c in [0, n)  <=>  -x <= k < n*c - x
  Rational upper = Rational(n) * c - x;
  Rational mx = -x;
  long long k = mx.is_integer() ? mx.floor().as_i64() : mx.floor().as_i64() + 1;
  Rational sum(0);
  for (Rational kr(k); kr < upper; kr += Rational(1)) {
    sum += bspline_eval(spl, (x + kr) / c);
  }
  return sum;
}

CircleIntervalSet pou_region(int n, const Rational& c) {
  Rational sf = signed_frac(c);
  if (sf.abs() * Rational(n) > Rational(1)) {
    throw precondition_error("pou_region: |{c}| > 1/n, constancy region undefined");
  }
  if (sf.is_zero()) return CircleIntervalSet::full_circle();
  if (!sf.is_negative()) return CircleIntervalSet::interval(Rational(n) * sf, Rational(1));
  return CircleIntervalSet::interval(Rational(0), Rational(1) + Rational(n) * sf);
}

PouReport verify_partly_pou(int n, const Rational& c, int sample_count) {
  PouReport rep;
  rep.n = n;
  rep.c = c;
  rep.region = pou_region(n, c);
  if (sample_count < 1) throw precondition_error("sample_count must be >= 1");

  std::vector<Rational> xs;
  Rational total = rep.region.measure();
  for (const auto& [lo, hi] : rep.region.intervals()) {
    if (lo == hi) {
      xs.push_back(lo);
      continue;
    }
    Rational len = hi - lo;
    long long m = 1;
    if (!total.is_zero()) {
      Rational share = Rational(sample_count) * len / total;
      m = std::max<long long>(1, share.floor().as_i64());
    }
    for (long long t = 0; t < m; ++t) {
      xs.push_back(lo + len * Rational(2 * t + 1, 2 * m));
    }
  }

  bool first = true;
  for (const auto& x : xs) {
    Rational v = periodization(n, c, x);
    if (first) {
      rep.constant = v;
      first = false;
    } else if (v != rep.constant) {
      rep.mismatches.emplace_back(x, v);
    }
  }
  rep.samples = xs.size();
  rep.pass = rep.mismatches.empty() && !xs.empty();
  return rep;
}

}  // namespace gobs
