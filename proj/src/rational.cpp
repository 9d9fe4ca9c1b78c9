#include "gobs/rational.hpp"

#include <cstdlib>

#include "gobs/errors.hpp"

namespace gobs {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs128(i128 v) { return v < 0 ? ~static_cast<u128>(v) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Fast path guard: int64 payloads with |v| < 2^62, so cross products fit in
// i128 and sums of two cross products do too.
constexpr long long kFastMax = 1ll << 62;

bool fast_ok(const Rational& x, long long& n, long long& d) {
  if (!x.num().fits_i64() || !x.den().fits_i64()) return false;
  n = x.num().as_i64();
  d = x.den().as_i64();
  return n > -kFastMax && n < kFastMax && d < kFastMax;
}

}  // namespace

Rational Rational::from_i128(i128 n, i128 d) {
  // pre: d > 0
  u128 g = gcd128(uabs128(n), static_cast<u128>(d));
  if (g > 1) {
    bool neg = n < 0;
    u128 m = uabs128(n) / g;
    n = static_cast<i128>(m);
    if (neg) n = -n;
    d = static_cast<i128>(static_cast<u128>(d) / g);
  }
  return Rational(BigInt::from_i128(n), BigInt::from_i128(d), raw_tag{});
}

void Rational::normalize() {
  if (den_.is_zero()) throw precondition_error("rational with zero denominator");
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = gcd(num_, den_);
  if (!(g == BigInt(1))) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const { return Rational(-num_, den_, raw_tag{}); }

Rational operator+(const Rational& a, const Rational& b) {
  long long an, ad, bn, bd;
  if (fast_ok(a, an, ad) && fast_ok(b, bn, bd)) {
    i128 n = static_cast<i128>(an) * bd + static_cast<i128>(bn) * ad;
    i128 d = static_cast<i128>(ad) * bd;
    return Rational::from_i128(n, d);
  }
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  long long an, ad, bn, bd;
  if (fast_ok(a, an, ad) && fast_ok(b, bn, bd)) {
    return Rational::from_i128(static_cast<i128>(an) * bn, static_cast<i128>(ad) * bd);
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw precondition_error("rational division by zero");
  long long an, ad, bn, bd;
  if (fast_ok(a, an, ad) && fast_ok(b, bn, bd)) {
    i128 n = static_cast<i128>(an) * bd;
    i128 d = static_cast<i128>(ad) * bn;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational::from_i128(n, d);
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  long long an, ad, bn, bd;
  if (fast_ok(a, an, ad) && fast_ok(b, bn, bd)) {
    return static_cast<i128>(an) * bd < static_cast<i128>(bn) * ad;
  }
  return a.num_ * b.den_ < b.num_ * a.den_;
}

BigInt Rational::floor() const {
  if (is_integer()) return num_;
  return floor_div(num_, den_);
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw precondition_error("empty rational literal");
  size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    if (slash == 0 || slash + 1 >= s.size()) throw precondition_error("malformed rational");
    BigInt n = BigInt::from_decimal(s.substr(0, slash));
    BigInt d = BigInt::from_decimal(s.substr(slash + 1));
    if (d.is_zero()) throw precondition_error("rational with zero denominator");
    return Rational(std::move(n), std::move(d));
  }
  size_t dot = s.find('.');
  if (dot == std::string_view::npos) return Rational(BigInt::from_decimal(s));
  if (dot + 1 >= s.size() || dot == 0) throw precondition_error("malformed decimal");
  std::string digits(s.substr(0, dot));
  std::string_view frac = s.substr(dot + 1);
  if (digits == "-" || digits == "+") digits += "0";
  digits += frac;
  BigInt n = BigInt::from_decimal(digits);
  BigInt d(1);
  for (size_t i = 0; i < frac.size(); ++i) d *= BigInt(10);
  return Rational(std::move(n), std::move(d));
}

BigInt round_nearest(const Rational& x) {
  // floor(x + 1/2) = floor_div(2*num + den, 2*den)
  BigInt two(2);
  return floor_div(two * x.num() + x.den(), two * x.den());
}

Rational signed_frac(const Rational& x) { return x - Rational(round_nearest(x)); }

Rational mod1(const Rational& x) { return x - Rational(x.floor()); }

}  // namespace gobs
