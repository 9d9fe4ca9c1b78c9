#pragma once

#include <string>
#include <string_view>

#include "gobs/bigint.hpp"

namespace gobs {

// Exact rational number. Always normalized: den > 0, gcd(|num|, den) = 1,
// zero is 0/1. All arithmetic is exact; nothing here ever rounds.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(BigInt n, BigInt d);

  // "p/q", integer, or exact decimal ("2.5" -> 5/2). Throws precondition_error.
  static Rational parse(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_integer() const;

  Rational abs() const { return is_negative() ? -*this : *this; }
  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // b != 0
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  BigInt floor() const;
  double to_double() const;
  std::string to_string() const;  // "n" or "n/d"

 private:
  BigInt num_;
  BigInt den_;

  void normalize();
  struct raw_tag {};
  Rational(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
  static Rational from_i128(__int128 n, __int128 d);
};

// Round to the nearest integer, halves up: R(x) = floor(x + 1/2).
BigInt round_nearest(const Rational& x);

// Signed fractional part {x} = x - R(x). With R as above this lies in
// [-1/2, 1/2), taking the value -1/2 exactly at half-integers.
Rational signed_frac(const Rational& x);

// x - floor(x), in [0, 1).
Rational mod1(const Rational& x);

}  // namespace gobs
