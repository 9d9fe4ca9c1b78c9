#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gobs {

// Arbitrary-precision signed integer.
//
// Magnitude is a little-endian vector of 32-bit limbs without leading zeros;
// the sign is -1, 0 or +1 and the magnitude is empty exactly when the value
// is zero. Division truncates toward zero (C semantics); floor_div rounds
// toward minus infinity.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design
  static BigInt from_i128(__int128 v);
  static BigInt from_decimal(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }
  size_t limbs() const { return mag_.size(); }

  bool fits_i64() const;
  long long as_i64() const;  // pre: fits_i64()
  double to_double() const;
  std::string to_string() const;

  BigInt abs() const;
  BigInt operator-() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // q = trunc(a/b), r = a - q*b; |r| < |b|, sign(r) = sign(a). b must be nonzero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  friend BigInt floor_div(const BigInt& a, const BigInt& b);
  friend BigInt gcd(const BigInt& a, const BigInt& b);  // always >= 0

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

 private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // pre: |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace gobs
