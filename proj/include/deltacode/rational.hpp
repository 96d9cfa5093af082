#ifndef DELTACODE_RATIONAL_HPP
#define DELTACODE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace deltacode {

using BigInt = mpz_class;
/// Exact rational; GMP keeps it canonical (positive denominator, reduced).
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
std::string to_string(const BigInt& v);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);
/// Parses "p", "-p" or "p/q"; throws Error(parse_error) otherwise.
Rational parse_rational(const std::string& text);

BigInt floor_of(const Rational& v);
/// Converts to int64 or throws Error(overflow).
std::int64_t to_int64(const BigInt& v);

/// Largest s with s*s <= v, for v >= 0.
BigInt isqrt(const BigInt& v);
bool is_square_free(std::int64_t d);

/// An element a + b*sqrt(d) of the real quadratic field Q(sqrt d), d square
/// free and >= 2. A value with d == 0 is a plain rational (b == 0); it mixes
/// freely with any radicand. All comparisons are exact.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a, const Rational& b, std::int64_t d);

  static QuadExt sqrt_of(std::int64_t d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadExt conjugate() const;
  /// -1, 0 or 1.
  int sign() const;
  BigInt floor() const;
  double to_double() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }

  friend bool operator==(const QuadExt& l, const QuadExt& r);
  friend int compare(const QuadExt& l, const QuadExt& r) { return (l - r).sign(); }
  friend bool operator<(const QuadExt& l, const QuadExt& r) { return compare(l, r) < 0; }
  friend bool operator>(const QuadExt& l, const QuadExt& r) { return compare(l, r) > 0; }

 private:
  std::int64_t merged_radicand(const QuadExt& o) const;
  void normalize();

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 0;
};

/// "a + b*sqrt(d)" with the rational part omitted when zero.
std::string to_string(const QuadExt& v);

}  // namespace deltacode

#endif  // DELTACODE_RATIONAL_HPP
