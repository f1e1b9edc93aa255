#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace dtuple {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Equality is structural on the canonical form.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}  // NOLINT
  Rational(long long n);  // NOLINT
  Rational(unsigned long n) : value_(n) {}  // NOLINT
  Rational(unsigned long long n);  // NOLINT
  Rational(const BigInt& n) : value_(n) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  static Rational parse(const std::string& text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational pow(int exponent) const;

  /// "num/den", also for integers ("7/1").
  std::string str() const;
  double to_double() const { return value_.get_d(); }
  /// Fixed-point decimal expansion, truncated toward zero after `digits`.
  std::string decimal(int digits = 12) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^exponent for a non-negative exponent.
BigInt ipow(const BigInt& base, unsigned exponent);

}  // namespace dtuple
