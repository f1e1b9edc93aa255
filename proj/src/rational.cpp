#include "dtuple/rational.hpp"

#include <ostream>

#include "dtuple/errors.hpp"

namespace dtuple {

namespace {

BigInt from_i64(long long n) {
  BigInt out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(n));
  return out;
}

}  // namespace

Rational::Rational(long long n) : value_(from_i64(n)) {}

Rational::Rational(unsigned long long n) : value_(static_cast<unsigned long>(n)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParameterError("not a rational: '" + text + "'");
  }
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return Rational(1) / pow(-exponent);
  BigInt n = ipow(value_.get_num(), static_cast<unsigned>(exponent));
  BigInt d = ipow(value_.get_den(), static_cast<unsigned>(exponent));
  return Rational(n, d);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  BigInt n = value_.get_num();
  const BigInt& d = value_.get_den();
  std::string out;
  if (n < 0) {
    out += '-';
    n = -n;
  }
  BigInt whole = n / d;
  BigInt rem = n % d;
  out += whole.get_str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      BigInt digit = rem / d;
      rem %= d;
      out += digit.get_str();
    }
  }
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw ParameterError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace dtuple
