#include "dtuple/padic.hpp"

#include "dtuple/arith.hpp"
#include "dtuple/errors.hpp"

namespace dtuple {

unsigned vp(std::int64_t n, std::uint64_t p) {
  if (p < 2) throw ParameterError("valuation base must be at least 2");
  if (n == 0) throw ValuationUndefined("v_p(0) is undefined");
  unsigned __int128 m = n < 0 ? static_cast<unsigned __int128>(-(n + 1)) + 1 : n;
  unsigned k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

ResidueClass::ResidueClass(std::uint64_t p, unsigned precision, std::int64_t value)
    : p_(p), precision_(precision) {
  if (!is_prime(p)) throw ParameterError("residue class modulus must be a prime power");
  if (precision < 1) throw ParameterError("precision must be at least 1");
  modulus_ = checked_pow(p, precision);
  value_ = mod_reduce(value, modulus_);
}

std::string to_string(SquareStatus s) {
  switch (s) {
    case SquareStatus::Square: return "Square";
    case SquareStatus::NonSquare: return "NonSquare";
    case SquareStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

SquareStatus square_status(std::uint64_t p, unsigned precision, std::uint64_t value) {
  if (value == 0) return SquareStatus::Undetermined;
  unsigned k = 0;
  while (value % p == 0) {
    value /= p;
    ++k;
  }
  if (k >= precision) return SquareStatus::Undetermined;
  if (k % 2 == 1) return SquareStatus::NonSquare;
  // value is now the unit part, known modulo p^(precision - k)
  const unsigned known = precision - k;
  if (p != 2) {
    return legendre(static_cast<std::int64_t>(value % p), p) == 1 ? SquareStatus::Square
                                                                  : SquareStatus::NonSquare;
  }
  if (known >= 3) return value % 8 == 1 ? SquareStatus::Square : SquareStatus::NonSquare;
  if (known == 2 && value % 4 == 3) return SquareStatus::NonSquare;
  return SquareStatus::Undetermined;
}

SquareStatus square_status(const ResidueClass& c) {
  return square_status(c.p(), c.precision(), c.value());
}

RShape r_shape(std::int64_t r, std::uint64_t p) {
  if (r == 0) throw ParameterError("r = 0 is excluded (appending 0 extends any tuple)");
  if (p % 2 == 0 || !is_prime(p)) throw ParameterError("r_shape needs an odd prime");
  RShape out{};
  out.r = r;
  out.p = p;
  out.alpha = vp(r, p);
  std::int64_t s = r;
  for (unsigned i = 0; i < out.alpha; ++i) s /= static_cast<std::int64_t>(p);
  out.s = s;
  out.chi_s = legendre(s, p);
  out.chi_r = legendre(r, p);
  out.chi_neg_r = legendre(-1, p) * out.chi_r;
  return out;
}

}  // namespace dtuple
