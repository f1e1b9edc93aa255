#include "dtuple/arith.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "dtuple/errors.hpp"

namespace dtuple {

std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw ParameterError("modulus must be positive");
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  // -(a+1) avoids overflow at INT64_MIN
  std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) % m + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw ParameterError("zero has no inverse");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw ParameterError("legendre symbol needs an odd prime, got " + std::to_string(p));
  }
  std::uint64_t r = mod_reduce(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  for (std::uint64_t n = 2; n < p; ++n) {
    if (legendre(static_cast<std::int64_t>(n), p) == -1) return n;
  }
  throw ParameterError("no quadratic non-residue modulo " + std::to_string(p));
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      throw ParameterError("integer power overflows 64 bits");
    }
    out *= base;
  }
  return out;
}

}  // namespace dtuple
