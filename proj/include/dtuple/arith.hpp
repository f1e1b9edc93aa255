#pragma once

#include <cstdint>

namespace dtuple {

/// a mod m in [0, m) for any sign of a.
std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
/// Inverse of a modulo prime p; a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Deterministic for all 64-bit n.
bool is_prime(std::uint64_t n);

/// Legendre symbol (a/p) via Euler's criterion. Throws ParameterError unless p
/// is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// Smallest quadratic non-residue modulo the odd prime p.
std::uint64_t smallest_nonresidue(std::uint64_t p);

/// floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);

/// base^exponent, throwing ParameterError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

}  // namespace dtuple
