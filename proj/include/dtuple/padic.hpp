#pragma once

#include <cstdint>
#include <string>

namespace dtuple {

/// Largest k with p^k | n. Throws ValuationUndefined for n = 0.
unsigned vp(std::int64_t n, std::uint64_t p);

/// An element of Z/p^N.
class ResidueClass {
 public:
  ResidueClass(std::uint64_t p, unsigned precision, std::int64_t value);

  std::uint64_t p() const { return p_; }
  unsigned precision() const { return precision_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t value() const { return value_; }

 private:
  std::uint64_t p_;
  unsigned precision_;
  std::uint64_t modulus_;
  std::uint64_t value_;
};

enum class SquareStatus : std::uint8_t { NonSquare = 0, Undetermined = 1, Square = 2 };

std::string to_string(SquareStatus s);

/// Whether the Z_p lifts of a residue class are squares: all of them
/// (Square), none (NonSquare), or some of each (Undetermined).
SquareStatus square_status(const ResidueClass& c);
/// Same classification for value mod p^precision without constructing a class.
SquareStatus square_status(std::uint64_t p, unsigned precision, std::uint64_t value);

/// r = p^alpha * s with p not dividing s, plus the quadratic characters of
/// s, r and -r modulo the odd prime p.
struct RShape {
  std::int64_t r;
  std::uint64_t p;
  unsigned alpha;
  std::int64_t s;
  int chi_s;
  int chi_r;
  int chi_neg_r;
};

RShape r_shape(std::int64_t r, std::uint64_t p);

}  // namespace dtuple
