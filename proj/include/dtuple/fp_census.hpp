#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dtuple/fq.hpp"
#include "dtuple/rational.hpp"

namespace dtuple {

/// Index-based arithmetic of a finite field for exhaustive sweeps. Element 0
/// is the additive identity. Prime fields compute directly; extension fields
/// carry precomputed addition and multiplication tables.
class CensusField {
 public:
  static constexpr std::uint64_t kMaxExtensionOrder = 2048;

  static CensusField prime(std::uint64_t p);
  static CensusField extension(const FqFieldPtr& field);
  /// prime(p) for f = 1, extension(fq_construct(p, f)) otherwise.
  static CensusField of(std::uint64_t p, unsigned f);

  std::uint64_t order() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return prime_ ? a * b % q_ : mul_[a * q_ + b];
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return prime_ ? (a + b) % q_ : add_[a * q_ + b];
  }
  /// Image of an integer in the prime subfield.
  std::uint64_t embed(std::int64_t n) const;

 private:
  CensusField() = default;
  bool prime_ = true;
  std::uint64_t q_ = 0;
  std::uint64_t p_ = 0;
  unsigned f_ = 1;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> add_;
};

/// Membership bitmap of the squares {x^2 : x in F_q}, zero included.
class SquareTable {
 public:
  explicit SquareTable(const CensusField& field);
  std::uint64_t field_order() const { return q_; }
  bool contains(std::uint64_t x) const { return squares_[x]; }
  std::uint64_t size() const { return count_; }

 private:
  std::uint64_t q_;
  std::uint64_t count_ = 0;
  std::vector<bool> squares_;
};

struct CensusBreakdown {
  std::uint64_t q = 0;
  std::int64_t r = 0;
  unsigned m = 0;
  std::uint64_t total = 0;
  std::uint64_t boundary = 0;  // some coordinate is 0
  std::uint64_t offdiag = 0;   // all coordinates nonzero, some a_i a_j + r = 0
  std::uint64_t interior = 0;  // all coordinates and all a_i a_j + r nonzero
};

struct CensusOptions {
  std::uint64_t budget = 1'000'000'000;  // maximum number of tuples q^m
  unsigned jobs = 1;
};

/// All pairwise a_i a_j + r lie in the square table.
bool is_dr_tuple(std::span<const std::uint64_t> tuple, std::uint64_t r, const CensusField& field,
                 const SquareTable& table);

/// Exhaustive count of D(r) m-tuples over the field, split into boundary,
/// off-diagonal and interior classes.
CensusBreakdown census(const CensusField& field, std::int64_t r, unsigned m, const CensusOptions& options = {});

/// Literal sum of Legendre symbols of a2 c^2 + a1 c + a0 over c in F_p.
std::int64_t conic_sum_direct(std::int64_t a2, std::int64_t a1, std::int64_t a0, std::uint64_t p);

/// No D(r) triple over F_3 has all coordinates nonzero. Requires r = 1 mod 3.
bool z3_structure_check(std::int64_t r);

/// |total/q^m - 2^{-C(m,2)}| computed from the census.
Rational asymptotic_gap(const CensusField& field, std::int64_t r, unsigned m, const CensusOptions& options = {});

}  // namespace dtuple
