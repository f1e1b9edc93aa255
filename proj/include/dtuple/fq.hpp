#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dtuple {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

/// Element of F_q = F_p[x]/(modulus), stored as f coefficients (low degree
/// first), each reduced mod p.
class FqElem {
 public:
  FqElem(FqFieldPtr field, std::vector<std::uint64_t> coeffs);

  const FqField& field() const { return *field_; }
  const FqFieldPtr& field_ptr() const { return field_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Base-p digits of the coefficient vector: sum coeffs[i] * p^i.
  std::uint64_t index() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem pow(std::uint64_t exponent) const;

  friend bool operator==(const FqElem& a, const FqElem& b);

 private:
  FqFieldPtr field_;
  std::vector<std::uint64_t> coeffs_;
};

class FqField : public std::enable_shared_from_this<FqField> {
 public:
  /// Upper bound on q accepted by fq_construct.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return f_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus coefficients, low degree first, length degree()+1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  FqElem zero() const;
  FqElem one() const;
  /// Image of an integer under Z -> F_p -> F_q.
  FqElem from_int(std::int64_t n) const;
  FqElem from_index(std::uint64_t index) const;
  std::vector<FqElem> elements() const;

  /// Reduces a coefficient vector of any length modulo the field modulus.
  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> poly) const;

 private:
  friend FqFieldPtr fq_construct(std::uint64_t p, unsigned f);
  FqField(std::uint64_t p, unsigned f, std::vector<std::uint64_t> modulus);

  std::uint64_t p_;
  unsigned f_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

/// F_{p^f} with the lexicographically smallest monic irreducible modulus
/// (coefficients compared from x^{f-1} down to x^0).
FqFieldPtr fq_construct(std::uint64_t p, unsigned f);

/// Monic polynomials over F_p, low degree first.
bool is_irreducible(const std::vector<std::uint64_t>& monic, std::uint64_t p);

/// Quadratic character on F_q via x^((q-1)/2).
int quad_char_fq(const FqElem& x);

}  // namespace dtuple
