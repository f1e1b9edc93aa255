#include "dtuple/fq.hpp"

#include <sstream>

#include "dtuple/arith.hpp"
#include "dtuple/errors.hpp"

namespace dtuple {

namespace {

void trim(std::vector<std::uint64_t>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

// Remainder of a by monic b over F_p (both low degree first).
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                    std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod(lead, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of n.
std::vector<std::uint64_t> monic_from_counter(std::uint64_t n, unsigned d, std::uint64_t p) {
  std::vector<std::uint64_t> poly(d + 1, 0);
  poly[d] = 1;
  for (unsigned i = 0; i < d; ++i) {
    poly[i] = n % p;
    n /= p;
  }
  return poly;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint64_t>& monic, std::uint64_t p) {
  const unsigned f = static_cast<unsigned>(monic.size() - 1);
  if (f == 0) return false;
  for (unsigned d = 1; d <= f / 2; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t n = 0; n < count; ++n) {
      if (poly_rem(monic, monic_from_counter(n, d, p), p).empty()) return false;
    }
  }
  return true;
}

FqField::FqField(std::uint64_t p, unsigned f, std::vector<std::uint64_t> modulus)
    : p_(p), f_(f), q_(checked_pow(p, f)), modulus_(std::move(modulus)) {}

FqFieldPtr fq_construct(std::uint64_t p, unsigned f) {
  if (p % 2 == 0 || !is_prime(p)) throw ParameterError("F_q needs an odd prime characteristic");
  if (f < 1) throw ParameterError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    if (q > FqField::kMaxOrder / p) throw ParameterError("field order exceeds desk-scale bound");
    q *= p;
  }
  // Enumerate lower coefficients with x^{f-1} as the most significant digit,
  // which is exactly the base-p counter order of monic_from_counter.
  for (std::uint64_t n = 0; n < q; ++n) {
    auto candidate = monic_from_counter(n, f, p);
    if (is_irreducible(candidate, p)) {
      return FqFieldPtr(new FqField(p, f, std::move(candidate)));
    }
  }
  throw InternalError("no irreducible polynomial found");
}

std::string FqField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = f_ + 1; i-- > 0;) {
    std::uint64_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<std::uint64_t> FqField::reduce(std::vector<std::uint64_t> poly) const {
  for (auto& c : poly) c %= p_;
  auto rem = poly_rem(std::move(poly), modulus_, p_);
  rem.resize(f_, 0);
  return rem;
}

FqElem FqField::zero() const { return FqElem(shared_from_this(), std::vector<std::uint64_t>(f_, 0)); }

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::from_int(std::int64_t n) const {
  std::vector<std::uint64_t> c(f_, 0);
  c[0] = mod_reduce(n, p_);
  return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::from_index(std::uint64_t index) const {
  if (index >= q_) throw ParameterError("element index out of range");
  std::vector<std::uint64_t> c(f_, 0);
  for (unsigned i = 0; i < f_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return FqElem(shared_from_this(), std::move(c));
}

std::vector<FqElem> FqField::elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

FqElem::FqElem(FqFieldPtr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw ParameterError("element without a field");
  if (coeffs_.size() != field_->degree()) throw ParameterError("coefficient vector has wrong length");
  for (auto& c : coeffs_) c %= field_->p();
}

bool FqElem::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::uint64_t FqElem::index() const {
  std::uint64_t out = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) out = out * field_->p() + coeffs_[i];
  return out;
}

static void require_same_field(const FqElem& a, const FqElem& b) {
  if (a.field_ptr() != b.field_ptr()) throw ParameterError("elements from different fields");
}

FqElem FqElem::operator+(const FqElem& o) const {
  require_same_field(*this, o);
  const auto p = field_->p();
  std::vector<std::uint64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeffs_[i] + o.coeffs_[i]) % p;
  return FqElem(field_, std::move(c));
}

FqElem FqElem::operator-(const FqElem& o) const {
  require_same_field(*this, o);
  const auto p = field_->p();
  std::vector<std::uint64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeffs_[i] + p - o.coeffs_[i]) % p;
  return FqElem(field_, std::move(c));
}

FqElem FqElem::operator*(const FqElem& o) const {
  require_same_field(*this, o);
  const auto p = field_->p();
  std::vector<std::uint64_t> prod(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(coeffs_[i], o.coeffs_[j], p)) % p;
    }
  }
  return FqElem(field_, field_->reduce(std::move(prod)));
}

FqElem FqElem::pow(std::uint64_t exponent) const {
  FqElem result = field_->one();
  FqElem base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

bool operator==(const FqElem& a, const FqElem& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

int quad_char_fq(const FqElem& x) {
  const auto& field = x.field();
  if (field.p() == 2) throw Unsupported("quadratic character in characteristic 2");
  if (x.is_zero()) return 0;
  FqElem e = x.pow((field.order() - 1) / 2);
  if (e == field.one()) return 1;
  if (e == field.from_int(-1)) return -1;
  throw InternalError("Euler criterion produced neither 1 nor -1");
}

}  // namespace dtuple
