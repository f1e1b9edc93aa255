#include "dtuple/closed_forms.hpp"

#include <string>

#include "dtuple/arith.hpp"
#include "dtuple/errors.hpp"

namespace dtuple {

namespace {

Rational R(std::int64_t n) { return Rational(static_cast<long long>(n)); }
Rational Rq(std::uint64_t n) { return Rational(static_cast<unsigned long long>(n)); }

void require_odd_prime(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw ParameterError("expected an odd prime, got " + std::to_string(p));
}

void require_chi(int chi) {
  if (chi != 1 && chi != -1) throw ParameterError("character value must be 1 or -1");
}

// Lead term of the even-alpha branches: which of the two B_alpha shapes is
// attached to a square unit differs between the Z_p and O_K statements.
enum class EvenLead { AlphaPlusOne, AlphaSquarePlus };

Rational even_lead(const Rational& P, unsigned alpha, EvenLead lead) {
  const Rational a = Rq(alpha);
  const Rational denom = 2 * P.pow(static_cast<int>(alpha) + 2);
  if (lead == EvenLead::AlphaPlusOne) return (a + 1) * (P - 1).pow(2) / denom;
  return (a * (P - 1).pow(2) + P.pow(2) + 1) / denom;
}

// The branch formulas for alpha > 0.
Rational positive_alpha_branch(std::uint64_t q, unsigned alpha, EvenLead lead) {
  const Rational P = Rq(q);
  const Rational a = Rq(alpha);
  const int ai = static_cast<int>(alpha);
  const Rational half(BigInt(1), BigInt(2));
  const Rational D = 2 * (P + 1).pow(2);
  if (alpha % 2 == 1) {
    return half - (P - 1) / D - (a + 2) / (D * P.pow(ai - 1)) - Rational(1) / (D * P.pow(ai)) +
           (a - 1) / (D * P.pow(ai + 1));
  }
  return half + even_lead(P, alpha, lead) - (2 * P - 1) / D + Rational(1) / (D * P) -
         (a + 1) / (D * P.pow(ai - 2)) + (a - 1) / (D * P.pow(ai)) - Rational(1) / (D * P.pow(ai + 1)) -
         Rational(1) / (D * P.pow(ai + 2));
}

Rational unit_branch(std::uint64_t q, int chi_r) {
  const Rational P = Rq(q);
  const Rational half(BigInt(1), BigInt(2));
  if (chi_r == 1) return half + Rational(1) / (P * (P + 1));
  return half - Rational(1) / (P + 1);
}

}  // namespace

bool odd_prime_power(std::uint64_t q, std::uint64_t* p) {
  if (q < 3 || q % 2 == 0) return false;
  std::uint64_t base = 0;
  for (std::uint64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  if (base == 0) base = q;
  if (!is_prime(base)) return false;
  std::uint64_t rest = q;
  while (rest % base == 0) rest /= base;
  if (rest != 1) return false;
  if (p) *p = base;
  return true;
}

Rational diop2_z2() {
  // A_0 = 5/16 plus the geometric tail sum_{k>=1} 2^{-(2k+4)}.
  return Rational(BigInt(5), BigInt(16)) + diop2_z2_tail();
}

Rational diop2_z2_partial(unsigned K) {
  Rational total(BigInt(5), BigInt(16));
  for (unsigned k = 1; k <= K; ++k) total += Rational(1) / Rational(2).pow(static_cast<int>(2 * k + 4));
  return total;
}

Rational diop2_z2_tail() {
  // first term 2^-6, ratio 1/4
  return Rational(BigInt(1), BigInt(64)) / (Rational(1) - Rational(BigInt(1), BigInt(4)));
}

Rational diop2_zp(const RShape& shape) {
  if (shape.p == 2) throw ParameterError("p = 2: use diop2_z2 (only r = 1 is covered there)");
  require_odd_prime(shape.p);
  if (shape.alpha == 0) return unit_branch(shape.p, shape.chi_r);
  return positive_alpha_branch(shape.p, shape.alpha,
                               shape.chi_s == 1 ? EvenLead::AlphaPlusOne : EvenLead::AlphaSquarePlus);
}

Rational mu_A_k_q(std::uint64_t q, int chi_r, unsigned k) {
  require_chi(chi_r);
  const Rational P = Rq(q);
  if (chi_r == 1 && k == 0) return (P.pow(2) + 1) / (2 * P.pow(2));
  return (P - 1).pow(2) / (2 * P.pow(static_cast<int>(2 * k + 2)));
}

Rational mu_B_beta_q(std::uint64_t q, unsigned alpha, int chi_s, unsigned beta) {
  if (alpha == 0) throw ParameterError("B_beta classes need v_p(r) > 0");
  require_chi(chi_s);
  const Rational P = Rq(q);
  const int b = static_cast<int>(beta);
  if (beta == alpha) {
    if (alpha % 2 == 1) return Rational(0);
    return even_lead(P, alpha, chi_s == 1 ? EvenLead::AlphaPlusOne : EvenLead::AlphaSquarePlus);
  }
  if (beta % 2 == 1) throw ParameterError("B_beta is defined for even beta (or beta = alpha)");
  if (beta > alpha) {
    return (P - 1) * (P.pow(static_cast<int>(alpha) + 1) - 1) / (2 * P.pow(b + 2));
  }
  return Rq(beta + 1) * (P - 1).pow(2) / (2 * P.pow(b + 2));
}

Rational mu_A_k(const RShape& shape, unsigned k) {
  require_odd_prime(shape.p);
  if (shape.alpha != 0) throw ParameterError("A_k classes need p not dividing r");
  return mu_A_k_q(shape.p, shape.chi_r, k);
}

Rational mu_B_beta(const RShape& shape, unsigned beta) {
  require_odd_prime(shape.p);
  return mu_B_beta_q(shape.p, shape.alpha, shape.chi_s, beta);
}

Rational diopm_z3_paper(unsigned m) {
  if (m < 2) throw ParameterError("m must be at least 2");
  const Rational M = Rq(m);
  return (M * M + 71 * M + 36) / (36 * Rational(3).pow(static_cast<int>(m)));
}

Z3CaseMeasures z3_printed_cases() {
  return {Rational(BigInt(1), BigInt(3)), Rational(BigInt(2), BigInt(3)), Rational(BigInt(1), BigInt(36)),
          PairPositions::Ordered, PairScaling::AllCoordinates};
}

Z3CaseMeasures z3_unordered_cases() {
  auto c = z3_printed_cases();
  c.positions = PairPositions::Unordered;
  c.scaling = PairScaling::RemainingCoordinates;
  return c;
}

Rational diopm_z3_cases(unsigned m, const Z3CaseMeasures& cases) {
  if (m < 2) throw ParameterError("m must be at least 2");
  const int mi = static_cast<int>(m);
  const Rational M = Rq(m);
  Rational total = cases.zero_class.pow(mi);
  total += M * cases.single_nonzero * cases.zero_class.pow(mi - 1);
  Rational positions = M * (M - 1);
  if (cases.positions == PairPositions::Unordered) positions /= 2;
  const int exponent = cases.scaling == PairScaling::AllCoordinates ? mi : mi - 2;
  total += positions * cases.pair / Rational(3).pow(exponent);
  return total;
}

namespace {

struct TripleChars {
  int chi_r;
  int chi_neg_r;
};

TripleChars triple_chars(std::uint64_t p, std::int64_t r) {
  require_odd_prime(p);
  const int chi_r = legendre(r, p);
  if (chi_r == 0) throw ParameterError("triple counts need p not dividing r");
  return {chi_r, legendre(-1, p) * chi_r};
}

}  // namespace

Rational diop3_fp_paper(std::uint64_t p, std::int64_t r) {
  const auto [cr, cnr] = triple_chars(p, r);
  const Rational P = Rq(p);
  return Rational(BigInt(1), BigInt(8)) + R(6 + 3 * cr) / (8 * P) + R(21 + 6 * cr) / (8 * P.pow(2)) +
         R(24 * cnr - 10 - 21 * cr) / (8 * P.pow(3));
}

Rational tilde3_fp_paper(std::uint64_t p, std::int64_t r) {
  const auto [cr, cnr] = triple_chars(p, r);
  const Rational P = Rq(p);
  return Rational(BigInt(1), BigInt(8)) - R(6 + 3 * cr) / (8 * P) + R(15 + 12 * cr) / (8 * P.pow(2)) -
         R(16 + 13 * cr + 2 * cnr) / (8 * P.pow(3));
}

Rational count_boundary_paper(std::uint64_t p, std::int64_t r) {
  const auto [cr, cnr] = triple_chars(p, r);
  (void)cnr;
  if (cr == -1) return Rational(0);
  const Rational P = Rq(p);
  return (3 * P.pow(2) - 1) / 2;
}

Rational count_offdiag_paper(std::uint64_t p, std::int64_t r) {
  const auto [cr, cnr] = triple_chars(p, r);
  const Rational P = Rq(p);
  return (3 * P.pow(2) + 3 * P + 4) / 4 - (3 * P + 3) / 4 * R(cr) + Rational(BigInt(13), BigInt(4)) * R(cnr);
}

Rational conic_sum_closed(std::int64_t a2, std::int64_t a1, std::int64_t a0, std::uint64_t p) {
  require_odd_prime(p);
  const int chi_a2 = legendre(a2, p);
  if (chi_a2 == 0) throw ParameterError("leading coefficient divisible by p");
  const std::uint64_t A2 = mod_reduce(a2, p), A1 = mod_reduce(a1, p), A0 = mod_reduce(a0, p);
  const std::uint64_t disc = (mul_mod(A1, A1, p) + p - mul_mod(4 % p, mul_mod(A0, A2, p), p)) % p;
  if (disc != 0) return R(-chi_a2);
  return Rq(p - 1) * R(chi_a2);
}

Rational diop2_ok(std::uint64_t q, unsigned alpha, int chi_s) {
  if (q % 2 == 0) throw Unsupported("residue characteristic 2");
  if (!odd_prime_power(q)) throw ParameterError("q must be an odd prime power");
  require_chi(chi_s);
  if (alpha == 0) return unit_branch(q, chi_s);
  return positive_alpha_branch(q, alpha, chi_s == -1 ? EvenLead::AlphaPlusOne : EvenLead::AlphaSquarePlus);
}

Rational diopm_ok_ram3(unsigned m) { return diopm_z3_paper(m); }

Rational asymptotic_main(unsigned m) {
  if (m < 2) throw ParameterError("m must be at least 2");
  return Rational(1) / Rational(2).pow(static_cast<int>(m * (m - 1) / 2));
}

}  // namespace dtuple
