#pragma once

// Exact evaluators for the printed closed-form measures of D(r) tuples.
// Each function reproduces the expression as stated, including statements
// the audit suites show to be inconsistent; nothing here is "corrected".

#include <cstdint>

#include "dtuple/padic.hpp"
#include "dtuple/rational.hpp"

namespace dtuple {

/// Measure of Diophantine pairs over Z_2: A_0 + sum_{k>=1} A_{2k} = 1/3.
Rational diop2_z2();
/// A_0 + sum_{k=1..K} A_{2k}, with A_0 = 5/16 and A_{2k} = 1/2^{2k+4}.
Rational diop2_z2_partial(unsigned K);
/// sum_{k>=1} 1/2^{2k+4} in closed form.
Rational diop2_z2_tail();

/// Five-case pair measure over Z_p for odd p.
Rational diop2_zp(const RShape& shape);

/// Measure of A_k = {(a,b) : ab + r square, v_p(ab + r) = 2k} for p not dividing r.
Rational mu_A_k(const RShape& shape, unsigned k);
/// Measure of B_beta = {(a,b) : ab + r square, v_p(ab + r) = beta} for p | r.
/// beta must be even, or equal to an odd alpha (where the measure is 0).
Rational mu_B_beta(const RShape& shape, unsigned beta);

// Same lemma expressions with the residue-field size q in place of p; chi is
// chi(r) for mu_A_k_q and chi(s) for mu_B_beta_q.
Rational mu_A_k_q(std::uint64_t q, int chi_r, unsigned k);
Rational mu_B_beta_q(std::uint64_t q, unsigned alpha, int chi_s, unsigned beta);

/// (m^2 + 71m + 36) / (36 * 3^m), m >= 2.
Rational diopm_z3_paper(unsigned m);

enum class PairPositions { Ordered, Unordered };
enum class PairScaling {
  AllCoordinates,        // pair measure times 3^-m
  RemainingCoordinates,  // pair measure times 3^-(m-2)
};

/// Per-case ingredients of the Z_3 m-tuple count for chi(r) = 1.
struct Z3CaseMeasures {
  Rational zero_class;      // one coordinate congruent to 0 mod 3
  Rational single_nonzero;  // one coordinate nonzero mod 3
  Rational pair;            // the two nonzero coordinates (1 and 2 mod 3) as a pair
  PairPositions positions;
  PairScaling scaling;
};

/// The combination printed with the Z_3 theorem: ordered positions, pair
/// scaled by 3^-m.
Z3CaseMeasures z3_printed_cases();
/// Unordered positions with 3^-(m-2) scaling. Agrees with diop2_zp(3, r=1) at m = 2.
Z3CaseMeasures z3_unordered_cases();

/// zero_class^m + m*single_nonzero*zero_class^(m-1) + positions(m)*pair*scale(m).
Rational diopm_z3_cases(unsigned m, const Z3CaseMeasures& cases);

// Triple counts over F_p, p odd, p not dividing r. Counts are returned as
// counts, measures as measures.
Rational diop3_fp_paper(std::uint64_t p, std::int64_t r);
Rational tilde3_fp_paper(std::uint64_t p, std::int64_t r);
Rational count_boundary_paper(std::uint64_t p, std::int64_t r);
Rational count_offdiag_paper(std::uint64_t p, std::int64_t r);

/// sum_c ((a2 c^2 + a1 c + a0)/p) evaluated by the discriminant rule.
Rational conic_sum_closed(std::int64_t a2, std::int64_t a1, std::int64_t a0, std::uint64_t p);

/// Pair measure over O_K with residue field F_q. For alpha = 0, chi_s is chi(r).
Rational diop2_ok(std::uint64_t q, unsigned alpha, int chi_s);
/// Totally ramified extension of Q_3; the same expression as diopm_z3_paper.
Rational diopm_ok_ram3(unsigned m);
/// 2^{-C(m,2)}.
Rational asymptotic_main(unsigned m);

/// True iff q = p^f for an odd prime p and f >= 1; the prime is written to *p.
bool odd_prime_power(std::uint64_t q, std::uint64_t* p = nullptr);

}  // namespace dtuple
