#pragma once

#include <cstdint>

#include "dtuple/interval.hpp"
#include "dtuple/rational.hpp"
#include "dtuple/record.hpp"

namespace dtuple {

struct ZpOptions {
  std::uint64_t budget = 1'000'000'000;  // maximum number of residue tuples swept
  unsigned jobs = 1;
  bool pair_fast_path = true;  // m = 2 via the distribution of ab mod p^N
};

struct ZpIntervalResult {
  MeasureInterval interval;
  std::uint64_t square_count = 0;        // tuples whose every status is Square
  std::uint64_t undetermined_count = 0;  // no NonSquare but not all Square
  BigInt tuple_count;                    // p^{mN}
};

/// Brackets the measure of D(r) m-tuples in Z_p using residue tuples mod p^N.
ZpIntervalResult zp_interval_detail(std::uint64_t p, std::int64_t r, unsigned m, unsigned N,
                                    const ZpOptions& options = {});
MeasureInterval zp_interval(std::uint64_t p, std::int64_t r, unsigned m, unsigned N, const ZpOptions& options = {});

/// Exact measure of pairs (a, b) with v_p(ab + r) = v and ab + r a square.
/// Requires v + 3 <= N.
Rational valuation_class_measure(std::uint64_t p, std::int64_t r, unsigned v, unsigned N,
                                 const ZpOptions& options = {});

/// Sum of the valuation-class closed forms over all classes up to beta_max,
/// plus the remaining geometric tail. alpha = 0 sums A_k with chi_s = chi(r).
Rational pair_series_sum(std::uint64_t q, unsigned alpha, int chi_s, unsigned beta_max);

/// Compares pair_series_sum against diop2_ok(q, alpha, chi_s) exactly.
/// Requires beta_max >= alpha + 4.
AuditRecord series_consistency(std::uint64_t q, unsigned alpha, int chi_s, unsigned beta_max);

}  // namespace dtuple
