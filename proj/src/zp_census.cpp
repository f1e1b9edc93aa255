#include "dtuple/zp_census.hpp"

#include <string>
#include <vector>

#include "dtuple/arith.hpp"
#include "dtuple/closed_forms.hpp"
#include "dtuple/errors.hpp"
#include "dtuple/padic.hpp"
#include "dtuple/parallel.hpp"

namespace dtuple {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ParameterError("expected a prime, got " + std::to_string(p));
}

// p^e, refusing anything above the budget.
std::uint64_t budgeted_pow(std::uint64_t p, unsigned e, std::uint64_t budget, const char* what) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (v > budget / p) {
      throw BudgetExceeded(std::string(what) + ": " + std::to_string(p) + "^" + std::to_string(e) +
                           " exceeds budget " + std::to_string(budget));
    }
    v *= p;
  }
  return v;
}

std::vector<SquareStatus> status_table(std::uint64_t p, unsigned N, std::uint64_t M) {
  std::vector<SquareStatus> t(M);
  for (std::uint64_t x = 0; x < M; ++x) t[x] = square_status(p, N, x);
  return t;
}

// For u mod p^N: the number of pairs (a, b) mod p^N with ab = u depends only
// on k = min(v(u), N) and equals the sum of p^{v(a)} over a with v(a) <= k.
std::vector<std::uint64_t> product_counts_by_valuation(std::uint64_t p, unsigned N, std::uint64_t M) {
  std::vector<std::uint64_t> weight(N + 1, 0);  // weight[j] = #{a : min(v(a), N) = j} * p^j
  std::uint64_t pj = 1;
  for (unsigned j = 0; j <= N; ++j) {
    const std::uint64_t units = j == N ? 1 : (M / pj) - (M / pj) / p;
    weight[j] = units * pj;
    if (j < N) pj *= p;
  }
  std::vector<std::uint64_t> out(N + 1, 0);
  std::uint64_t running = 0;
  for (unsigned k = 0; k <= N; ++k) {
    running += weight[k];
    out[k] = running;
  }
  return out;
}

unsigned truncated_valuation(std::uint64_t x, std::uint64_t p, unsigned N) {
  if (x == 0) return N;
  unsigned k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

struct TupleCounts {
  std::uint64_t square = 0, undetermined = 0;
  TupleCounts& operator+=(const TupleCounts& o) {
    square += o.square;
    undetermined += o.undetermined;
    return *this;
  }
};

class TupleSweep {
 public:
  TupleSweep(const std::vector<SquareStatus>& status, std::uint64_t M, std::uint64_t r, unsigned m)
      : status_(status), M_(M), r_(r), m_(m), coords_(m) {}

  void run_from(std::uint64_t first, TupleCounts& acc) {
    coords_[0] = first;
    descend(1, SquareStatus::Square, acc);
  }

 private:
  void descend(unsigned level, SquareStatus worst, TupleCounts& acc) {
    if (level == m_) {
      if (worst == SquareStatus::Square) {
        ++acc.square;
      } else {
        ++acc.undetermined;
      }
      return;
    }
    for (std::uint64_t x = 0; x < M_; ++x) {
      SquareStatus w = worst;
      for (unsigned i = 0; i < level && w != SquareStatus::NonSquare; ++i) {
        const SquareStatus s = status_[(coords_[i] * x + r_) % M_];
        if (s < w) w = s;
      }
      if (w == SquareStatus::NonSquare) continue;
      coords_[level] = x;
      descend(level + 1, w, acc);
    }
  }

  const std::vector<SquareStatus>& status_;
  std::uint64_t M_;
  std::uint64_t r_;
  unsigned m_;
  std::vector<std::uint64_t> coords_;
};

}  // namespace

ZpIntervalResult zp_interval_detail(std::uint64_t p, std::int64_t r, unsigned m, unsigned N,
                                    const ZpOptions& options) {
  require_prime(p);
  if (m < 2) throw ParameterError("m must be at least 2");
  if (N < 1) throw ParameterError("precision must be at least 1");
  const std::uint64_t M = budgeted_pow(p, N, options.budget, "p^N");
  if (M > (std::uint64_t{1} << 31)) throw BudgetExceeded("modulus p^N too large");
  const std::uint64_t rr = mod_reduce(r, M);
  const auto status = status_table(p, N, M);

  ZpIntervalResult out;
  mpz_ui_pow_ui(out.tuple_count.get_mpz_t(), p, static_cast<unsigned long>(m) * N);

  if (m == 2 && options.pair_fast_path) {
    const auto counts = product_counts_by_valuation(p, N, M);
    for (std::uint64_t u = 0; u < M; ++u) {
      const SquareStatus s = status[(u + rr) % M];
      if (s == SquareStatus::NonSquare) continue;
      const std::uint64_t c = counts[truncated_valuation(u, p, N)];
      if (s == SquareStatus::Square) {
        out.square_count += c;
      } else {
        out.undetermined_count += c;
      }
    }
  } else {
    budgeted_pow(p, m * N, options.budget, "p^(mN)");
    const TupleCounts merged = parallel_reduce<TupleCounts>(
        M, options.jobs, [] { return TupleCounts{}; },
        [&](std::uint64_t first, TupleCounts& acc) {
          TupleSweep s(status, M, rr, m);
          s.run_from(first, acc);
        });
    out.square_count = merged.square;
    out.undetermined_count = merged.undetermined;
  }

  const Rational total{out.tuple_count};
  out.interval.lo = Rational(static_cast<unsigned long long>(out.square_count)) / total;
  out.interval.hi =
      Rational(static_cast<unsigned long long>(out.square_count + out.undetermined_count)) / total;
  if (p != 2) {
    // Undetermined pairs need ab + r = 0 mod p^N, so the width is bounded by a
    // union bound over the C(m, 2) pairs.
    const Rational bound = Rational(static_cast<unsigned long long>(m) * (m - 1)) *
                           Rational(static_cast<unsigned long long>(p)).pow(2 - static_cast<int>(N));
    if (out.interval.width() > bound) throw InternalError("interval width exceeds the union bound");
  }
  return out;
}

MeasureInterval zp_interval(std::uint64_t p, std::int64_t r, unsigned m, unsigned N, const ZpOptions& options) {
  return zp_interval_detail(p, r, m, N, options).interval;
}

Rational valuation_class_measure(std::uint64_t p, std::int64_t r, unsigned v, unsigned N, const ZpOptions& options) {
  require_prime(p);
  if (v + 3 > N) throw ParameterError("valuation class needs v + 3 <= N");
  const std::uint64_t M = budgeted_pow(p, N, options.budget, "p^N");
  const std::uint64_t rr = mod_reduce(r, M);
  const auto counts = product_counts_by_valuation(p, N, M);
  std::uint64_t hits = 0;
  for (std::uint64_t u = 0; u < M; ++u) {
    const std::uint64_t t = (u + rr) % M;
    if (truncated_valuation(t, p, N) != v) continue;
    const SquareStatus s = square_status(p, N, t);
    if (s == SquareStatus::Undetermined) throw InternalError("valuation class not determined at this precision");
    if (s == SquareStatus::Square) hits += counts[truncated_valuation(u, p, N)];
  }
  return Rational(static_cast<unsigned long long>(hits)) / Rational(static_cast<unsigned long long>(M)).pow(2);
}

Rational pair_series_sum(std::uint64_t q, unsigned alpha, int chi_s, unsigned beta_max) {
  if (!odd_prime_power(q)) throw ParameterError("series needs an odd prime power q");
  const Rational P(static_cast<unsigned long long>(q));
  const Rational geometric = P.pow(2) / (P.pow(2) - 1);  // sum of q^{-2j}, j >= 0
  Rational sum;
  if (alpha == 0) {
    const unsigned K = beta_max / 2;
    for (unsigned k = 0; k <= K; ++k) sum += mu_A_k_q(q, chi_s, k);
    sum += (P - 1).pow(2) / (2 * P.pow(static_cast<int>(2 * K + 4))) * geometric;
    return sum;
  }
  if (beta_max < alpha) throw ParameterError("beta_max must reach alpha");
  for (unsigned beta = 0; beta <= beta_max; ++beta) {
    if (beta % 2 == 0 || beta == alpha) sum += mu_B_beta_q(q, alpha, chi_s, beta);
  }
  const unsigned next_even = beta_max % 2 == 0 ? beta_max + 2 : beta_max + 1;
  sum += (P - 1) * (P.pow(static_cast<int>(alpha) + 1) - 1) / (2 * P.pow(static_cast<int>(next_even) + 2)) *
         geometric;
  return sum;
}

AuditRecord series_consistency(std::uint64_t q, unsigned alpha, int chi_s, unsigned beta_max) {
  if (beta_max < alpha + 4) throw ParameterError("series_consistency needs beta_max >= alpha + 4");
  AuditRecord rec;
  rec.quantity = "pair_series_vs_ok";
  rec.params = {{"q", static_cast<std::int64_t>(q)},
                {"alpha", static_cast<std::int64_t>(alpha)},
                {"chi_s", static_cast<std::int64_t>(chi_s)},
                {"beta_max", static_cast<std::int64_t>(beta_max)}};
  const Rational series = pair_series_sum(q, alpha, chi_s, beta_max);
  const Rational closed = diop2_ok(q, alpha, chi_s);
  rec.paper_value = closed;
  rec.oracle_value = series;
  rec.verdict = decide(closed, rec.oracle_value);
  rec.detail = alpha == 0 ? "A_k series with closed tail" : "B_beta series with closed tail";
  return rec;
}

}  // namespace dtuple
