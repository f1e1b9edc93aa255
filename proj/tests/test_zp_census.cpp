#include <doctest.h>

#include "dtuple/closed_forms.hpp"
#include "dtuple/errors.hpp"
#include "dtuple/padic.hpp"
#include "dtuple/zp_census.hpp"
#include "oracles.hpp"

using namespace dtuple;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

ZpOptions naive() {
  ZpOptions o;
  o.pair_fast_path = false;
  return o;
}

// pairs mod p^N with v(ab + r) = v and every lift of ab + r a square,
// judged by lifting two more digits
Rational brute_class_measure(std::uint64_t p, std::int64_t r, unsigned v, unsigned N) {
  const std::uint64_t M = oracle::ipow(p, N);
  const auto rr = static_cast<std::uint64_t>(oracle::mod(r, static_cast<std::int64_t>(M)));
  std::vector<int> status(M, -1);
  std::uint64_t hits = 0;
  for (std::uint64_t a = 0; a < M; ++a) {
    for (std::uint64_t b = 0; b < M; ++b) {
      const std::uint64_t t = (a * b + rr) % M;
      if (t == 0 || t % oracle::ipow(p, v) != 0 || t % oracle::ipow(p, v + 1) == 0) continue;
      if (status[t] < 0) status[t] = oracle::lift_status(p, N, p == 2 ? 3 : 2, t);
      if (status[t] == 2) ++hits;
    }
  }
  return Rational(static_cast<unsigned long long>(hits)) / Rational(static_cast<unsigned long long>(M * M));
}

}  // namespace

TEST_CASE("interval examples") {
  const auto z2 = zp_interval(2, 1, 2, 10);
  CHECK(z2.contains(q(1, 3)));
  CHECK(z2.width() <= q(1, 64));
  const auto z3 = zp_interval(3, 1, 2, 7);
  CHECK(z3.contains(q(7, 12)));
  CHECK_FALSE(z3.contains(q(91, 162)));
  CHECK(zp_interval(5, 2, 2, 4).contains(q(1, 3)));
}

TEST_CASE("pair fast path equals the naive sweep") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned N = 1; oracle::ipow(p, 2 * N) <= 400000; ++N) {
      for (std::int64_t r : {1, 2, 3, 5, 7, 12, 18, 25, 27, 49, -1, -3}) {
        const auto fast = zp_interval_detail(p, r, 2, N);
        const auto slow = zp_interval_detail(p, r, 2, N, naive());
        CHECK(fast.square_count == slow.square_count);
        CHECK(fast.undetermined_count == slow.undetermined_count);
        CHECK(fast.interval == slow.interval);
      }
    }
  }
}

TEST_CASE("interval invariants: nesting, width, undetermined mass") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned m : {2u, 3u}) {
      for (std::int64_t r : {1, 2, 3, 9}) {
        MeasureInterval prev{Rational(0), Rational(1)};
        for (unsigned N = 1; oracle::ipow(p, m * N) <= 2'000'000; ++N) {
          const auto res = zp_interval_detail(p, r, m, N, m == 2 ? ZpOptions{} : naive());
          const auto& iv = res.interval;
          CHECK(prev.lo <= iv.lo);
          CHECK(iv.hi <= prev.hi);
          CHECK(Rational(0) <= iv.lo);
          CHECK(iv.hi <= Rational(1));
          CHECK(iv.width() == Rational(static_cast<unsigned long long>(res.undetermined_count)) /
                                  Rational(res.tuple_count));
          if (p != 2) {
            CHECK(iv.width() <= Rational(static_cast<unsigned long>(m * (m - 1))) *
                                    Rational(static_cast<unsigned long>(p)).pow(2 - static_cast<int>(N)));
          }
          prev = iv;
        }
      }
    }
  }
}

TEST_CASE("interval sweeps are independent of the worker count") {
  ZpOptions o = naive();
  const auto ref = zp_interval(3, 1, 3, 4, o);
  for (unsigned jobs : {2u, 3u, 5u}) {
    o.jobs = jobs;
    CHECK(zp_interval(3, 1, 3, 4, o) == ref);
  }
}

TEST_CASE("square tuples reduce to D(r) tuples over F_p away from the boundary") {
  for (std::uint64_t p : {3, 5, 7}) {
    const unsigned N = 2;
    const std::uint64_t M = p * p;
    const auto sq = oracle::squares_mod(p);
    for (std::int64_t r : {1, 2, 3}) {
      const auto rr = static_cast<std::uint64_t>(oracle::mod(r, static_cast<std::int64_t>(M)));
      for (std::uint64_t a = 0; a < M; ++a) {
        for (std::uint64_t b = 0; b < M; ++b) {
          for (std::uint64_t c = 0; c < M; c += 1 + (p > 5)) {
            const std::uint64_t v[3] = {(a * b + rr) % M, (a * c + rr) % M, (b * c + rr) % M};
            bool all_square = true, off_boundary = true;
            for (auto x : v) {
              all_square = all_square && square_status(p, N, x) == SquareStatus::Square;
              off_boundary = off_boundary && x % p != 0;
            }
            if (!all_square || !off_boundary) continue;
            for (auto x : v) CHECK(sq[x % p]);
          }
        }
      }
    }
  }
}

TEST_CASE("valuation class measures match brute force and stabilise in N") {
  CHECK(valuation_class_measure(5, 2, 0, 3) == q(8, 25));
  // the census value, where the printed lemma has 8/81
  CHECK(valuation_class_measure(3, 3, 2, 5) == q(4, 81));
  // the census value of the chi(s) = 1 class, where the printed lemma has 24/625
  CHECK(valuation_class_measure(5, 25, 2, 5) == q(29, 625));
  CHECK_THROWS_AS(valuation_class_measure(3, 3, 3, 5), ParameterError);
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::int64_t r : {1, 2, 3, 6, 9, 18, 25, 27}) {
      for (unsigned v = 0; v <= 2; ++v) {
        const unsigned N = v + 3;
        if (oracle::ipow(p, 2 * N) > 2'000'000) continue;
        const Rational got = valuation_class_measure(p, r, v, N);
        CHECK(got == brute_class_measure(p, r, v, N));
        CHECK(got == valuation_class_measure(p, r, v, N + 1));
      }
    }
  }
}

TEST_CASE("series consistency records") {
  const auto a = series_consistency(3, 1, 1, 11);
  CHECK(a.verdict == Verdict::Agree);
  CHECK(std::get<Rational>(a.oracle_value) == q(1, 3));
  const auto b = series_consistency(9, 0, 1, 4);
  CHECK(b.verdict == Verdict::Agree);
  CHECK(*b.paper_value == q(23, 45));
  // even alpha: the series uses the opposite lead-term labelling
  const auto c = series_consistency(5, 2, 1, 10);
  CHECK(c.verdict == Verdict::Disagree);
  CHECK(recompute_verdict(c) == c.verdict);
  CHECK_THROWS_AS(series_consistency(5, 2, 1, 5), ParameterError);
}

TEST_CASE("zp budget and parameters") {
  ZpOptions o;
  o.budget = 1000;
  CHECK_THROWS_AS(zp_interval(3, 1, 2, 7, o), BudgetExceeded);
  ZpOptions tight = naive();
  tight.budget = 1000;
  CHECK_THROWS_AS(zp_interval(3, 1, 3, 3, tight), BudgetExceeded);
  CHECK_THROWS_AS(zp_interval(4, 1, 2, 3), ParameterError);
  CHECK_THROWS_AS(zp_interval(3, 1, 1, 3), ParameterError);
}
