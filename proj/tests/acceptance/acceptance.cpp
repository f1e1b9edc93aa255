// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sys/wait.h>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "dtuple/arith.hpp"
#include "dtuple/audit.hpp"
#include "dtuple/closed_forms.hpp"
#include "dtuple/ec_quadruple.hpp"
#include "dtuple/fp_census.hpp"
#include "dtuple/padic.hpp"
#include "dtuple/zp_census.hpp"

using namespace dtuple;

namespace {

// pinned tolerances and budgets
constexpr double kC1Seconds = 10;
constexpr double kC2Seconds = 300;
constexpr double kC11Seconds = 120;
constexpr double kC12Seconds = 600;
constexpr std::uint64_t kC2PairLimit = 100'000'000;  // p^(2N) <= this
constexpr std::uint64_t kEcSeed = 20240601;
constexpr unsigned kEcInstances = 100;

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }
Rational Q(std::uint64_t n) { return Rational(static_cast<unsigned long long>(n)); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string cli_path;

std::string run_capture(const std::string& cmd, int* status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int rc = pclose(pipe);
  *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

Outcome c1() {
  MeasureInterval iv;
  std::string how;
  if (!cli_path.empty()) {
    int status = 0;
    const auto out = run_capture(cli_path + " census zp --p 2 --r 1 --m 2 -N 10", &status);
    if (status != 0) return {false, "cli exit " + std::to_string(status)};
    const auto j = nlohmann::json::parse(out);
    iv = {Rational::parse(j["lo"].get<std::string>()), Rational::parse(j["hi"].get<std::string>())};
    how = "via cli";
  } else {
    iv = zp_interval(2, 1, 2, 10);
    how = "via library";
  }
  const bool ok = iv.contains(q(1, 3)) && iv.width() <= q(1, 64);
  return {ok, how + ", interval [" + iv.lo.str() + ", " + iv.hi.str() + "], width " + iv.width().str()};
}

Outcome c2() {
  std::uint64_t checked = 0, bad_interval = 0, bad_series = 0;
  std::string first;
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const unsigned N = pair_precision(p, kC2PairLimit);
    for (auto r : auto_rset(p)) {
      const RShape shape = r_shape(r, p);
      const Rational closed = diop2_zp(shape);
      const auto iv = zp_interval(p, r, 2, N);
      ++checked;
      if (!iv.contains(closed)) {
        ++bad_interval;
        if (first.empty()) {
          first = "p=" + std::to_string(p) + " r=" + std::to_string(r) + " N=" + std::to_string(N) + ": " +
                  closed.str() + " outside [" + iv.lo.str() + ", " + iv.hi.str() + "]";
        }
      }
      const int chi = shape.alpha == 0 ? shape.chi_r : shape.chi_s;
      if (pair_series_sum(p, shape.alpha, chi, shape.alpha + 8) != closed) ++bad_series;
    }
  }
  return {bad_interval == 0 && bad_series == 0,
          std::to_string(checked) + " cases, " + std::to_string(bad_interval) + " outside the census interval, " +
              std::to_string(bad_series) + " series mismatches" + (first.empty() ? "" : "; first: " + first)};
}

Outcome c3() {
  std::uint64_t checked = 0, bad = 0;
  std::string first;
  for (std::uint64_t p : {3, 5}) {
    const unsigned N = p == 3 ? 10 : 8;
    const auto n = static_cast<std::int64_t>(smallest_nonresidue(p));
    for (unsigned alpha = 0; alpha <= 3; ++alpha) {
      for (std::int64_t s : {std::int64_t{1}, n}) {
        const std::int64_t r = static_cast<std::int64_t>(checked_pow(p, alpha)) * s;
        const RShape shape = r_shape(r, p);
        for (unsigned beta = 0; beta + 3 <= N; ++beta) {
          Rational closed;
          if (alpha == 0) {
            if (beta % 2) continue;
            closed = mu_A_k(shape, beta / 2);
          } else {
            if (beta % 2 && beta != alpha) continue;
            closed = mu_B_beta(shape, beta);
          }
          ++checked;
          const Rational measured = valuation_class_measure(p, r, beta, N);
          if (measured != closed) {
            ++bad;
            if (first.empty()) {
              first = "p=" + std::to_string(p) + " r=" + std::to_string(r) + " beta=" + std::to_string(beta) +
                      ": closed " + closed.str() + " vs census " + measured.str();
            }
          }
        }
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " classes, " + std::to_string(bad) + " mismatches" +
                        (first.empty() ? "" : "; first: " + first)};
}

Outcome c4() {
  const auto iv = zp_interval(3, 1, 2, 7);
  const Rational printed = diopm_z3_paper(2), pair = diop2_zp(r_shape(1, 3));
  const bool has_printed = iv.contains(printed), has_pair = iv.contains(pair);
  const bool exactly_one = has_printed != has_pair;
  const Rational loser = has_printed ? pair : printed;
  const auto recs = run_suite("z3-adjudicate");
  bool disagree_emitted = false;
  bool m3_ok = false;
  std::string m3;
  for (const auto& rec : recs) {
    const auto m = std::get<std::int64_t>(rec.params.at("m"));
    if (m == 2 && rec.paper_value && *rec.paper_value == loser && rec.verdict == Verdict::Disagree) {
      disagree_emitted = true;
    }
    if (m == 3 && rec.quantity == "diopm_z3") {
      m3 = to_string(rec.verdict);
      m3_ok = rec.verdict != Verdict::Inconclusive || !rec.candidates.empty();
      const auto& i3 = std::get<MeasureInterval>(rec.oracle_value);
      m3 += " with interval [" + i3.lo.str() + ", " + i3.hi.str() + "]";
    }
  }
  return {exactly_one && disagree_emitted && m3_ok,
          "m=2 interval [" + iv.lo.str() + ", " + iv.hi.str() + "] contains " + (has_pair ? pair : printed).str() +
              (exactly_one ? " only" : " (both or neither)") + "; Disagree record for " + loser.str() +
              (disagree_emitted ? " emitted" : " missing") + "; m=3: " + m3};
}

Outcome c5() {
  unsigned checked = 0, bad = 0;
  for (std::int64_t r = 1; r <= 100; ++r) {
    if (r % 3 != 1) continue;
    ++checked;
    if (!z3_structure_check(r)) ++bad;
  }
  return {bad == 0, std::to_string(checked) + " values of r, " + std::to_string(bad) + " failures"};
}

Outcome c6() {
  std::uint64_t cases = 0, bad = 0;
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const auto P = static_cast<std::int64_t>(p);
    for (std::int64_t a2 = 1; a2 < P; ++a2) {
      for (std::int64_t a1 = 0; a1 < P; ++a1) {
        for (std::int64_t a0 = 0; a0 < P; ++a0) {
          ++cases;
          if (Rational(static_cast<long long>(conic_sum_direct(a2, a1, a0, p))) != conic_sum_closed(a2, a1, a0, p)) {
            ++bad;
          }
        }
      }
    }
  }
  return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"};
}

std::uint64_t partition_checks = 0, partition_failures = 0;

CensusBreakdown checked_census(std::uint64_t p, std::int64_t r) {
  const auto c = census(CensusField::prime(p), r, 3);
  ++partition_checks;
  if (c.boundary + c.offdiag + c.interior != c.total) ++partition_failures;
  return c;
}

Outcome c7() {
  std::uint64_t runs = 0, bad = 0;
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    for (std::int64_t r = 1; r < static_cast<std::int64_t>(p); ++r) {
      const auto c = checked_census(p, r);
      ++runs;
      const std::uint64_t want = legendre(r, p) == 1 ? (3 * p * p - 1) / 2 : 0;
      if (c.boundary != want) ++bad;
    }
  }
  return {bad == 0, std::to_string(runs) + " (p, r) pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome c8() {
  const auto c7 = checked_census(7, 1);
  const auto c5 = checked_census(5, 1);
  for (std::uint64_t p : {29, 31}) {
    for (std::int64_t r = 1; r < static_cast<std::int64_t>(p); ++r) checked_census(p, r);
  }
  AuditOptions o;
  o.pmax = 31;
  const auto runs = run_suites("triples-fp", o);
  std::uint64_t records = 0, disagree = 0, expected = 0;
  for (const auto& rec : runs[0].records) {
    ++records;
    disagree += rec.verdict == Verdict::Disagree;
  }
  for (std::uint64_t p = 5; p <= 31; ++p) {
    if (is_prime(p)) expected += 4 * (p - 1);
  }
  const bool ok = partition_failures == 0 && c7.interior == 8 && c5.interior == 0 && records == expected &&
                  audit_exit_code(runs) == 0;
  return {ok, std::to_string(partition_checks) + " triple censuses partition-checked (" +
                  std::to_string(partition_failures) + " failures); interior(7,1)=" + std::to_string(c7.interior) +
                  ", interior(5,1)=" + std::to_string(c5.interior) + "; triples-fp emitted " +
                  std::to_string(records) + " records (" + std::to_string(disagree) + " Disagree), exit code " +
                  std::to_string(audit_exit_code(runs))};
}

Outcome c9() {
  Rational worst_ratio;
  bool ok = true;
  for (std::uint64_t p : {31, 61, 101}) {
    for (std::int64_t r : {1, 2}) {
      const auto c = census(CensusField::prime(p), r, 3);
      const Rational P = Q(p);
      const Rational gap =
          (Q(c.total) / P.pow(3) - q(1, 8) - Rational(6 + 3 * legendre(r, p)) / (8 * P)).abs();
      const Rational bound = Rational(10) / P.pow(2);
      ok = ok && gap <= bound;
      if (gap / bound > worst_ratio) worst_ratio = gap / bound;
    }
  }
  return {ok, "largest gap / (10/p^2) = " + worst_ratio.decimal(4)};
}

Outcome c10() {
  const auto instances = sample_instances(kEcInstances, kEcSeed, 13, 101);
  unsigned hasse = 0, mod4 = 0, quarter = 0, literal = 0, coset = 0;
  std::string first;
  for (const auto& in : instances) {
    const TripleCurve E = make_triple_curve(in.p, in.a, in.b, in.c, in.r);
    const std::uint64_t n = curve_order(E);
    const std::int64_t t = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(in.p) - 1;
    hasse += static_cast<std::uint64_t>(t * t) <= 4 * in.p;
    mod4 += n % 4 == 0;
    quarter += doubling_image(E).size() * 4 == n;
    const auto rep = two_descent_equiv(in.p, in.a, in.b, in.c, in.r);
    literal += rep.literal_equal;
    coset += rep.coset_equal;
    if (!rep.literal_equal && first.empty()) {
      first = "p=" + std::to_string(in.p) + " (" + std::to_string(in.a) + "," + std::to_string(in.b) + "," +
              std::to_string(in.c) + ") r=" + std::to_string(in.r);
    }
  }
  const unsigned N = kEcInstances;
  const bool ok = hasse == N && mod4 == N && quarter == N && literal == N;
  return {ok, "Hasse " + std::to_string(hasse) + "/" + std::to_string(N) + ", order = 0 mod 4 " +
                  std::to_string(mod4) + ", |2E| = order/4 " + std::to_string(quarter) +
                  ", non-boundary equality " + std::to_string(literal) + " (coset of 2E in the class of (bc, ac, ab): " +
                  std::to_string(coset) + ")" + (first.empty() ? "" : "; first mismatch " + first)};
}

Outcome c11() {
  std::uint64_t triples = 0, bad = 0;
  std::string first;
  for (std::uint64_t p : {13, 17, 29}) {
    for (std::int64_t r : {1, 2}) {
      const auto rep = eqd_audit(p, r);
      triples += rep.triples_checked;
      bad += rep.violations.size();
      if (!rep.violations.empty() && first.empty()) {
        const auto& v = rep.violations.front();
        first = "p=" + std::to_string(p) + " r=" + std::to_string(r) + " (" + std::to_string(v.a) + "," +
                std::to_string(v.b) + "," + std::to_string(v.c) + ") has " + std::to_string(v.size) + " extensions";
      }
    }
  }
  return {bad == 0, std::to_string(triples) + " triples, " + std::to_string(bad) + " outside the bounds" +
                        (first.empty() ? "" : "; first: " + first)};
}

Outcome c12() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t p : {53, 101}) {
    for (std::int64_t r : {1, 2}) {
      const Rational gap = asymptotic_gap(CensusField::prime(p), r, 4);
      // |gap| <= 1/sqrt(p)  <=>  gap^2 <= 1/p
      const bool within = gap.pow(2) <= Rational(1) / Q(p);
      ok = ok && within;
      detail += (detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + " r=" + std::to_string(r) +
                " gap " + gap.decimal(5);
    }
  }
  return {ok, detail};
}

Outcome c13() {
  unsigned first_checked = 0, first_bad = 0, second_checked = 0, second_bad = 0;
  std::string example;
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (auto r : auto_rset(p)) {
      const RShape shape = r_shape(r, p);
      const int chi = shape.alpha == 0 ? shape.chi_r : shape.chi_s;
      ++first_checked;
      if (diop2_ok(p, shape.alpha, chi) != diop2_zp(shape)) {
        ++first_bad;
        if (example.empty()) {
          example = "q=p=" + std::to_string(p) + " r=" + std::to_string(r) + ": " +
                    diop2_ok(p, shape.alpha, chi).str() + " vs " + diop2_zp(shape).str();
        }
      }
    }
  }
  for (std::uint64_t qq : {3, 5, 7, 9, 25, 27}) {
    for (unsigned alpha = 0; alpha <= 6; ++alpha) {
      for (int chi : {1, -1}) {
        ++second_checked;
        if (series_consistency(qq, alpha, chi, alpha + 6).verdict != Verdict::Agree) ++second_bad;
      }
    }
  }
  return {first_bad == 0 && second_bad == 0,
          "residue-field vs Z_p forms: " + std::to_string(first_bad) + "/" + std::to_string(first_checked) +
              " differ; series consistency: " + std::to_string(second_bad) + "/" + std::to_string(second_checked) +
              " differ" + (example.empty() ? "" : "; first: " + example)};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  }
  struct Criterion {
    int id;
    std::function<Outcome()> run;
    double seconds;  // 0: no runtime limit
  };
  const std::vector<Criterion> criteria{
      {1, c1, kC1Seconds}, {2, c2, kC2Seconds}, {3, c3, 0},   {4, c4, 0},          {5, c5, 0},
      {6, c6, 0},          {7, c7, 0},          {8, c8, 0},   {9, c9, 0},          {10, c10, 0},
      {11, c11, kC11Seconds}, {12, c12, kC12Seconds}, {13, c13, 0}};
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds > 0 && secs >= c.seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    std::ostringstream line;
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " [" << std::fixed << secs << "s] " << o.detail;
    std::cout << line.str() << std::endl;
    failures += !o.pass;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
