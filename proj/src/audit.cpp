#include "dtuple/audit.hpp"

#include <algorithm>
#include <json.hpp>

#include "dtuple/arith.hpp"
#include "dtuple/closed_forms.hpp"
#include "dtuple/ec_quadruple.hpp"
#include "dtuple/errors.hpp"
#include "dtuple/fp_census.hpp"
#include "dtuple/padic.hpp"
#include "dtuple/zp_census.hpp"

namespace dtuple {

namespace {

using Params = std::map<std::string, ParamValue>;

ParamValue I(std::uint64_t v) { return static_cast<std::int64_t>(v); }
ParamValue I(std::int64_t v) { return v; }
ParamValue I(int v) { return static_cast<std::int64_t>(v); }
ParamValue I(unsigned v) { return static_cast<std::int64_t>(v); }

Rational Q(std::uint64_t n) { return Rational(static_cast<unsigned long long>(n)); }

AuditRecord make_record(std::string quantity, Params params, const Rational& claimed, OracleValue oracle,
                        std::string detail = "", std::vector<Rational> candidates = {}) {
  AuditRecord rec;
  rec.quantity = std::move(quantity);
  rec.params = std::move(params);
  rec.paper_value = claimed;
  rec.oracle_value = std::move(oracle);
  rec.candidates = std::move(candidates);
  rec.verdict = decide(claimed, rec.oracle_value, rec.candidates);
  rec.detail = std::move(detail);
  return rec;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> primes_or(const AuditOptions& o, std::vector<std::uint64_t> fallback) {
  return o.primes.empty() ? fallback : o.primes;
}

std::vector<std::int64_t> rset_for(const AuditOptions& o, std::uint64_t p) {
  return o.rset.empty() ? auto_rset(p) : o.rset;
}

std::vector<AuditRecord> suite_pairs_zp(const AuditOptions& o) {
  std::vector<AuditRecord> out;
  for (auto p : primes_or(o, {3, 5, 7, 11, 13})) {
    const unsigned N = o.precision ? o.precision : pair_precision(p);
    for (auto r : rset_for(o, p)) {
      const RShape shape = r_shape(r, p);
      const Rational closed = diop2_zp(shape);
      ZpOptions zo;
      zo.budget = o.budget;
      zo.jobs = o.jobs;
      const auto iv = zp_interval(p, r, 2, N, zo);
      Params params{{"p", I(p)}, {"r", I(r)}, {"alpha", I(shape.alpha)}, {"N", I(N)}};
      out.push_back(make_record("diop2_zp", params, closed, iv, "pair measure vs residue census"));
      const int chi = shape.alpha == 0 ? shape.chi_r : shape.chi_s;
      const unsigned beta_max = shape.alpha + 8;
      Params sp{{"p", I(p)}, {"r", I(r)}, {"alpha", I(shape.alpha)}, {"beta_max", I(beta_max)}};
      out.push_back(make_record("diop2_zp_series", sp, closed, pair_series_sum(p, shape.alpha, chi, beta_max),
                                "valuation-class series with closed tail"));
    }
  }
  return out;
}

std::vector<AuditRecord> suite_z2(const AuditOptions& o) {
  const unsigned N = o.precision ? o.precision : 10;
  ZpOptions zo;
  zo.budget = o.budget;
  zo.jobs = o.jobs;
  const auto iv = zp_interval(2, 1, 2, N, zo);
  std::vector<AuditRecord> out;
  out.push_back(make_record("diop2_z2", {{"p", I(2)}, {"r", I(1)}, {"N", I(N)}}, diop2_z2(), iv,
                            "pair measure over Z_2 vs residue census"));
  return out;
}

std::vector<AuditRecord> suite_z3(const AuditOptions& o) {
  std::vector<AuditRecord> out;
  ZpOptions zo;
  zo.budget = o.budget;
  zo.jobs = o.jobs;
  const Rational pair_theorem = diop2_zp(r_shape(1, 3));
  {
    const unsigned N = o.precision ? o.precision : 7;
    const auto iv = zp_interval(3, 1, 2, N, zo);
    const Rational printed = diopm_z3_paper(2);
    Params params{{"p", I(3)}, {"r", I(1)}, {"m", I(2)}, {"N", I(N)}};
    out.push_back(make_record("diopm_z3", params, printed, iv, "printed m-tuple formula at m = 2", {pair_theorem}));
    out.push_back(make_record("diop2_zp", params, pair_theorem, iv, "pair theorem at p = 3", {printed}));
  }
  {
    const unsigned N = o.precision ? std::min(o.precision, 5u) : 5;
    zo.pair_fast_path = false;
    const auto iv = zp_interval(3, 1, 3, N, zo);
    const Rational printed = diopm_z3_paper(3);
    const Rational corrected = diopm_z3_cases(3, z3_unordered_cases());
    Params params{{"p", I(3)}, {"r", I(1)}, {"m", I(3)}, {"N", I(N)}};
    out.push_back(make_record("diopm_z3", params, printed, iv, "printed m-tuple formula at m = 3", {corrected}));
    out.push_back(make_record("diopm_z3_unordered", params, corrected, iv,
                              "recombination with unordered pair positions", {printed}));
  }
  return out;
}

std::vector<AuditRecord> suite_triples_fp(const AuditOptions& o) {
  std::vector<AuditRecord> out;
  CensusOptions co;
  co.budget = o.budget;
  co.jobs = o.jobs;
  const auto primes = o.primes.empty() ? odd_primes_up_to(5, o.pmax ? o.pmax : 31) : o.primes;
  for (auto p : primes) {
    const CensusField field = CensusField::prime(p);
    const Rational P3 = Q(p).pow(3);
    std::vector<std::int64_t> rs;
    if (o.rset.empty()) {
      for (std::uint64_t r = 1; r < p; ++r) rs.push_back(static_cast<std::int64_t>(r));
    } else {
      rs = o.rset;
    }
    for (auto r : rs) {
      if (mod_reduce(r, p) == 0) continue;
      const auto c = census(field, r, 3, co);
      Params params{{"p", I(p)}, {"r", I(r)}, {"m", I(3)}};
      out.push_back(make_record("count_boundary", params, count_boundary_paper(p, r), Q(c.boundary)));
      out.push_back(make_record("count_offdiag", params, count_offdiag_paper(p, r), Q(c.offdiag)));
      out.push_back(make_record("tilde3_fp", params, tilde3_fp_paper(p, r), Q(c.interior) / P3));
      out.push_back(make_record("diop3_fp", params, diop3_fp_paper(p, r), Q(c.total) / P3));
    }
  }
  return out;
}

std::vector<AuditRecord> suite_conic(const AuditOptions& o) {
  std::vector<AuditRecord> out;
  const auto primes = o.primes.empty() ? odd_primes_up_to(3, o.pmax ? o.pmax : 13) : o.primes;
  for (auto p : primes) {
    std::uint64_t cases = 0, matches = 0;
    const auto P = static_cast<std::int64_t>(p);
    for (std::int64_t a2 = 1; a2 < P; ++a2) {
      for (std::int64_t a1 = 0; a1 < P; ++a1) {
        for (std::int64_t a0 = 0; a0 < P; ++a0) {
          ++cases;
          if (Rational(static_cast<long long>(conic_sum_direct(a2, a1, a0, p))) == conic_sum_closed(a2, a1, a0, p)) {
            ++matches;
          }
        }
      }
    }
    out.push_back(make_record("conic_sum", {{"p", I(p)}}, Q(cases), Q(matches),
                              "cases where the closed form matches the direct sum"));
  }
  return out;
}

unsigned valuation_precision(std::uint64_t p) {
  unsigned N = 0;
  std::uint64_t v = 1;
  while (v <= 1'000'000 / p) {
    v *= p;
    ++N;
  }
  return N;
}

std::vector<AuditRecord> suite_valuation_classes(const AuditOptions& o) {
  std::vector<AuditRecord> out;
  ZpOptions zo;
  zo.budget = o.budget;
  for (auto p : primes_or(o, {3, 5})) {
    const unsigned N = o.precision ? o.precision : valuation_precision(p);
    if (N < 3) throw ParameterError("valuation classes need N >= 3");
    const auto n = static_cast<std::int64_t>(smallest_nonresidue(p));
    for (unsigned alpha = 0; alpha <= 3; ++alpha) {
      const auto pa = static_cast<std::int64_t>(checked_pow(p, alpha));
      for (std::int64_t s : {std::int64_t{1}, n}) {
        const std::int64_t r = pa * s;
        const RShape shape = r_shape(r, p);
        for (unsigned beta = 0; beta + 3 <= N; ++beta) {
          Rational closed;
          if (alpha == 0) {
            if (beta % 2 == 1) continue;
            closed = mu_A_k(shape, beta / 2);
          } else {
            if (beta % 2 == 1 && beta != alpha) continue;
            closed = mu_B_beta(shape, beta);
          }
          Params params{{"p", I(p)}, {"r", I(r)}, {"alpha", I(alpha)}, {"beta", I(beta)}, {"N", I(N)}};
          out.push_back(make_record(alpha == 0 ? "mu_A_k" : "mu_B_beta", params, closed,
                                    valuation_class_measure(p, r, beta, N, zo)));
        }
      }
    }
  }
  return out;
}

std::vector<AuditRecord> suite_ok_series(const AuditOptions& o) {
  std::vector<AuditRecord> out;
  for (auto p : std::vector<std::uint64_t>{3, 5, 7, 11, 13}) {
    for (auto r : auto_rset(p)) {
      const RShape shape = r_shape(r, p);
      const int chi = shape.alpha == 0 ? shape.chi_r : shape.chi_s;
      Params params{{"p", I(p)}, {"r", I(r)}, {"alpha", I(shape.alpha)}, {"chi_s", I(chi)}};
      out.push_back(make_record("diop2_ok_vs_zp", params, diop2_ok(p, shape.alpha, chi), diop2_zp(shape),
                                "residue-field form at q = p vs the Z_p form"));
    }
  }
  const std::vector<std::uint64_t> qs =
      o.primes.empty() ? std::vector<std::uint64_t>{3, 5, 7, 9, 25, 27} : o.primes;
  for (auto q : qs) {
    for (unsigned alpha = 0; alpha <= 6; ++alpha) {
      for (int chi : {1, -1}) out.push_back(series_consistency(q, alpha, chi, alpha + 6));
    }
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<AuditRecord> suite_ec(const AuditOptions& o) {
  std::vector<AuditRecord> out;
  constexpr std::uint64_t kSeed = 20240601;
  const auto instances = sample_instances(100, kSeed, 13, o.pmax ? o.pmax : 101);
  std::uint64_t hasse = 0, mod4 = 0, quarter = 0, literal = 0, subset = 0, coset = 0, boundary_members = 0;
  std::string first_literal_failure;
  for (const auto& inst : instances) {
    const TripleCurve E = make_triple_curve(inst.p, inst.a, inst.b, inst.c, inst.r);
    const std::uint64_t n = curve_order(E);
    const std::int64_t t = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(inst.p) - 1;
    if (static_cast<std::uint64_t>(t * t) <= 4 * inst.p) ++hasse;
    if (n % 4 == 0) ++mod4;
    if (doubling_image(E).size() * 4 == n) ++quarter;
    const auto rep = two_descent_equiv(inst.p, inst.a, inst.b, inst.c, inst.r);
    if (rep.literal_equal) {
      ++literal;
    } else if (first_literal_failure.empty()) {
      first_literal_failure = "first mismatch p=" + std::to_string(inst.p) + " (" + std::to_string(inst.a) + "," +
                              std::to_string(inst.b) + "," + std::to_string(inst.c) + ") r=" +
                              std::to_string(inst.r) + " dset {" + join(rep.dset_nonboundary) + "} image {" +
                              join(rep.image_nonboundary) + "}";
    }
    if (rep.dset_subset_of_image) ++subset;
    if (rep.coset_equal) ++coset;
    if (!rep.boundary_with_zero.empty()) ++boundary_members;
  }
  const Rational total = Q(instances.size());
  Params params{{"instances", I(static_cast<std::uint64_t>(instances.size()))}, {"seed", I(kSeed)}};
  out.push_back(make_record("ec_hasse", params, total, Q(hasse)));
  out.push_back(make_record("ec_order_mod_4", params, total, Q(mod4)));
  out.push_back(make_record("ec_quarter_image", params, total, Q(quarter)));
  out.push_back(make_record("two_descent_literal", params, total, Q(literal),
                            "instances where the extension set equals the doubling image off the 2-torsion; " +
                                (first_literal_failure.empty() ? std::string("none differ") : first_literal_failure)));
  out.push_back(make_record("two_descent_subset", params, total, Q(subset)));
  out.push_back(make_record("two_descent_coset", params, total, Q(coset),
                            "extension set vs the coset of the doubling image in class (chi(bc), chi(ac), chi(ab)); " +
                                std::to_string(boundary_members) + " instances have boundary members"));

  for (std::uint64_t p : {13, 17, 29}) {
    for (std::int64_t r : {1, 2}) {
      for (bool strict : {false, true}) {
        const auto rep = eqd_audit(p, r, strict);
        std::string detail = "sizes in [" + std::to_string(rep.min_size) + ", " + std::to_string(rep.max_size) +
                             "], " + std::to_string(rep.triples_zero_entry) + " zero-entry triples skipped";
        if (!rep.violations.empty()) {
          const auto& v = rep.violations.front();
          detail += "; first violation (" + std::to_string(v.a) + "," + std::to_string(v.b) + "," +
                    std::to_string(v.c) + ") with " + std::to_string(v.size) + " extensions";
        }
        Params ep{{"p", I(p)}, {"r", I(r)}, {"squares", std::string(strict ? "nonzero" : "with_zero")}};
        out.push_back(make_record("eqd_bounds", ep, Q(rep.triples_checked),
                                  Q(rep.triples_checked - rep.violations.size()), detail));
      }
    }
  }
  return out;
}

// Rational number at most 1/sqrt(p): 1/ceil(sqrt(p)).
Rational inv_sqrt_floor(std::uint64_t p) {
  std::uint64_t s = isqrt(p);
  if (s * s < p) ++s;
  return Rational(1) / Q(s);
}

std::vector<AuditRecord> suite_asymptotics(const AuditOptions& o) {
  std::vector<AuditRecord> out;
  CensusOptions co;
  co.budget = o.budget;
  co.jobs = o.jobs;
  for (std::uint64_t p : {31, 61, 101}) {
    const CensusField field = CensusField::prime(p);
    for (std::int64_t r : {1, 2}) {
      const auto c = census(field, r, 3, co);
      const Rational measure = Q(c.total) / Q(p).pow(3);
      const Rational env = Rational(10) / Q(p).pow(2);
      const Rational main = Rational(BigInt(1), BigInt(8)) + Rational(6 + 3 * legendre(r, p)) / (8 * Q(p));
      out.push_back(make_record("triple_two_term", {{"p", I(p)}, {"r", I(r)}, {"m", I(3)}}, main,
                                MeasureInterval{measure - env, measure + env}, "envelope 10/p^2"));
    }
  }
  for (std::uint64_t p : {53, 101}) {
    const CensusField field = CensusField::prime(p);
    for (std::int64_t r : {1, 2}) {
      const auto c = census(field, r, 4, co);
      const Rational measure = Q(c.total) / Q(p).pow(4);
      const Rational env = inv_sqrt_floor(p);
      out.push_back(make_record("quadruple_main_term", {{"p", I(p)}, {"r", I(r)}, {"m", I(4)}}, asymptotic_main(4),
                                MeasureInterval{measure - env, measure + env},
                                "envelope 1/ceil(sqrt(p)), inside 1/sqrt(p)"));
    }
  }
  return out;
}

nlohmann::json rational_json(const Rational& x) { return x.str(); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pairs-zp", "z2",    "z3-adjudicate", "triples-fp", "conic",
                                              "valuation-classes", "ok-series", "ec", "asymptotics"};
  return names;
}

bool is_must_agree(const std::string& suite) { return suite != "z3-adjudicate" && suite != "triples-fp"; }

std::vector<std::int64_t> auto_rset(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw ParameterError("auto r-set needs an odd prime");
  const auto P = static_cast<std::int64_t>(p);
  const auto n = static_cast<std::int64_t>(smallest_nonresidue(p));
  return {1, n, P, P * n, P * P, P * P * n, P * P * P};
}

unsigned pair_precision(std::uint64_t p, std::uint64_t limit) {
  unsigned N = 0;
  std::uint64_t v = 1;
  while (v <= limit / (p * p)) {
    v *= p * p;
    ++N;
  }
  return N;
}

std::vector<AuditRecord> run_suite(const std::string& suite, const AuditOptions& o) {
  if (suite == "pairs-zp") return suite_pairs_zp(o);
  if (suite == "z2") return suite_z2(o);
  if (suite == "z3-adjudicate") return suite_z3(o);
  if (suite == "triples-fp") return suite_triples_fp(o);
  if (suite == "conic") return suite_conic(o);
  if (suite == "valuation-classes") return suite_valuation_classes(o);
  if (suite == "ok-series") return suite_ok_series(o);
  if (suite == "ec") return suite_ec(o);
  if (suite == "asymptotics") return suite_asymptotics(o);
  throw ParameterError("unknown suite: " + suite);
}

std::vector<SuiteRun> run_suites(const std::string& suite, const AuditOptions& options) {
  std::vector<SuiteRun> runs;
  if (suite == "all") {
    for (const auto& s : suite_names()) runs.push_back({s, run_suite(s, options)});
  } else {
    runs.push_back({suite, run_suite(suite, options)});
  }
  return runs;
}

int audit_exit_code(const std::vector<SuiteRun>& runs) {
  for (const auto& run : runs) {
    if (!is_must_agree(run.suite)) continue;
    for (const auto& rec : run.records) {
      if (rec.verdict == Verdict::Disagree) return 1;
    }
  }
  return 0;
}

std::string record_json(const AuditRecord& rec, const std::string& suite) {
  nlohmann::json j;
  j["quantity"] = rec.quantity;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : rec.params) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
      params[k] = *i;
    } else {
      params[k] = std::get<std::string>(v);
    }
  }
  j["params"] = params;
  j["paper_value"] = rec.paper_value ? rational_json(*rec.paper_value) : nlohmann::json(nullptr);
  if (const auto* x = std::get_if<Rational>(&rec.oracle_value)) {
    j["oracle_value"] = rational_json(*x);
  } else {
    const auto& iv = std::get<MeasureInterval>(rec.oracle_value);
    j["oracle_value"] = {{"lo", rational_json(iv.lo)}, {"hi", rational_json(iv.hi)}};
  }
  j["verdict"] = to_string(rec.verdict);
  j["detail"] = rec.detail;
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : rec.candidates) cands.push_back(rational_json(c));
  j["candidates"] = cands;
  if (!suite.empty()) j["suite"] = suite;
  return j.dump();
}

}  // namespace dtuple
