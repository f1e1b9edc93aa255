// Command-line front end: closed-form measures, censuses, audits and curve checks.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "dtuple/arith.hpp"
#include "dtuple/audit.hpp"
#include "dtuple/closed_forms.hpp"
#include "dtuple/ec_quadruple.hpp"
#include "dtuple/errors.hpp"
#include "dtuple/fp_census.hpp"
#include "dtuple/padic.hpp"
#include "dtuple/zp_census.hpp"

using namespace dtuple;

namespace {

struct MeasureArgs {
  std::string formula;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::int64_t r = 1;
  unsigned m = 2;
  unsigned alpha = 0;
  int chi = 1;
  unsigned k = 0;
  bool decimal = false;
  int digits = 12;
};

struct CensusArgs {
  std::string ring;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned f = 1;
  std::int64_t r = 1;
  unsigned m = 2;
  unsigned precision = 0;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t budget = 1'000'000'000;
  bool naive = false;
};

struct AuditArgs {
  std::string suite;
  std::vector<std::uint64_t> primes;
  std::string rset = "auto";
  unsigned precision = 0;
  std::uint64_t pmax = 0;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t budget = 1'000'000'000;
};

struct EcArgs {
  std::uint64_t p = 0;
  std::vector<std::int64_t> triple;
  std::int64_t r = 1;
};

std::uint64_t require_p(std::uint64_t p) {
  if (p == 0) throw ParameterError("--p is required");
  return p;
}

Rational evaluate(const MeasureArgs& a) {
  const std::string& f = a.formula;
  if (f == "pair") return diop2_zp(r_shape(a.r, require_p(a.p)));
  if (f == "z2-pair") return diop2_z2();
  if (f == "z3") return diopm_z3_paper(a.m);
  if (f == "z3-unordered") return diopm_z3_cases(a.m, z3_unordered_cases());
  if (f == "triple-fp") return diop3_fp_paper(require_p(a.p), a.r);
  if (f == "tilde3-fp") return tilde3_fp_paper(require_p(a.p), a.r);
  if (f == "boundary-fp") return count_boundary_paper(require_p(a.p), a.r);
  if (f == "offdiag-fp") return count_offdiag_paper(require_p(a.p), a.r);
  if (f == "mu-a") return mu_A_k(r_shape(a.r, require_p(a.p)), a.k);
  if (f == "mu-b") return mu_B_beta(r_shape(a.r, require_p(a.p)), a.k);
  if (f == "ok-pair") {
    if (a.q == 0) throw ParameterError("--q is required");
    return diop2_ok(a.q, a.alpha, a.chi);
  }
  if (f == "ok-ram3") return diopm_ok_ram3(a.m);
  if (f == "asymptotic") return asymptotic_main(a.m);
  throw ParameterError("unknown formula: " + f);
}

int run_measure(const MeasureArgs& a) {
  const Rational v = evaluate(a);
  std::cout << v.str();
  if (a.decimal) std::cout << " " << v.decimal(a.digits);
  std::cout << "\n";
  return 0;
}

CensusField census_field(const CensusArgs& a) {
  if (a.q != 0) {
    std::uint64_t p = 0;
    if (!odd_prime_power(a.q, &p)) throw ParameterError("--q must be an odd prime power");
    unsigned f = 0;
    for (std::uint64_t v = 1; v < a.q; v *= p) ++f;
    return CensusField::of(p, f);
  }
  return CensusField::of(require_p(a.p), a.f);
}

int run_census(const CensusArgs& a) {
  if (a.format != "json" && a.format != "csv") throw ParameterError("--format must be json or csv");
  if (a.ring == "fp") {
    const CensusField field = census_field(a);
    CensusOptions o;
    o.budget = a.budget;
    o.jobs = a.jobs;
    const auto c = census(field, a.r, a.m, o);
    if (a.format == "json") {
      nlohmann::json j{{"q", c.q},           {"r", c.r},         {"m", c.m},
                       {"total", c.total},   {"boundary", c.boundary},
                       {"offdiag", c.offdiag}, {"interior", c.interior}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "q,r,m,total,boundary,offdiag,interior\n"
                << c.q << "," << c.r << "," << c.m << "," << c.total << "," << c.boundary << "," << c.offdiag
                << "," << c.interior << "\n";
    }
    return 0;
  }
  if (a.ring == "zp") {
    if (a.precision == 0) throw ParameterError("--precision is required for zp censuses");
    ZpOptions o;
    o.budget = a.budget;
    o.jobs = a.jobs;
    o.pair_fast_path = !a.naive;
    const auto res = zp_interval_detail(require_p(a.p), a.r, a.m, a.precision, o);
    const auto& iv = res.interval;
    if (a.format == "json") {
      nlohmann::json j{{"p", a.p},
                       {"r", a.r},
                       {"m", a.m},
                       {"N", a.precision},
                       {"lo", iv.lo.str()},
                       {"hi", iv.hi.str()},
                       {"width", iv.width().str()},
                       {"square_count", res.square_count},
                       {"undetermined_count", res.undetermined_count}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "p,r,m,N,lo,hi\n"
                << a.p << "," << a.r << "," << a.m << "," << a.precision << "," << iv.lo.str() << ","
                << iv.hi.str() << "\n";
    }
    return 0;
  }
  throw ParameterError("census ring must be fp or zp");
}

std::vector<std::int64_t> parse_rset(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text == "auto") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ParameterError("bad --rset entry: " + item);
    }
  }
  if (out.empty()) throw ParameterError("empty --rset");
  return out;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run_audit(const AuditArgs& a) {
  if (a.format != "json" && a.format != "csv") throw ParameterError("--format must be json or csv");
  AuditOptions o;
  o.primes = a.primes;
  o.rset = parse_rset(a.rset);
  o.precision = a.precision;
  o.pmax = a.pmax;
  o.jobs = a.jobs;
  o.budget = a.budget;
  const auto runs = run_suites(a.suite, o);
  if (a.format == "csv") std::cout << "suite,quantity,params,paper_value,oracle_lo,oracle_hi,verdict,detail\n";
  for (const auto& run : runs) {
    for (const auto& rec : run.records) {
      if (a.format == "json") {
        std::cout << record_json(rec, run.suite) << "\n";
        continue;
      }
      std::string params;
      for (const auto& [k, v] : rec.params) {
        if (!params.empty()) params += ";";
        params += k + "=";
        params += std::holds_alternative<std::int64_t>(v) ? std::to_string(std::get<std::int64_t>(v))
                                                         : std::get<std::string>(v);
      }
      std::string lo, hi;
      if (const auto* x = std::get_if<Rational>(&rec.oracle_value)) {
        lo = hi = x->str();
      } else {
        lo = std::get<MeasureInterval>(rec.oracle_value).lo.str();
        hi = std::get<MeasureInterval>(rec.oracle_value).hi.str();
      }
      std::cout << run.suite << "," << rec.quantity << "," << csv_field(params) << ","
                << (rec.paper_value ? rec.paper_value->str() : "") << "," << lo << "," << hi << ","
                << to_string(rec.verdict) << "," << csv_field(rec.detail) << "\n";
    }
  }
  return audit_exit_code(runs);
}

nlohmann::json to_json_list(const std::vector<std::uint64_t>& v) { return nlohmann::json(v); }

int run_ec(const EcArgs& a) {
  if (a.triple.size() != 3) throw ParameterError("--triple needs three entries a,b,c");
  const std::uint64_t p = require_p(a.p);
  const TripleCurve E = make_triple_curve(p, a.triple[0], a.triple[1], a.triple[2], a.r);
  const auto rep = two_descent_equiv(p, a.triple[0], a.triple[1], a.triple[2], a.r);
  const std::uint64_t order = curve_order(E);
  nlohmann::json j{{"p", p},
                   {"triple", a.triple},
                   {"r", a.r},
                   {"monic", {{"A", E.A}, {"B", E.B}, {"C", E.C}}},
                   {"two_torsion_x", {E.roots[0], E.roots[1], E.roots[2]}},
                   {"order", order},
                   {"doubling_image_size", doubling_image(E).size()},
                   {"dset", to_json_list(extension_dset(p, a.triple[0], a.triple[1], a.triple[2], a.r))},
                   {"dset_nonboundary", to_json_list(rep.dset_nonboundary)},
                   {"image_nonboundary", to_json_list(rep.image_nonboundary)},
                   {"literal_equal", rep.literal_equal},
                   {"dset_subset_of_image", rep.dset_subset_of_image},
                   {"character_class", rep.character_class},
                   {"coset_nonboundary", to_json_list(rep.coset_nonboundary)},
                   {"coset_equal", rep.coset_equal},
                   {"boundary_with_zero", to_json_list(rep.boundary_with_zero)},
                   {"boundary_strict", to_json_list(rep.boundary_strict)}};
  std::cout << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D(r)-tuple measures: closed forms, exhaustive censuses and audits"};
  app.require_subcommand(1);

  MeasureArgs ma;
  auto* measure = app.add_subcommand("measure", "Evaluate a closed-form measure exactly");
  measure->add_option("formula", ma.formula,
                      "pair | z2-pair | z3 | z3-unordered | triple-fp | tilde3-fp | boundary-fp | offdiag-fp | "
                      "mu-a | mu-b | ok-pair | ok-ram3 | asymptotic")
      ->required();
  measure->add_option("--p", ma.p, "Prime");
  measure->add_option("--q", ma.q, "Residue field order");
  measure->add_option("--r", ma.r, "Shift r");
  measure->add_option("--m", ma.m, "Tuple length");
  measure->add_option("--alpha", ma.alpha, "Valuation of r (ok-pair)");
  measure->add_option("--chi", ma.chi, "Character of the unit part of r (ok-pair)");
  measure->add_option("--k", ma.k, "Class index: k for mu-a, beta for mu-b");
  measure->add_flag("--decimal", ma.decimal, "Also print a decimal approximation");
  measure->add_option("--digits", ma.digits, "Decimal digits");

  CensusArgs ca;
  auto* cen = app.add_subcommand("census", "Exhaustive census over F_q (fp) or Z/p^N (zp)");
  cen->add_option("ring", ca.ring, "fp | zp")->required();
  cen->add_option("--p", ca.p, "Prime");
  cen->add_option("--q", ca.q, "Field order (fp)");
  cen->add_option("--f", ca.f, "Extension degree (fp)");
  cen->add_option("--r", ca.r, "Shift r");
  cen->add_option("--m", ca.m, "Tuple length");
  cen->add_option("--precision,-N", ca.precision, "p-adic precision (zp)");
  cen->add_option("--format", ca.format, "json | csv");
  cen->add_option("--jobs", ca.jobs, "Worker threads");
  cen->add_option("--budget", ca.budget, "Maximum number of tuples");
  cen->add_flag("--naive", ca.naive, "Disable the m = 2 fast path (zp)");

  AuditArgs aa;
  auto* aud = app.add_subcommand("audit", "Run a formula-versus-oracle audit suite");
  aud->add_option("suite", aa.suite,
                  "pairs-zp | z2 | z3-adjudicate | triples-fp | conic | valuation-classes | ok-series | ec | "
                  "asymptotics | all")
      ->required();
  aud->add_option("--p", aa.primes, "Primes (or field orders for ok-series)")->delimiter(',');
  aud->add_option("--rset", aa.rset, "auto or a comma-separated list");
  aud->add_option("--precision,-N", aa.precision, "p-adic precision override");
  aud->add_option("--pmax", aa.pmax, "Largest prime for sweeps");
  aud->add_option("--format", aa.format, "json | csv");
  aud->add_option("--jobs", aa.jobs, "Worker threads");
  aud->add_option("--budget", aa.budget, "Maximum number of tuples per census");

  EcArgs ea;
  auto* ec = app.add_subcommand("ec-check", "Curve attached to a triple: order, doubling image, 2-descent");
  ec->add_option("--p", ea.p, "Prime")->required();
  ec->add_option("--triple", ea.triple, "a,b,c")->delimiter(',')->required();
  ec->add_option("--r", ea.r, "Shift r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*measure) return run_measure(ma);
    if (*cen) return run_census(ca);
    if (*aud) return run_audit(aa);
    if (*ec) return run_ec(ea);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
