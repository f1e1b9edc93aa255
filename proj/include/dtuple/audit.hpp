#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtuple/record.hpp"

namespace dtuple {

struct AuditOptions {
  std::vector<std::uint64_t> primes;   // empty: the suite default
  std::vector<std::int64_t> rset;      // empty: the auto r-set per prime
  unsigned precision = 0;              // 0: the suite default
  std::uint64_t pmax = 0;              // 0: the suite default
  unsigned jobs = 1;
  std::uint64_t budget = 1'000'000'000;
};

const std::vector<std::string>& suite_names();
/// Suites whose Disagree records fail the exit code.
bool is_must_agree(const std::string& suite);

/// {1, n, p, p n, p^2, p^2 n, p^3} with n the smallest non-residue mod p.
std::vector<std::int64_t> auto_rset(std::uint64_t p);

/// Largest N with p^(2N) <= limit.
unsigned pair_precision(std::uint64_t p, std::uint64_t limit = 100'000'000);

/// Runs one named suite ("all" runs every suite in order). Throws
/// ParameterError for an unknown name.
std::vector<AuditRecord> run_suite(const std::string& suite, const AuditOptions& options = {});

struct SuiteRun {
  std::string suite;
  std::vector<AuditRecord> records;
};
std::vector<SuiteRun> run_suites(const std::string& suite, const AuditOptions& options = {});

/// 0 iff no must-agree suite produced a Disagree record.
int audit_exit_code(const std::vector<SuiteRun>& runs);

/// One JSON object per record with sorted keys and rationals as "num/den".
std::string record_json(const AuditRecord& record, const std::string& suite = "");

}  // namespace dtuple
