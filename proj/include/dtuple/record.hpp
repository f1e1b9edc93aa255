#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dtuple/interval.hpp"
#include "dtuple/rational.hpp"

namespace dtuple {

enum class Verdict { Agree, Disagree, Inconclusive };
std::string to_string(Verdict v);

using ParamValue = std::variant<std::int64_t, std::string>;
using OracleValue = std::variant<Rational, MeasureInterval>;

/// One formula-versus-oracle comparison. `candidates` lists competing values
/// that were tested against the same oracle, so an Inconclusive verdict can
/// be rechecked from the record alone.
struct AuditRecord {
  std::string quantity;
  std::map<std::string, ParamValue> params;
  std::optional<Rational> paper_value;
  OracleValue oracle_value;
  Verdict verdict = Verdict::Agree;
  std::string detail;
  std::vector<Rational> candidates;
};

/// Agree when the claimed value equals an exact oracle or lies in an interval oracle;
/// Disagree otherwise; Inconclusive when the interval also holds a
/// candidate different from the claimed value.
Verdict decide(const Rational& claimed, const OracleValue& oracle, const std::vector<Rational>& candidates = {});

/// Recomputes the verdict from the record's own fields.
Verdict recompute_verdict(const AuditRecord& record);

}  // namespace dtuple
