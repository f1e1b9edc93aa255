#include "dtuple/record.hpp"

namespace dtuple {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Agree:
      return "Agree";
    case Verdict::Disagree:
      return "Disagree";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

Verdict decide(const Rational& claimed, const OracleValue& oracle, const std::vector<Rational>& candidates) {
  if (const auto* exact = std::get_if<Rational>(&oracle)) {
    return claimed == *exact ? Verdict::Agree : Verdict::Disagree;
  }
  const auto& interval = std::get<MeasureInterval>(oracle);
  if (!interval.contains(claimed)) return Verdict::Disagree;
  for (const auto& c : candidates) {
    if (c != claimed && interval.contains(c)) return Verdict::Inconclusive;
  }
  return Verdict::Agree;
}

Verdict recompute_verdict(const AuditRecord& record) {
  if (!record.paper_value) return record.verdict;
  return decide(*record.paper_value, record.oracle_value, record.candidates);
}

}  // namespace dtuple
