#pragma once

#include <stdexcept>
#include <string>

namespace dtuple {

// Invalid argument combination (non-prime modulus, out-of-range degree, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration would exceed the configured residue-tuple budget.
class BudgetExceeded : public ParameterError {
 public:
  explicit BudgetExceeded(const std::string& what) : ParameterError(what) {}
};

class Unsupported : public std::logic_error {
 public:
  explicit Unsupported(const std::string& what) : std::logic_error(what) {}
};

// v_p(0) requested; callers handle the zero class explicitly.
class ValuationUndefined : public std::domain_error {
 public:
  explicit ValuationUndefined(const std::string& what) : std::domain_error(what) {}
};

class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dtuple
