#pragma once

#include "dtuple/rational.hpp"

namespace dtuple {

/// Closed interval [lo, hi] bracketing a measure.
struct MeasureInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  bool operator==(const MeasureInterval&) const = default;
};

}  // namespace dtuple
