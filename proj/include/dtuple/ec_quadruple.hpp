#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dtuple {

/// Y^2 = (aX + r)(bX + r)(cX + r) over F_p, carried in the monic model
/// y^2 = x^3 + A x^2 + B x + C = (x + rbc)(x + rac)(x + rab) with x = abc X.
struct TripleCurve {
  std::uint64_t p = 0;
  std::uint64_t a = 0, b = 0, c = 0, r = 0;
  std::uint64_t A = 0, B = 0, C = 0;
  std::uint64_t abc = 0;
  std::array<std::uint64_t, 3> roots{};  // -rbc, -rac, -rab

  std::uint64_t rhs(std::uint64_t x) const;
  /// X = x / abc.
  std::uint64_t to_original_x(std::uint64_t x) const;
  std::uint64_t to_monic_x(std::uint64_t X) const;
};

/// Validates p (odd prime), a, b, c (distinct, nonzero mod p) and r (nonzero mod p).
TripleCurve make_triple_curve(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r);

struct CurvePoint {
  bool infinity = true;
  std::uint64_t x = 0, y = 0;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(std::uint64_t x, std::uint64_t y) { return {false, x, y}; }
  bool operator==(const CurvePoint&) const = default;
  /// Infinity first, then affine points by (x, y).
  std::strong_ordering operator<=>(const CurvePoint& o) const {
    if (infinity || o.infinity) return o.infinity <=> infinity;
    if (x != o.x) return x <=> o.x;
    return y <=> o.y;
  }
};

bool on_curve(const TripleCurve& curve, const CurvePoint& P);
/// Every point of E(F_p), Infinity first, then affine points by (x, y).
std::vector<CurvePoint> curve_points(const TripleCurve& curve);
/// 1 + sum_x (1 + chi(f(x))); throws InternalError if the Hasse bound fails.
std::uint64_t curve_order(const TripleCurve& curve);
CurvePoint negate(const TripleCurve& curve, const CurvePoint& P);
CurvePoint double_point(const TripleCurve& curve, const CurvePoint& P);
CurvePoint add_points(const TripleCurve& curve, const CurvePoint& P, const CurvePoint& Q);
/// {2P : P in E(F_p)}, sorted and deduplicated.
std::vector<CurvePoint> doubling_image(const TripleCurve& curve);
/// Original X-coordinates of the affine points of the doubling image, sorted.
std::vector<std::uint64_t> doubling_image_xset(const TripleCurve& curve);

/// Square classes of x - e_i for a point, with the zero factor resolved by
/// the product of the other two (the 2-descent map into (F_p^x / squares)^3).
std::array<int, 3> descent_class(const TripleCurve& curve, const CurvePoint& P);

/// {d : ad + r, bd + r, cd + r all squares}, zero counted as a square unless
/// strict, in which case all three must be nonzero squares. Sorted.
std::vector<std::uint64_t> extension_dset(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                                          std::int64_t r, bool strict = false);

struct TwoDescentReport {
  std::uint64_t p = 0;
  std::int64_t a = 0, b = 0, c = 0, r = 0;
  std::vector<std::uint64_t> dset_nonboundary;   // (ad+r)(bd+r)(cd+r) != 0
  std::vector<std::uint64_t> image_nonboundary;  // doubling image X-set minus 2-torsion X-values
  bool literal_equal = false;                    // the two sets above coincide
  bool dset_subset_of_image = false;
  std::array<int, 3> character_class{};          // chi(bc), chi(ac), chi(ab)
  std::vector<std::uint64_t> coset_nonboundary;  // X-projection of P0 + 2E off the 2-torsion
  bool coset_equal = false;                      // dset_nonboundary == coset_nonboundary
  std::vector<std::uint64_t> boundary_with_zero;  // boundary d in dset when 0 counts as a square
  std::vector<std::uint64_t> boundary_strict;     // boundary d in dset without 0 (always empty)
};

TwoDescentReport two_descent_equiv(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r);

struct EcInstance {
  std::uint64_t p = 0;
  std::int64_t a = 0, b = 0, c = 0, r = 0;
};

/// Deterministic pseudo-random admissible instances: p prime in [pmin, pmax],
/// a, b, c distinct and nonzero mod p, r nonzero mod p.
std::vector<EcInstance> sample_instances(std::size_t count, std::uint64_t seed, std::uint64_t pmin = 13,
                                         std::uint64_t pmax = 101);

/// 8|D| in [p - 2 sqrt(p) - 8, p + 2 sqrt(p)] in exact integer arithmetic.
bool eqd_lower_ok(std::uint64_t p, std::uint64_t size);
bool eqd_upper_ok(std::uint64_t p, std::uint64_t size);

struct EqdViolation {
  std::uint64_t a = 0, b = 0, c = 0;
  std::uint64_t size = 0;
};

struct EqdReport {
  std::uint64_t p = 0;
  std::int64_t r = 0;
  bool strict = false;
  std::uint64_t triples_checked = 0;      // a < b < c, abc != 0, D(r) triple
  std::uint64_t triples_zero_entry = 0;   // distinct D(r) triples with a zero entry, skipped
  std::vector<EqdViolation> violations;
  std::uint64_t min_size = 0, max_size = 0;
};

/// Runs the extension-count bounds over every distinct-entry D(r) triple over F_p.
EqdReport eqd_audit(std::uint64_t p, std::int64_t r, bool strict = false);

}  // namespace dtuple
