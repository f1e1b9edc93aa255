#include "dtuple/ec_quadruple.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "dtuple/arith.hpp"
#include "dtuple/errors.hpp"

namespace dtuple {

namespace {

std::uint64_t addm(std::uint64_t x, std::uint64_t y, std::uint64_t p) { return (x + y) % p; }
std::uint64_t subm(std::uint64_t x, std::uint64_t y, std::uint64_t p) { return (x + p - y) % p; }
std::uint64_t mulm(std::uint64_t x, std::uint64_t y, std::uint64_t p) { return mul_mod(x, y, p); }

int chi(std::uint64_t x, std::uint64_t p) { return legendre(static_cast<std::int64_t>(x), p); }

bool is_square_with_zero(std::uint64_t x, std::uint64_t p) { return chi(x, p) != -1; }
bool is_nonzero_square(std::uint64_t x, std::uint64_t p) { return chi(x, p) == 1; }

void validate_triple(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t r) {
  if (p < 3 || !is_prime(p)) throw ParameterError("curve needs an odd prime, got " + std::to_string(p));
  if (a == 0 || b == 0 || c == 0) throw ParameterError("triple entries must be nonzero mod p");
  if (a == b || b == c || a == c) throw ParameterError("triple entries must be distinct mod p (singular curve)");
  if (r == 0) throw ParameterError("r must be nonzero mod p");
}

// uniform integer in [lo, hi] by rejection from the raw generator
std::uint64_t draw(std::mt19937_64& gen, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = gen();
  } while (v >= limit);
  return lo + v % span;
}

}  // namespace

std::uint64_t TripleCurve::rhs(std::uint64_t x) const {
  return mulm(mulm(subm(x, roots[0], p), subm(x, roots[1], p), p), subm(x, roots[2], p), p);
}

std::uint64_t TripleCurve::to_original_x(std::uint64_t x) const { return mulm(x, inv_mod(abc, p), p); }

std::uint64_t TripleCurve::to_monic_x(std::uint64_t X) const { return mulm(X, abc, p); }

TripleCurve make_triple_curve(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r) {
  TripleCurve E;
  if (p < 3 || !is_prime(p)) throw ParameterError("curve needs an odd prime, got " + std::to_string(p));
  E.p = p;
  E.a = mod_reduce(a, p);
  E.b = mod_reduce(b, p);
  E.c = mod_reduce(c, p);
  E.r = mod_reduce(r, p);
  validate_triple(p, E.a, E.b, E.c, E.r);
  E.abc = mulm(mulm(E.a, E.b, p), E.c, p);
  const std::uint64_t u = mulm(E.r, mulm(E.b, E.c, p), p);  // rbc
  const std::uint64_t v = mulm(E.r, mulm(E.a, E.c, p), p);  // rac
  const std::uint64_t w = mulm(E.r, mulm(E.a, E.b, p), p);  // rab
  E.roots = {subm(0, u, p), subm(0, v, p), subm(0, w, p)};
  E.A = addm(addm(u, v, p), w, p);
  E.B = addm(addm(mulm(u, v, p), mulm(u, w, p), p), mulm(v, w, p), p);
  E.C = mulm(mulm(u, v, p), w, p);
  return E;
}

bool on_curve(const TripleCurve& E, const CurvePoint& P) {
  if (P.infinity) return true;
  if (P.x >= E.p || P.y >= E.p) return false;
  return mulm(P.y, P.y, E.p) == E.rhs(P.x);
}

std::vector<CurvePoint> curve_points(const TripleCurve& E) {
  const std::uint64_t p = E.p;
  std::vector<std::uint64_t> root_of(p, p);  // root_of[s] = some y with y^2 = s
  std::vector<std::uint64_t> other(p, p);
  for (std::uint64_t y = 0; y < p; ++y) {
    const std::uint64_t s = mulm(y, y, p);
    if (root_of[s] == p) {
      root_of[s] = y;
    } else {
      other[s] = y;
    }
  }
  std::vector<CurvePoint> pts{CurvePoint::at_infinity()};
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t s = E.rhs(x);
    if (root_of[s] == p) continue;
    pts.push_back(CurvePoint::affine(x, root_of[s]));
    if (other[s] != p) pts.push_back(CurvePoint::affine(x, other[s]));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::uint64_t curve_order(const TripleCurve& E) {
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < E.p; ++x) n += static_cast<std::uint64_t>(1 + chi(E.rhs(x), E.p));
  const std::int64_t t = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(E.p) - 1;
  if (static_cast<std::uint64_t>(t * t) > 4 * E.p) throw InternalError("Hasse bound violated");
  return n;
}

CurvePoint negate(const TripleCurve& E, const CurvePoint& P) {
  if (P.infinity) return P;
  return CurvePoint::affine(P.x, subm(0, P.y, E.p));
}

CurvePoint double_point(const TripleCurve& E, const CurvePoint& P) {
  if (P.infinity || P.y == 0) return CurvePoint::at_infinity();
  const std::uint64_t p = E.p;
  // f'(x) = 3x^2 + 2Ax + B
  const std::uint64_t fp =
      addm(addm(mulm(3, mulm(P.x, P.x, p), p), mulm(mulm(2, E.A, p), P.x, p), p), E.B, p);
  const std::uint64_t lambda = mulm(fp, inv_mod(mulm(2, P.y, p), p), p);
  const std::uint64_t x3 = subm(subm(mulm(lambda, lambda, p), E.A, p), mulm(2, P.x, p), p);
  const std::uint64_t y3 = subm(mulm(lambda, subm(P.x, x3, p), p), P.y, p);
  return CurvePoint::affine(x3, y3);
}

CurvePoint add_points(const TripleCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const std::uint64_t p = E.p;
  if (P.x == Q.x) {
    if (addm(P.y, Q.y, p) == 0) return CurvePoint::at_infinity();
    return double_point(E, P);
  }
  const std::uint64_t lambda = mulm(subm(Q.y, P.y, p), inv_mod(subm(Q.x, P.x, p), p), p);
  const std::uint64_t x3 = subm(subm(subm(mulm(lambda, lambda, p), E.A, p), P.x, p), Q.x, p);
  const std::uint64_t y3 = subm(mulm(lambda, subm(P.x, x3, p), p), P.y, p);
  return CurvePoint::affine(x3, y3);
}

std::vector<CurvePoint> doubling_image(const TripleCurve& E) {
  std::vector<CurvePoint> img;
  for (const auto& P : curve_points(E)) img.push_back(double_point(E, P));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

std::vector<std::uint64_t> doubling_image_xset(const TripleCurve& E) {
  std::vector<std::uint64_t> xs;
  for (const auto& P : doubling_image(E)) {
    if (!P.infinity) xs.push_back(E.to_original_x(P.x));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::array<int, 3> descent_class(const TripleCurve& E, const CurvePoint& P) {
  if (P.infinity) return {1, 1, 1};
  std::array<int, 3> cls{};
  int zero_at = -1;
  for (int i = 0; i < 3; ++i) {
    cls[i] = chi(subm(P.x, E.roots[i], E.p), E.p);
    if (cls[i] == 0) zero_at = i;
  }
  if (zero_at >= 0) cls[zero_at] = cls[(zero_at + 1) % 3] * cls[(zero_at + 2) % 3];
  return cls;
}

std::vector<std::uint64_t> extension_dset(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                                          std::int64_t r, bool strict) {
  if (p < 3 || !is_prime(p)) throw ParameterError("extension_dset needs an odd prime");
  const std::uint64_t A = mod_reduce(a, p), B = mod_reduce(b, p), C = mod_reduce(c, p), R = mod_reduce(r, p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 0; d < p; ++d) {
    const std::uint64_t v[3] = {addm(mulm(A, d, p), R, p), addm(mulm(B, d, p), R, p), addm(mulm(C, d, p), R, p)};
    bool ok = true;
    for (auto x : v) ok = ok && (strict ? is_nonzero_square(x, p) : is_square_with_zero(x, p));
    if (ok) out.push_back(d);
  }
  return out;
}

TwoDescentReport two_descent_equiv(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r) {
  const TripleCurve E = make_triple_curve(p, a, b, c, r);
  TwoDescentReport rep;
  rep.p = p;
  rep.a = a;
  rep.b = b;
  rep.c = c;
  rep.r = r;

  auto is_boundary = [&](std::uint64_t d) {
    return mulm(mulm(addm(mulm(E.a, d, p), E.r, p), addm(mulm(E.b, d, p), E.r, p), p), addm(mulm(E.c, d, p), E.r, p),
                p) == 0;
  };

  for (auto d : extension_dset(p, a, b, c, r)) {
    if (is_boundary(d)) {
      rep.boundary_with_zero.push_back(d);
    } else {
      rep.dset_nonboundary.push_back(d);
    }
  }
  for (auto d : extension_dset(p, a, b, c, r, true)) {
    if (is_boundary(d)) rep.boundary_strict.push_back(d);
  }

  for (auto X : doubling_image_xset(E)) {
    if (!is_boundary(X)) rep.image_nonboundary.push_back(X);
  }
  rep.literal_equal = rep.dset_nonboundary == rep.image_nonboundary;
  rep.dset_subset_of_image = std::includes(rep.image_nonboundary.begin(), rep.image_nonboundary.end(),
                                           rep.dset_nonboundary.begin(), rep.dset_nonboundary.end());

  rep.character_class = {chi(mulm(E.b, E.c, p), p), chi(mulm(E.a, E.c, p), p), chi(mulm(E.a, E.b, p), p)};
  const auto points = curve_points(E);
  const auto image = doubling_image(E);
  auto base = std::find_if(points.begin(), points.end(),
                           [&](const CurvePoint& P) { return descent_class(E, P) == rep.character_class; });
  if (base == points.end()) throw InternalError("no point in the target descent class");
  for (const auto& Q : image) {
    const CurvePoint S = add_points(E, *base, Q);
    if (S.infinity || S.y == 0) continue;
    rep.coset_nonboundary.push_back(E.to_original_x(S.x));
  }
  std::sort(rep.coset_nonboundary.begin(), rep.coset_nonboundary.end());
  rep.coset_nonboundary.erase(std::unique(rep.coset_nonboundary.begin(), rep.coset_nonboundary.end()),
                              rep.coset_nonboundary.end());
  rep.coset_equal = rep.coset_nonboundary == rep.dset_nonboundary;
  return rep;
}

std::vector<EcInstance> sample_instances(std::size_t count, std::uint64_t seed, std::uint64_t pmin,
                                         std::uint64_t pmax) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = std::max<std::uint64_t>(pmin, 3); p <= pmax; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  if (primes.empty()) throw ParameterError("no odd prime in the sampling range");
  std::mt19937_64 gen(seed);
  std::vector<EcInstance> out;
  out.reserve(count);
  while (out.size() < count) {
    EcInstance inst;
    inst.p = primes[draw(gen, 0, primes.size() - 1)];
    inst.a = static_cast<std::int64_t>(draw(gen, 1, inst.p - 1));
    inst.b = static_cast<std::int64_t>(draw(gen, 1, inst.p - 1));
    inst.c = static_cast<std::int64_t>(draw(gen, 1, inst.p - 1));
    inst.r = static_cast<std::int64_t>(draw(gen, 1, inst.p - 1));
    if (inst.a == inst.b || inst.b == inst.c || inst.a == inst.c) continue;
    out.push_back(inst);
  }
  return out;
}

bool eqd_upper_ok(std::uint64_t p, std::uint64_t size) {
  // 8|D| - p <= 2 sqrt(p)
  const std::int64_t lhs = 8 * static_cast<std::int64_t>(size) - static_cast<std::int64_t>(p);
  return lhs <= 0 || static_cast<std::uint64_t>(lhs * lhs) <= 4 * p;
}

bool eqd_lower_ok(std::uint64_t p, std::uint64_t size) {
  // p - 8 - 8|D| <= 2 sqrt(p)
  const std::int64_t lhs = static_cast<std::int64_t>(p) - 8 - 8 * static_cast<std::int64_t>(size);
  return lhs <= 0 || static_cast<std::uint64_t>(lhs * lhs) <= 4 * p;
}

EqdReport eqd_audit(std::uint64_t p, std::int64_t r, bool strict) {
  if (p < 3 || !is_prime(p)) throw ParameterError("extension-count audit needs an odd prime");
  const std::uint64_t R = mod_reduce(r, p);
  if (R == 0) throw ParameterError("r must be nonzero mod p");
  auto sq = [&](std::uint64_t x) { return strict ? is_nonzero_square(x, p) : is_square_with_zero(x, p); };
  auto pair_ok = [&](std::uint64_t x, std::uint64_t y) { return sq(addm(mulm(x, y, p), R, p)); };
  EqdReport rep;
  rep.p = p;
  rep.r = r;
  rep.strict = strict;
  bool first = true;
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = a + 1; b < p; ++b) {
      if (!pair_ok(a, b)) continue;
      for (std::uint64_t c = b + 1; c < p; ++c) {
        if (!pair_ok(a, c) || !pair_ok(b, c)) continue;
        if (a == 0) {
          ++rep.triples_zero_entry;
          continue;
        }
        ++rep.triples_checked;
        const std::uint64_t n = extension_dset(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                               static_cast<std::int64_t>(c), r, strict)
                                    .size();
        rep.min_size = first ? n : std::min(rep.min_size, n);
        rep.max_size = first ? n : std::max(rep.max_size, n);
        first = false;
        if (!eqd_lower_ok(p, n) || !eqd_upper_ok(p, n)) rep.violations.push_back({a, b, c, n});
      }
    }
  }
  return rep;
}

}  // namespace dtuple
