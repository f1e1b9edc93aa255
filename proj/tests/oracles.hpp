#pragma once
// Brute-force reference implementations used only by the tests. None of
// these share code with the library beyond plain integer arithmetic.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t v = 1;
  while (e--) v *= b;
  return v;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

/// {x^2 mod n : 0 <= x < n}
inline std::vector<bool> squares_mod(std::uint64_t n) {
  std::vector<bool> sq(n, false);
  for (std::uint64_t x = 0; x < n; ++x) sq[x * x % n] = true;
  return sq;
}

/// Legendre symbol by table lookup.
inline int legendre(std::int64_t a, std::uint64_t p) {
  const auto sq = squares_mod(p);
  const auto x = static_cast<std::uint64_t>(mod(a, static_cast<std::int64_t>(p)));
  if (x == 0) return 0;
  return sq[x] ? 1 : -1;
}

struct Census {
  std::uint64_t total = 0, boundary = 0, offdiag = 0, interior = 0;
};

/// Every tuple in F_p^m, with squares (zero included) from a lookup table.
inline Census census_fp(std::uint64_t p, std::int64_t r, unsigned m, bool reversed = false) {
  const auto sq = squares_mod(p);
  const auto rr = static_cast<std::uint64_t>(mod(r, static_cast<std::int64_t>(p)));
  Census c;
  std::vector<std::uint64_t> t(m, 0);
  const std::uint64_t n = ipow(p, m);
  for (std::uint64_t code = 0; code < n; ++code) {
    std::uint64_t x = code;
    for (unsigned i = 0; i < m; ++i) {
      t[reversed ? m - 1 - i : i] = x % p;
      x /= p;
    }
    bool ok = true, zero_pair = false, zero_coord = false;
    for (unsigned i = 0; i < m; ++i) {
      if (t[i] == 0) zero_coord = true;
      for (unsigned j = i + 1; j < m; ++j) {
        const std::uint64_t v = (t[i] * t[j] + rr) % p;
        if (!sq[v]) ok = false;
        if (v == 0) zero_pair = true;
      }
    }
    if (!ok) continue;
    ++c.total;
    if (zero_coord) {
      ++c.boundary;
    } else if (zero_pair) {
      ++c.offdiag;
    } else {
      ++c.interior;
    }
  }
  return c;
}

/// Status of a residue class mod p^N judged from its lifts mod p^(N+L):
/// 2 if every lift is a square unit-class mod p^(N+L), 0 if none is a square,
/// 1 otherwise.
inline int lift_status(std::uint64_t p, unsigned N, unsigned L, std::uint64_t value) {
  const std::uint64_t M = ipow(p, N), ML = ipow(p, N + L);
  const auto sq = squares_mod(ML);
  bool any = false, all = true;
  for (std::uint64_t j = 0; j < ML / M; ++j) {
    const bool s = sq[value + j * M];
    any = any || s;
    all = all && s;
  }
  return all ? 2 : (any ? 1 : 0);
}

}  // namespace oracle
