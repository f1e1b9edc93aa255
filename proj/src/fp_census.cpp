#include "dtuple/fp_census.hpp"

#include <bit>
#include <string>

#include "dtuple/arith.hpp"
#include "dtuple/errors.hpp"
#include "dtuple/parallel.hpp"

namespace dtuple {

CensusField CensusField::prime(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw ParameterError("census field needs an odd prime, got " + std::to_string(p));
  if (p > (std::uint64_t{1} << 32)) throw ParameterError("prime too large for a census");
  CensusField f;
  f.prime_ = true;
  f.q_ = p;
  f.p_ = p;
  f.f_ = 1;
  return f;
}

CensusField CensusField::extension(const FqFieldPtr& field) {
  if (field->degree() == 1) return prime(field->p());
  const std::uint64_t q = field->order();
  if (q > kMaxExtensionOrder) throw ParameterError("extension field too large for table-driven census");
  CensusField f;
  f.prime_ = false;
  f.q_ = q;
  f.p_ = field->p();
  f.f_ = field->degree();
  const auto elems = field->elements();
  f.mul_.resize(q * q);
  f.add_.resize(q * q);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      f.mul_[a * q + b] = static_cast<std::uint32_t>((elems[a] * elems[b]).index());
      f.add_[a * q + b] = static_cast<std::uint32_t>((elems[a] + elems[b]).index());
    }
  }
  return f;
}

CensusField CensusField::of(std::uint64_t p, unsigned f) {
  if (f == 1) return prime(p);
  return extension(fq_construct(p, f));
}

std::uint64_t CensusField::embed(std::int64_t n) const {
  // prime subfield elements are the constant polynomials, whose index is the constant
  return mod_reduce(n, p_);
}

SquareTable::SquareTable(const CensusField& field) : q_(field.order()), squares_(field.order(), false) {
  for (std::uint64_t x = 0; x < q_; ++x) squares_[field.mul(x, x)] = true;
  for (std::uint64_t x = 0; x < q_; ++x) count_ += squares_[x] ? 1 : 0;
}

bool is_dr_tuple(std::span<const std::uint64_t> tuple, std::uint64_t r, const CensusField& field,
                 const SquareTable& table) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (!table.contains(field.add(field.mul(tuple[i], tuple[j]), r))) return false;
    }
  }
  return true;
}

namespace {

using Word = std::uint64_t;

struct Rows {
  std::size_t words = 0;
  std::vector<Word> square;  // bit d of row a: a*d + r in the table
  std::vector<Word> zero;    // bit d of row a: a*d + r == 0

  const Word* square_row(std::uint64_t a) const { return square.data() + a * words; }
  const Word* zero_row(std::uint64_t a) const { return zero.data() + a * words; }
};

Rows build_rows(const CensusField& field, std::uint64_t r, const SquareTable& table) {
  const std::uint64_t q = field.order();
  Rows rows;
  rows.words = (q + 63) / 64;
  rows.square.assign(q * rows.words, 0);
  rows.zero.assign(q * rows.words, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t d = 0; d < q; ++d) {
      const std::uint64_t v = field.add(field.mul(a, d), r);
      if (table.contains(v)) rows.square[a * rows.words + d / 64] |= Word{1} << (d % 64);
      if (v == 0) rows.zero[a * rows.words + d / 64] |= Word{1} << (d % 64);
    }
  }
  return rows;
}

struct Counts {
  std::uint64_t total = 0, boundary = 0, offdiag = 0, interior = 0;
  Counts& operator+=(const Counts& o) {
    total += o.total;
    boundary += o.boundary;
    offdiag += o.offdiag;
    interior += o.interior;
    return *this;
  }
};

// Depth-first sweep over the first m-1 coordinates; the admissible values
// of the next coordinate are kept as a bitset, so the last coordinate is
// counted with popcounts.
class Sweep {
 public:
  Sweep(const Rows& rows, std::uint64_t q, unsigned m)
      : rows_(rows), q_(q), m_(m), allowed_(m * rows.words), zerohit_(m * rows.words) {}

  void run_from(std::uint64_t first, Counts& acc) {
    const std::size_t W = rows_.words;
    // level 0: everything allowed, nothing hit
    for (std::size_t w = 0; w < W; ++w) {
      allowed_[w] = ~Word{0};
      zerohit_[w] = 0;
    }
    if (q_ % 64 != 0) allowed_[W - 1] = (Word{1} << (q_ % 64)) - 1;
    descend(0, first, false, false, acc);
  }

 private:
  void descend(unsigned level, std::uint64_t value, bool zero_coord, bool zero_pair, Counts& acc) {
    const std::size_t W = rows_.words;
    const Word* in_allowed = &allowed_[level * W];
    const Word* in_zero = &zerohit_[level * W];
    zero_pair = zero_pair || ((in_zero[value / 64] >> (value % 64)) & 1);
    zero_coord = zero_coord || value == 0;
    Word* out_allowed = &allowed_[(level + 1) * W];
    Word* out_zero = &zerohit_[(level + 1) * W];
    const Word* sq = rows_.square_row(value);
    const Word* zr = rows_.zero_row(value);
    bool any = false;
    for (std::size_t w = 0; w < W; ++w) {
      out_allowed[w] = in_allowed[w] & sq[w];
      out_zero[w] = in_zero[w] | zr[w];
      any = any || out_allowed[w] != 0;
    }
    if (!any) return;
    if (level + 2 == m_) {
      count_last(out_allowed, out_zero, zero_coord, zero_pair, acc);
      return;
    }
    for (std::size_t w = 0; w < W; ++w) {
      Word bits = out_allowed[w];
      while (bits) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
        bits &= bits - 1;
        descend(level + 1, w * 64 + bit, zero_coord, zero_pair, acc);
      }
    }
  }

  void count_last(const Word* allowed, const Word* zerohit, bool zero_coord, bool zero_pair, Counts& acc) const {
    const std::size_t W = rows_.words;
    std::uint64_t total = 0, hit = 0;
    for (std::size_t w = 0; w < W; ++w) {
      Word a = allowed[w];
      total += static_cast<std::uint64_t>(std::popcount(a));
      if (w == 0) a &= ~Word{1};  // drop the zero element
      hit += static_cast<std::uint64_t>(std::popcount(a & zerohit[w]));
    }
    acc.total += total;
    if (zero_coord) {
      acc.boundary += total;
      return;
    }
    const std::uint64_t last_zero = allowed[0] & 1;
    acc.boundary += last_zero;
    const std::uint64_t rest = total - last_zero;
    if (zero_pair) {
      acc.offdiag += rest;
    } else {
      acc.offdiag += hit;
      acc.interior += rest - hit;
    }
  }

  const Rows& rows_;
  std::uint64_t q_;
  unsigned m_;
  std::vector<Word> allowed_;
  std::vector<Word> zerohit_;
};

}  // namespace

CensusBreakdown census(const CensusField& field, std::int64_t r, unsigned m, const CensusOptions& options) {
  if (m < 2) throw ParameterError("census needs m >= 2");
  const std::uint64_t q = field.order();
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (tuples > options.budget / q) {
      throw BudgetExceeded("q^m = " + std::to_string(q) + "^" + std::to_string(m) + " exceeds budget " +
                           std::to_string(options.budget));
    }
    tuples *= q;
  }
  if (q > 16384) throw BudgetExceeded("field too large for the row tables");
  const std::uint64_t rr = field.embed(r);
  const SquareTable table(field);
  const Rows rows = build_rows(field, rr, table);

  struct Worker {
    Counts counts;
    std::unique_ptr<Sweep> sweep;
    Worker& operator+=(const Worker& o) {
      counts += o.counts;
      return *this;
    }
  };
  Worker merged = parallel_reduce<Worker>(
      q, options.jobs, [&] { return Worker{Counts{}, std::make_unique<Sweep>(rows, q, m)}; },
      [&](std::uint64_t first, Worker& w) { w.sweep->run_from(first, w.counts); });

  CensusBreakdown out;
  out.q = q;
  out.r = r;
  out.m = m;
  out.total = merged.counts.total;
  out.boundary = merged.counts.boundary;
  out.offdiag = merged.counts.offdiag;
  out.interior = merged.counts.interior;
  return out;
}

std::int64_t conic_sum_direct(std::int64_t a2, std::int64_t a1, std::int64_t a0, std::uint64_t p) {
  const std::uint64_t A2 = mod_reduce(a2, p), A1 = mod_reduce(a1, p), A0 = mod_reduce(a0, p);
  std::int64_t sum = 0;
  for (std::uint64_t c = 0; c < p; ++c) {
    const std::uint64_t v = (mul_mod(A2, mul_mod(c, c, p), p) + mul_mod(A1, c, p) + A0) % p;
    sum += legendre(static_cast<std::int64_t>(v), p);
  }
  return sum;
}

bool z3_structure_check(std::int64_t r) {
  if (legendre(r, 3) != 1) throw ParameterError("structure check needs r = 1 mod 3");
  const CensusField field = CensusField::prime(3);
  const SquareTable table(field);
  const std::uint64_t rr = field.embed(r);
  for (std::uint64_t a = 1; a < 3; ++a) {
    for (std::uint64_t b = 1; b < 3; ++b) {
      for (std::uint64_t c = 1; c < 3; ++c) {
        const std::uint64_t t[3] = {a, b, c};
        if (is_dr_tuple(t, rr, field, table)) return false;
      }
    }
  }
  return true;
}

Rational asymptotic_gap(const CensusField& field, std::int64_t r, unsigned m, const CensusOptions& options) {
  const CensusBreakdown c = census(field, r, m, options);
  const Rational measure = Rational(static_cast<unsigned long long>(c.total)) /
                           Rational(static_cast<unsigned long long>(field.order())).pow(static_cast<int>(m));
  const Rational main = Rational(1) / Rational(2).pow(static_cast<int>(m * (m - 1) / 2));
  return (measure - main).abs();
}

}  // namespace dtuple
