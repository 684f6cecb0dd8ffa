#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "setpart/bigint.hpp"
#include "setpart/combinatorics.hpp"
#include "setpart/egf.hpp"

namespace setpart {

// ---------------------------------------------------------------------------
// Streaming row generators. The triangles at n = 1500 hold entries with
// thousands of digits, so full retention is opt-in; these visitors keep only
// the rows the recurrences need (one for Stirling, two for the no-singleton
// variant) and hand each completed row to the caller.
// ---------------------------------------------------------------------------

// S(n,k) = k*S(n-1,k) + S(n-1,k-1); visit(n, row) for n = 0..cap,
// row holding S(n, 0..n).
template <typename Visitor>
void stream_stirling_rows(std::uint32_t cap, Visitor&& visit) {
  std::vector<BigInt> prev{BigInt(1)};
  visit(0u, prev);
  std::vector<BigInt> cur;
  for (std::uint32_t n = 1; n <= cap; ++n) {
    cur.assign(n + 1, BigInt());
    for (std::uint32_t k = 1; k < n; ++k) {
      cur[k] = prev[k].times(k);
      cur[k] += prev[k - 1];
    }
    cur[n] = BigInt(1);
    visit(n, cur);
    std::swap(prev, cur);
  }
}

inline std::vector<BigInt> stirling_row(std::uint32_t n) {
  std::vector<BigInt> out;
  stream_stirling_rows(n, [&](std::uint32_t m, const std::vector<BigInt>& row) {
    if (m == n) out = row;
  });
  return out;
}

// T(n,k): partitions of an n-set into k blocks, every block of size >= 2.
// T(n,k) = k*T(n-1,k) + (n-1)*T(n-2,k-1); element n either joins an existing
// block or pairs with one chosen partner.
template <typename Visitor>
void stream_associated_rows(std::uint32_t cap, Visitor&& visit) {
  std::vector<BigInt> prev2{BigInt(1)};
  visit(0u, prev2);
  if (cap == 0) return;
  std::vector<BigInt> prev{BigInt(0), BigInt(0)};
  visit(1u, prev);
  std::vector<BigInt> cur;
  for (std::uint32_t n = 2; n <= cap; ++n) {
    cur.assign(n + 1, BigInt());
    for (std::uint32_t k = 1; k <= n; ++k) {
      BigInt value;
      if (k < prev.size()) value = prev[k].times(k);
      if (k - 1 < prev2.size()) value += prev2[k - 1].times(n - 1);
      cur[k] = std::move(value);
    }
    visit(n, cur);
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
}

inline std::vector<BigInt> associated_row(std::uint32_t n) {
  std::vector<BigInt> out;
  stream_associated_rows(
      n, [&](std::uint32_t m, const std::vector<BigInt>& row) {
        if (m == n) out = row;
      });
  return out;
}

// A(n) = sum_k T(n,k) for n = 0..cap: classifications with no isolate.
inline std::vector<BigInt> no_isolate_counts(std::uint32_t cap) {
  std::vector<BigInt> sums(cap + 1);
  stream_associated_rows(cap,
                         [&](std::uint32_t n, const std::vector<BigInt>& row) {
                           BigInt total;
                           for (const BigInt& v : row) total += v;
                           sums[n] = std::move(total);
                         });
  return sums;
}

// T(n-i, f-i) for i = 0..f, harvested in one streaming pass. These are the
// no-singleton factors of the classification counts with f families and i
// isolates on n elements.
inline std::vector<BigInt> associated_diagonal(std::uint32_t n,
                                               std::uint32_t f) {
  if (f > n) throw std::invalid_argument("associated_diagonal: f > n");
  std::vector<BigInt> out(f + 1);
  stream_associated_rows(
      n, [&](std::uint32_t m, const std::vector<BigInt>& row) {
        if (m + f < n) return;
        std::uint32_t i = n - m;
        std::uint32_t col = f - i;
        out[i] = col < row.size() ? row[col] : BigInt(0);
      });
  return out;
}

// ---------------------------------------------------------------------------
// Retained tables, immutable after construction and safe for shared reads.
// ---------------------------------------------------------------------------

class StirlingTable {
 public:
  explicit StirlingTable(std::uint32_t cap) {
    rows_.reserve(cap + 1);
    stream_stirling_rows(
        cap, [&](std::uint32_t, const std::vector<BigInt>& row) {
          rows_.push_back(row);
        });
  }

  std::uint32_t cap() const {
    return static_cast<std::uint32_t>(rows_.size() - 1);
  }
  const BigInt& at(std::uint32_t n, std::uint32_t k) const {
    static const BigInt zero;
    if (n >= rows_.size()) throw std::invalid_argument("StirlingTable: n > cap");
    return k < rows_[n].size() ? rows_[n][k] : zero;
  }
  const std::vector<BigInt>& row(std::uint32_t n) const {
    if (n >= rows_.size()) throw std::invalid_argument("StirlingTable: n > cap");
    return rows_[n];
  }
  BigInt row_sum(std::uint32_t n) const {
    BigInt total;
    for (const BigInt& v : row(n)) total += v;
    return total;
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

class AssociatedStirlingTable {
 public:
  explicit AssociatedStirlingTable(std::uint32_t cap) {
    rows_.reserve(cap + 1);
    stream_associated_rows(
        cap, [&](std::uint32_t, const std::vector<BigInt>& row) {
          rows_.push_back(row);
        });
  }

  std::uint32_t cap() const {
    return static_cast<std::uint32_t>(rows_.size() - 1);
  }
  const BigInt& at(std::uint32_t n, std::uint32_t k) const {
    static const BigInt zero;
    if (n >= rows_.size())
      throw std::invalid_argument("AssociatedStirlingTable: n > cap");
    return k < rows_[n].size() ? rows_[n][k] : zero;
  }
  BigInt row_sum(std::uint32_t n) const {
    if (n >= rows_.size())
      throw std::invalid_argument("AssociatedStirlingTable: n > cap");
    BigInt total;
    for (const BigInt& v : rows_[n]) total += v;
    return total;
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// B(0..cap) via B(m+1) = sum_k C(m,k) B(k), the Pascal row updated in place.
class BellSequence {
 public:
  explicit BellSequence(std::uint32_t cap) {
    values_.reserve(cap + 1);
    values_.emplace_back(1);
    std::vector<BigInt> pascal{BigInt(1)};
    for (std::uint32_t m = 0; m < cap; ++m) {
      BigInt next;
      for (std::uint32_t k = 0; k <= m; ++k) next += pascal[k] * values_[k];
      values_.push_back(std::move(next));
      pascal.emplace_back(1);
      for (std::uint32_t k = m; k >= 1; --k) pascal[k] += pascal[k - 1];
    }
  }

  static BellSequence via_row_sums(std::uint32_t cap) {
    BellSequence out(PrivateTag{});
    out.values_.resize(cap + 1);
    stream_stirling_rows(cap,
                         [&](std::uint32_t n, const std::vector<BigInt>& row) {
                           BigInt total;
                           for (const BigInt& v : row) total += v;
                           out.values_[n] = std::move(total);
                         });
    return out;
  }

  std::uint32_t cap() const {
    return static_cast<std::uint32_t>(values_.size() - 1);
  }
  const BigInt& at(std::uint32_t n) const {
    if (n >= values_.size()) throw std::invalid_argument("BellSequence: n > cap");
    return values_[n];
  }
  const std::vector<BigInt>& values() const { return values_; }

 private:
  struct PrivateTag {};
  explicit BellSequence(PrivateTag) {}
  std::vector<BigInt> values_;
};

// ---------------------------------------------------------------------------
// Scalar entry points with selectable, mutually checking computation paths.
// ---------------------------------------------------------------------------

enum class StirlingMethod { recurrence, explicit_sum };
enum class BellMethod { recurrence, row_sum, egf };

// Alternating-sum form (1/k!) sum_i (-1)^i C(k,i) (k-i)^n. Exact but not
// manifestly nonnegative; kept as a cross-check on the triangle. The sum is
// always divisible by k!; anything else signals an arithmetic bug.
inline BigInt stirling2_explicit(std::uint32_t n, std::uint32_t k) {
  if (k > n) return BigInt(0);
  BigInt sum;
  for (std::uint32_t i = 0; i <= k; ++i) {
    BigInt term = binomial(k, i) * pow(BigInt(k - i), n);  // 0^0 = 1
    if (i % 2 == 1) term = -term;
    sum += term;
  }
  auto [q, r] = BigInt::divmod(sum, factorial(k));
  if (!r.is_zero())
    throw std::runtime_error("stirling2: alternating sum not divisible by k!");
  return q;
}

inline BigInt stirling2(std::uint32_t n, std::uint32_t k,
                        StirlingMethod method = StirlingMethod::recurrence) {
  if (k > n) return BigInt(0);
  if (method == StirlingMethod::explicit_sum) return stirling2_explicit(n, k);
  return stirling_row(n)[k];
}

inline BigInt associated_stirling(std::uint32_t n, std::uint32_t k) {
  if (k > n) return BigInt(0);
  return associated_row(n)[k];
}

inline BigInt bell_number(std::uint32_t n,
                          BellMethod method = BellMethod::recurrence) {
  switch (method) {
    case BellMethod::recurrence:
      return BellSequence(n).at(n);
    case BellMethod::row_sum: {
      BigInt total;
      for (const BigInt& v : stirling_row(n)) total += v;
      return total;
    }
    case BellMethod::egf:
      return egf::count_at(egf::exp(egf::base(egf::Base::exp_minus_1, n)), n);
  }
  throw std::logic_error("bell_number: unknown method");
}

}  // namespace setpart
