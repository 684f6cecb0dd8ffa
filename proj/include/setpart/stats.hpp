#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "setpart/bigint.hpp"
#include "setpart/combinatorics.hpp"
#include "setpart/rational.hpp"
#include "setpart/render.hpp"
#include "setpart/tables.hpp"

namespace setpart {

// Statistics of the uniform distribution over all set partitions of an
// n-set ("classifications of n languages"). Everything is an exact rational
// until a rendering is requested.

struct FamilyMode {
  std::uint32_t mode = 0;
  bool tied = false;
};

// P(number of families = k) = S(n,k)/B(n). Counts come from the streaming
// triangle; the total comes from the classical recurrence over a memoized
// Pascal row, so the normalization Sum_k mass(k) = 1 is a genuine
// cross-check of two routes rather than true by construction.
class FamilyDistribution {
 public:
  static FamilyDistribution compute(std::uint32_t n) {
    if (n == 0)
      throw std::invalid_argument("family_distribution: n must be >= 1");
    return from_parts(n, stirling_row(n), BellSequence(n).at(n));
  }

  // Assemble from precomputed pieces (e.g. cached rows). `counts` must be
  // the length-n+1 family-count row and `total` the partition count.
  static FamilyDistribution from_parts(std::uint32_t n,
                                       std::vector<BigInt> counts,
                                       BigInt total) {
    if (n == 0)
      throw std::invalid_argument("family_distribution: n must be >= 1");
    if (counts.size() != static_cast<std::size_t>(n) + 1)
      throw std::invalid_argument("family_distribution: row size != n + 1");
    if (total.is_zero() || total.is_negative())
      throw std::invalid_argument("family_distribution: total must be > 0");
    FamilyDistribution out;
    out.n_ = n;
    out.counts_ = std::move(counts);
    out.total_ = std::move(total);
    return out;
  }

  std::uint32_t n() const { return n_; }
  const BigInt& total() const { return total_; }
  const std::vector<BigInt>& counts() const { return counts_; }
  const BigInt& count(std::uint32_t k) const {
    static const BigInt zero;
    return k < counts_.size() ? counts_[k] : zero;
  }

  Rational mass(std::uint32_t k) const {
    return Rational(count(k), total_);
  }

  // P(a <= k <= b), the range clipped to [0, n].
  Rational mass_range(std::uint32_t a, std::uint32_t b) const {
    if (a > b)
      throw std::invalid_argument("family range: a must be <= b");
    BigInt sum;
    for (std::uint32_t k = a; k <= b && k <= n_; ++k) sum += counts_[k];
    return Rational(std::move(sum), total_);
  }

  Rational mean() const {
    BigInt weighted;
    for (std::uint32_t k = 1; k < counts_.size(); ++k)
      weighted += counts_[k].times(k);
    return Rational(std::move(weighted), total_);
  }

  FamilyMode mode() const {
    FamilyMode out{1, false};
    for (std::uint32_t k = 2; k < counts_.size(); ++k) {
      if (counts_[k] > counts_[out.mode]) {
        out.mode = k;
        out.tied = false;
      } else if (counts_[k] == counts_[out.mode]) {
        out.tied = true;
      }
    }
    return out;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<BigInt> counts_;
  BigInt total_;
};

inline FamilyDistribution family_distribution(std::uint32_t n) {
  return FamilyDistribution::compute(n);
}

inline ProbabilityRendering prob_family_range(std::uint32_t n, std::uint32_t a,
                                              std::uint32_t b,
                                              std::uint32_t digits = 3) {
  auto dist = FamilyDistribution::compute(n);
  return render_probability(dist.mass_range(a, b), digits);
}

// The k maximizing S(n,k); ties resolved toward smaller k and reported.
// Streams the row only — no partition total needed, which keeps n = 1500
// cheap.
inline FamilyMode family_mode(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("family_mode: n must be >= 1");
  auto row = stirling_row(n);
  FamilyMode out{1, false};
  for (std::uint32_t k = 2; k <= n; ++k) {
    if (row[k] > row[out.mode]) {
      out.mode = k;
      out.tied = false;
    } else if (row[k] == row[out.mode]) {
      out.tied = true;
    }
  }
  return out;
}

// A(n): classifications with no isolate (every family has >= 2 members).
inline BigInt no_isolate_count(std::uint32_t n) {
  BigInt total;
  for (const BigInt& v : associated_row(n)) total += v;
  return total;
}

inline ProbabilityRendering prob_no_isolates(std::uint32_t n,
                                             std::uint32_t digits = 3) {
  if (n == 0) throw std::invalid_argument("prob_no_isolates: n must be >= 1");
  return render_probability(
      Rational(no_isolate_count(n), BellSequence(n).at(n)), digits);
}

// N(n,f,i): classifications of n languages into f families of which exactly
// i are isolates = C(n,i) * T(n-i, f-i).
inline BigInt family_isolate_count(std::uint32_t n, std::uint32_t f,
                                   std::uint32_t i) {
  if (i > f || f > n)
    throw std::invalid_argument("family_isolate_count: need i <= f <= n");
  if (2 * (f - i) > n - i) return BigInt(0);
  return binomial(n, i) * associated_row(n - i)[f - i];
}

// Conditional distribution of the isolate count given (n, f) families,
// with exact mean and tail masses. tail(t) is inclusive: P(i >= t).
class IsolateDistribution {
 public:
  static IsolateDistribution compute(std::uint32_t n, std::uint32_t f) {
    if (f == 0 || f > n)
      throw std::invalid_argument("isolate_distribution: need 1 <= f <= n");
    IsolateDistribution out;
    out.n_ = n;
    out.f_ = f;
    auto diag = associated_diagonal(n, f);
    auto pascal = binomial_row(n);
    out.counts_.resize(f + 1);
    for (std::uint32_t i = 0; i <= f; ++i) {
      out.counts_[i] = pascal[i] * diag[i];
      out.total_ += out.counts_[i];
    }
    return out;
  }

  std::uint32_t n() const { return n_; }
  std::uint32_t families() const { return f_; }
  // Sum_i N(n,f,i); equals S(n,f).
  const BigInt& total() const { return total_; }
  const std::vector<BigInt>& counts() const { return counts_; }
  const BigInt& count(std::uint32_t i) const {
    static const BigInt zero;
    return i < counts_.size() ? counts_[i] : zero;
  }

  Rational prob(std::uint32_t i) const { return Rational(count(i), total_); }

  Rational mean() const {
    BigInt weighted;
    for (std::uint32_t i = 1; i < counts_.size(); ++i)
      weighted += counts_[i].times(i);
    return Rational(std::move(weighted), total_);
  }

  // P(isolates >= t)
  Rational tail(std::uint32_t t) const {
    BigInt sum;
    for (std::uint32_t i = t; i < counts_.size(); ++i) sum += counts_[i];
    return Rational(std::move(sum), total_);
  }

 private:
  std::uint32_t n_ = 0;
  std::uint32_t f_ = 0;
  std::vector<BigInt> counts_;
  BigInt total_;
};

inline IsolateDistribution isolate_distribution(std::uint32_t n,
                                                std::uint32_t f) {
  return IsolateDistribution::compute(n, f);
}

}  // namespace setpart
