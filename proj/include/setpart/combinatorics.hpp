#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "setpart/bigint.hpp"

namespace setpart {

inline BigInt factorial(std::uint32_t n) {
  BigInt out(1);
  for (std::uint32_t i = 2; i <= n; ++i) out *= i;
  return out;
}

// n!/(k!(n-k)!) via the multiplicative formula; 0 when k > n.
inline BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt out(1);
  for (std::uint32_t i = 1; i <= k; ++i) {
    out *= (n - k + i);
    std::uint64_t rem = out.div_small(i);
    if (rem != 0) throw std::logic_error("binomial: inexact step");
  }
  return out;
}

// Pascal row n: C(n, 0..n).
inline std::vector<BigInt> binomial_row(std::uint32_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = BigInt(1);
  for (std::uint32_t k = 1; k <= n; ++k) {
    row[k] = row[k - 1].times(n - k + 1);
    row[k].div_small(k);
  }
  return row;
}

// Integer partitions of n in decreasing lexicographic order of part lists:
// n = 5 yields [5], [4,1], [3,2], [3,1,1], [2,2,1], [2,1,1,1], [1,1,1,1,1].
// The order is part of the contract (stable CLI output).
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::uint32_t n) : n_(n) {}

  // Writes the next partition into `parts`; false when exhausted.
  // n = 0 yields exactly one empty partition.
  bool next(std::vector<std::uint32_t>& parts) {
    if (done_) return false;
    if (first_) {
      first_ = false;
      parts.clear();
      if (n_ > 0) parts.push_back(n_);
      current_ = parts;
      if (n_ <= 1) done_ = true;
      return true;
    }
    // Decrement the last part > 1, then tile the freed total with the
    // largest parts allowed (keeps the sequence lexicographically falling).
    std::size_t j = current_.size();
    while (j > 0 && current_[j - 1] == 1) --j;
    if (j == 0) {
      done_ = true;
      return false;
    }
    std::uint32_t freed =
        current_[j - 1] + static_cast<std::uint32_t>(current_.size() - j);
    std::uint32_t cap = current_[j - 1] - 1;
    current_.resize(j - 1);
    while (freed >= cap) {
      current_.push_back(cap);
      freed -= cap;
    }
    if (freed > 0) current_.push_back(freed);
    parts = current_;
    if (cap == 1 && current_.size() == n_) done_ = true;
    return true;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> current_;
  bool first_ = true;
  bool done_ = false;
};

template <typename Visitor>
void for_each_partition(std::uint32_t n, Visitor&& visit) {
  PartitionEnumerator gen(n);
  std::vector<std::uint32_t> parts;
  while (gen.next(parts)) visit(parts);
}

// Number of set partitions of an n-set whose block sizes form `parts`:
// n! / (prod part! * prod multiplicity!), the multinomial corrected for
// repeated part values.
inline BigInt classifications_for_shape(const std::vector<std::uint32_t>& parts) {
  std::uint32_t n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw std::invalid_argument("shape: zero part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("shape: parts must be weakly decreasing");
    n += parts[i];
  }
  BigInt denom(1);
  std::uint32_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    denom *= factorial(parts[i]);
    ++run;
    if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
      denom *= factorial(run);
      run = 0;
    }
  }
  auto [q, r] = BigInt::divmod(factorial(n), denom);
  if (!r.is_zero()) throw std::logic_error("shape count: inexact division");
  return q;
}

// Partition count as a sum of shape counts over all integer partitions of
// n. A route independent of the triangle recurrences; the enumeration makes
// it practical only for small n (hard-capped at 80).
inline BigInt bell_via_multiset(std::uint32_t n) {
  if (n > 80)
    throw std::invalid_argument(
        "bell_via_multiset: n > 80 (partition enumeration oracle only)");
  BigInt total(0);
  for_each_partition(n, [&](const std::vector<std::uint32_t>& parts) {
    total += classifications_for_shape(parts);
  });
  return total;
}

}  // namespace setpart
