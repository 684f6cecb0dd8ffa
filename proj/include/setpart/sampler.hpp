#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "setpart/bigint.hpp"
#include "setpart/rng.hpp"
#include "setpart/tables.hpp"

namespace setpart {

// One sampled classification. Blocks are numbered 1..k by first appearance,
// so block 1 always contains element 1 (elements are 1-based here to match
// the CLI presentation; block_of[e-1] is element e's block).
struct PartitionSample {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> block_of;
  std::uint32_t block_count = 0;

  std::uint32_t isolate_count() const {
    std::vector<std::uint32_t> sizes(block_count, 0);
    for (std::uint32_t b : block_of) ++sizes[b - 1];
    std::uint32_t isolates = 0;
    for (std::uint32_t s : sizes)
      if (s == 1) ++isolates;
    return isolates;
  }
};

// Uniform draw from [0, bound), bound > 0, by masked rejection.
inline BigInt random_below(const BigInt& bound, Xoshiro256StarStar& rng) {
  const std::size_t bits = bound.bit_length();
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits % 64 == 0 ? 64 : bits % 64;
  const std::uint64_t mask =
      top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  for (;;) {
    std::vector<std::uint64_t> limbs(words);
    for (std::size_t i = 0; i < words; ++i) limbs[i] = rng.next();
    limbs.back() &= mask;
    BigInt candidate = BigInt::from_limbs(std::move(limbs));
    if (candidate < bound) return candidate;
  }
}

// Draws a uniformly random set partition of an n-set. The block containing
// the smallest unassigned element gets size j with probability
// C(m-1, j-1) B(m-j) / B(m) over the m elements still free; the comparison
// against a single uniform draw from [0, B(m)) is done on exact integers,
// so there is no rounding bias anywhere. `bell` must cover 0..n.
inline PartitionSample sample_partition(std::uint32_t n,
                                        const BellSequence& bell,
                                        Xoshiro256StarStar& rng) {
  if (n == 0) throw std::invalid_argument("sample_partition: n must be >= 1");
  if (bell.cap() < n)
    throw std::invalid_argument("sample_partition: Bell table too small");

  PartitionSample out;
  out.n = n;
  out.block_of.assign(n, 0);

  std::vector<std::uint32_t> remaining(n);
  for (std::uint32_t i = 0; i < n; ++i) remaining[i] = i;

  while (!remaining.empty()) {
    const std::uint32_t m = static_cast<std::uint32_t>(remaining.size());
    BigInt draw = random_below(bell.at(m), rng);

    // walk block sizes j = 1..m, weight C(m-1, j-1) * B(m-j)
    std::uint32_t size = m;
    BigInt choose(1);
    for (std::uint32_t j = 1; j <= m; ++j) {
      BigInt weight = choose * bell.at(m - j);
      if (draw < weight) {
        size = j;
        break;
      }
      draw -= weight;
      choose *= m - j;
      choose.div_small(j);
    }

    // the smallest free element plus size-1 uniformly chosen companions
    for (std::uint32_t t = 1; t < size; ++t) {
      std::uint32_t pick =
          t + static_cast<std::uint32_t>(rng.below(m - t));
      std::swap(remaining[t], remaining[pick]);
    }
    ++out.block_count;
    for (std::uint32_t t = 0; t < size; ++t)
      out.block_of[remaining[t]] = out.block_count;

    remaining.erase(remaining.begin(), remaining.begin() + size);
    std::sort(remaining.begin(), remaining.end());
  }
  return out;
}

struct SampleSummary {
  std::uint32_t n = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::string rng_name;
  std::map<std::uint32_t, std::uint64_t> family_histogram;
  std::map<std::uint32_t, std::uint64_t> isolate_histogram;

  double frequency(const std::map<std::uint32_t, std::uint64_t>& hist,
                   std::uint32_t value) const {
    auto it = hist.find(value);
    return it == hist.end()
               ? 0.0
               : static_cast<double>(it->second) / static_cast<double>(count);
  }
};

// 95% normal-approximation interval for an event probability estimated by
// `successes` out of `count` samples.
inline std::pair<double, double> normal_ci95(std::uint64_t successes,
                                             std::uint64_t count) {
  double p = static_cast<double>(successes) / static_cast<double>(count);
  double half = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(count));
  return {p - half, p + half};
}

namespace detail {
// Deterministic per-batch seed: batches can be processed in any order (or
// in parallel) and merged; the merge is a plain histogram sum, associative
// and commutative.
inline std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch) {
  std::uint64_t state = seed + (batch + 1) * 0x9E3779B97F4A7C15ull;
  return splitmix64(state);
}
}  // namespace detail

// Runs `count` independent samples in fixed-size batches; fully determined
// by (n, count, seed).
inline SampleSummary summarize(std::uint32_t n, std::uint64_t count,
                               std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("summarize: count must be >= 1");
  if (n == 0) throw std::invalid_argument("summarize: n must be >= 1");
  const BellSequence bell(n);

  SampleSummary out;
  out.n = n;
  out.count = count;
  out.seed = seed;
  out.rng_name = Xoshiro256StarStar::kName;

  constexpr std::uint64_t kBatch = 8192;
  std::uint64_t done = 0;
  for (std::uint64_t batch = 0; done < count; ++batch) {
    Xoshiro256StarStar rng(detail::batch_seed(seed, batch));
    std::uint64_t todo = std::min(kBatch, count - done);
    for (std::uint64_t s = 0; s < todo; ++s) {
      PartitionSample sample = sample_partition(n, bell, rng);
      ++out.family_histogram[sample.block_count];
      ++out.isolate_histogram[sample.isolate_count()];
    }
    done += todo;
  }
  return out;
}

}  // namespace setpart
