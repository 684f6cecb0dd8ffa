#include "setpart/sampler.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "brute_force.hpp"
#include "setpart/render.hpp"
#include "setpart/stats.hpp"

using setpart::BellSequence;
using setpart::BigInt;
using setpart::Xoshiro256StarStar;

TEST_CASE("uniform draws below a big bound stay in range and hit all residues") {
  Xoshiro256StarStar rng(99);
  BigInt bound = setpart::pow(BigInt(10), 30);
  for (int i = 0; i < 200; ++i) {
    BigInt draw = setpart::random_below(bound, rng);
    CHECK(!draw.is_negative());
    CHECK(draw < bound);
  }
  // small bound: every value reachable
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 3000; ++i)
    ++seen[setpart::random_below(BigInt(5), rng).to_uint64()];
  CHECK(seen.size() == 5);
}

TEST_CASE("n = 1 yields the unique partition") {
  BellSequence bell(1);
  Xoshiro256StarStar rng(1);
  auto sample = setpart::sample_partition(1, bell, rng);
  CHECK(sample.block_count == 1);
  REQUIRE(sample.block_of.size() == 1);
  CHECK(sample.block_of[0] == 1);
  CHECK(sample.isolate_count() == 1);
}

TEST_CASE("samples are valid partitions with first-appearance numbering") {
  BellSequence bell(40);
  Xoshiro256StarStar rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    auto sample = setpart::sample_partition(40, bell, rng);
    REQUIRE(sample.block_of.size() == 40);
    CHECK(sample.block_of[0] == 1);
    std::uint32_t seen_max = 0;
    for (std::uint32_t b : sample.block_of) {
      REQUIRE(b >= 1);
      REQUIRE(b <= sample.block_count);
      CHECK(b <= seen_max + 1);  // ids appear in order
      seen_max = std::max(seen_max, b);
    }
    CHECK(seen_max == sample.block_count);
  }
}

TEST_CASE("determinism: identical (n, count, seed) gives identical summaries") {
  auto a = setpart::summarize(12, 5000, 424242);
  auto b = setpart::summarize(12, 5000, 424242);
  CHECK(a.family_histogram == b.family_histogram);
  CHECK(a.isolate_histogram == b.isolate_histogram);
  auto c = setpart::summarize(12, 5000, 424243);
  CHECK(a.family_histogram != c.family_histogram);
}

TEST_CASE("summarize argument guards") {
  CHECK_THROWS_AS(setpart::summarize(5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(setpart::summarize(0, 10, 1), std::invalid_argument);
}

TEST_CASE("n = 3: all five partitions appear with frequency 0.2 +- 0.01") {
  const std::uint64_t count = 100000;
  BellSequence bell(3);
  std::map<std::vector<std::uint32_t>, std::uint64_t> hist;
  // one fixed stream is enough; summarize() is exercised elsewhere
  Xoshiro256StarStar rng(2024);
  for (std::uint64_t i = 0; i < count; ++i)
    ++hist[setpart::sample_partition(3, bell, rng).block_of];
  REQUIRE(hist.size() == 5);
  for (const auto& [rgs, freq] : hist) {
    double p = static_cast<double>(freq) / static_cast<double>(count);
    CHECK(p == doctest::Approx(0.2).epsilon(0.05));  // 0.2 +- 0.01
  }
}

TEST_CASE("chi-squared uniformity at n = 4 (quick check)") {
  // full n <= 5 at 1e5 samples runs in the acceptance suite
  const std::uint64_t count = 30000;
  BellSequence bell(4);
  std::map<std::vector<std::uint32_t>, std::uint64_t> hist;
  Xoshiro256StarStar rng(5150);
  for (std::uint64_t i = 0; i < count; ++i)
    ++hist[setpart::sample_partition(4, bell, rng).block_of];
  REQUIRE(hist.size() == 15);
  double expected = static_cast<double>(count) / 15.0;
  double chi2 = 0.0;
  for (const auto& [rgs, freq] : hist) {
    double d = static_cast<double>(freq) - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 36.123);  // 0.999 quantile at 14 dof
}

TEST_CASE("empirical frequencies track the exact statistics at n = 30") {
  const std::uint64_t count = 20000;
  auto summary = setpart::summarize(30, count, 8675309);

  auto dist = setpart::family_distribution(30);
  double exact_mean = setpart::to_double(dist.mean());
  double mean = 0.0;
  for (const auto& [k, freq] : summary.family_histogram)
    mean += static_cast<double>(k) * static_cast<double>(freq);
  mean /= static_cast<double>(count);
  // family counts live in [1,30]; 3 sigma of the mean is well under 0.15
  CHECK(mean == doctest::Approx(exact_mean).epsilon(0.02));

  // P(no isolates) within 3 standard errors of the exact value
  std::uint64_t none = summary.isolate_histogram.count(0)
                           ? summary.isolate_histogram.at(0)
                           : 0;
  double p_hat = static_cast<double>(none) / static_cast<double>(count);
  double p = setpart::to_double(setpart::prob_no_isolates(30).exact);
  double sigma = std::sqrt(p * (1 - p) / static_cast<double>(count));
  CHECK(std::abs(p_hat - p) < 3 * sigma + 1e-12);
}

TEST_CASE("n = 650 sampling versus the exact distribution") {
  const std::uint64_t count = 10000;
  auto summary = setpart::summarize(650, count, 20131501);
  auto dist = setpart::family_distribution(650);

  // fraction with 121..150 families within the 95% interval of the exact mass
  std::uint64_t in_range = 0;
  double sum = 0.0, sumsq = 0.0;
  for (const auto& [k, freq] : summary.family_histogram) {
    if (k >= 121 && k <= 150) in_range += freq;
    sum += static_cast<double>(k) * static_cast<double>(freq);
    sumsq += static_cast<double>(k) * static_cast<double>(k) *
             static_cast<double>(freq);
  }
  double exact_mass = setpart::to_double(dist.mass_range(121, 150));
  CHECK(exact_mass == doctest::Approx(0.994).epsilon(0.001));
  double p_hat = static_cast<double>(in_range) / static_cast<double>(count);
  double half = 1.96 * std::sqrt(exact_mass * (1 - exact_mass) /
                                 static_cast<double>(count));
  CHECK(p_hat > exact_mass - half);
  CHECK(p_hat < exact_mass + half);

  // sample mean family count within its own 95% interval of the exact mean
  double mean = sum / static_cast<double>(count);
  double variance = sumsq / static_cast<double>(count) - mean * mean;
  double exact_mean = setpart::to_double(dist.mean());
  double mean_half = 1.96 * std::sqrt(variance / static_cast<double>(count));
  CHECK(std::abs(mean - exact_mean) < mean_half);
}

TEST_CASE("histogram totals equal the sample count") {
  auto summary = setpart::summarize(9, 12345, 5);
  std::uint64_t families = 0, isolates = 0;
  for (const auto& [k, freq] : summary.family_histogram) families += freq;
  for (const auto& [i, freq] : summary.isolate_histogram) isolates += freq;
  CHECK(families == 12345);
  CHECK(isolates == 12345);
  CHECK(summary.seed == 5);
  CHECK(summary.rng_name == std::string("xoshiro256**"));
}

TEST_CASE("confidence interval helper") {
  auto [lo, hi] = setpart::normal_ci95(500, 1000);
  CHECK(lo == doctest::Approx(0.469).epsilon(0.01));
  CHECK(hi == doctest::Approx(0.531).epsilon(0.01));
}
