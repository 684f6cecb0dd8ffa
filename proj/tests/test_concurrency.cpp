// Tables are immutable after construction and shared reads are safe;
// independent queries and sample batches may run concurrently. These smoke
// tests drive those claims under real threads.

#include <doctest.h>

#include <thread>
#include <vector>

#include "setpart/sampler.hpp"
#include "setpart/stats.hpp"
#include "setpart/tables.hpp"

using setpart::BigInt;

TEST_CASE("concurrent reads of one shared table") {
  const setpart::StirlingTable table(80);
  const setpart::BellSequence bell(80);
  std::vector<BigInt> row_sums(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      BigInt total;
      std::uint32_t n = 73 + static_cast<std::uint32_t>(t % 4);
      for (std::uint32_t k = 0; k <= n; ++k) total += table.at(n, k);
      row_sums[static_cast<std::size_t>(t)] = std::move(total);
    });
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t)
    CHECK(row_sums[static_cast<std::size_t>(t)] ==
          bell.at(73 + static_cast<std::uint32_t>(t % 4)));
}

TEST_CASE("independent queries in parallel match serial results") {
  std::vector<setpart::Rational> parallel(6);
  std::vector<std::thread> threads;
  for (std::uint32_t t = 0; t < 6; ++t)
    threads.emplace_back([&parallel, t] {
      auto dist = setpart::isolate_distribution(60, 15 + t);
      parallel[t] = dist.mean();
    });
  for (auto& th : threads) th.join();
  for (std::uint32_t t = 0; t < 6; ++t)
    CHECK(parallel[t] == setpart::isolate_distribution(60, 15 + t).mean());
}

TEST_CASE("concurrent samplers sharing one Bell table") {
  const setpart::BellSequence bell(25);
  std::vector<std::uint64_t> totals(4, 0);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      setpart::Xoshiro256StarStar rng(static_cast<std::uint64_t>(t) + 1);
      std::uint64_t blocks = 0;
      for (int i = 0; i < 2000; ++i)
        blocks += setpart::sample_partition(25, bell, rng).block_count;
      totals[static_cast<std::size_t>(t)] = blocks;
    });
  for (auto& th : threads) th.join();
  for (int t = 0; t < 4; ++t) {
    // block counts of 2000 samples of a 25-set: sane, seed-dependent totals
    CHECK(totals[static_cast<std::size_t>(t)] > 2000);
    CHECK(totals[static_cast<std::size_t>(t)] < 2000ull * 25);
    setpart::Xoshiro256StarStar rng(static_cast<std::uint64_t>(t) + 1);
    std::uint64_t replay = 0;
    for (int i = 0; i < 2000; ++i)
      replay += setpart::sample_partition(25, bell, rng).block_count;
    CHECK(replay == totals[static_cast<std::size_t>(t)]);
  }
}
