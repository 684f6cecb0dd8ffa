#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: set partitions are enumerated directly as restricted growth
// strings, and the reference counts come from plain 64-bit arithmetic.
// Safe for n <= 15 or so; the tests stay well below that.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// Visits every set partition of {0..n-1} as a restricted growth string:
// rgs[i] = block index of element i, blocks numbered by first appearance.
// visit(rgs, block_count). n = 0 visits the empty partition once.
template <typename Visitor>
void for_each_set_partition(int n, Visitor&& visit) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  struct Rec {
    int n;
    std::vector<int>& rgs;
    Visitor& visit;
    void operator()(int i, int used) {
      if (i == n) {
        visit(rgs, used);
        return;
      }
      for (int b = 0; b <= used; ++b) {
        rgs[static_cast<std::size_t>(i)] = b;
        (*this)(i + 1, b == used ? used + 1 : used);
      }
    }
  } rec{n, rgs, visit};
  if (n == 0) {
    visit(rgs, 0);
    return;
  }
  rec(0, 0);
}

inline std::uint64_t count_set_partitions(int n) {
  std::uint64_t total = 0;
  for_each_set_partition(n, [&](const std::vector<int>&, int) { ++total; });
  return total;
}

struct Census {
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_families;
  std::map<int, std::uint64_t> by_isolates;
  std::map<std::pair<int, int>, std::uint64_t> by_family_isolate;
  // key: block sizes sorted descending
  std::map<std::vector<int>, std::uint64_t> by_shape;
  std::uint64_t no_isolates = 0;
  std::map<int, std::uint64_t> no_isolate_by_families;
};

inline Census census(int n) {
  Census out;
  for_each_set_partition(n, [&](const std::vector<int>& rgs, int blocks) {
    std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
    for (int b : rgs) ++sizes[static_cast<std::size_t>(b)];
    int isolates = 0;
    for (int s : sizes)
      if (s == 1) ++isolates;
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    ++out.total;
    ++out.by_families[blocks];
    ++out.by_isolates[isolates];
    ++out.by_family_isolate[{blocks, isolates}];
    ++out.by_shape[sizes];
    if (isolates == 0) {
      ++out.no_isolates;
      ++out.no_isolate_by_families[blocks];
    }
  });
  return out;
}

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;  // exact through n = 20
}

// Number of integer partitions of n, classic two-variable recurrence.
inline std::uint64_t integer_partition_count(int n) {
  std::vector<std::uint64_t> dp(static_cast<std::size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s)
      dp[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(s - part)];
  return dp[static_cast<std::size_t>(n)];
}

}  // namespace oracle
