#include "setpart/egf.hpp"

#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "setpart/tables.hpp"

using setpart::BigInt;
using setpart::Rational;
namespace egf = setpart::egf;

namespace {

egf::Series random_series(std::mt19937_64& rng, std::uint32_t order,
                          bool zero_constant) {
  egf::Series out(order);
  for (std::uint32_t n = zero_constant ? 1 : 0; n <= order; ++n) {
    std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
    std::int64_t den = static_cast<std::int64_t>(rng() % 6) + 1;
    out.set_coefficient(n, Rational(BigInt(num), BigInt(den)));
  }
  return out;
}

}  // namespace

TEST_CASE("base series coefficients") {
  auto em1 = egf::base(egf::Base::exp_minus_1, 3);
  CHECK(em1.coefficient(0) == Rational(0));
  CHECK(em1.coefficient(1) == Rational(1));
  CHECK(em1.coefficient(2) == Rational(BigInt(1), BigInt(2)));
  CHECK(em1.coefficient(3) == Rational(BigInt(1), BigInt(6)));

  auto em1x = egf::base(egf::Base::exp_minus_x_minus_1, 3);
  CHECK(em1x.coefficient(0) == Rational(0));
  CHECK(em1x.coefficient(1) == Rational(0));
  CHECK(em1x.coefficient(2) == Rational(BigInt(1), BigInt(2)));
  CHECK(em1x.coefficient(3) == Rational(BigInt(1), BigInt(6)));

  auto x = egf::base(egf::Base::x, 3);
  CHECK(x.coefficient(0) == Rational(0));
  CHECK(x.coefficient(1) == Rational(1));
  CHECK(x.coefficient(2) == Rational(0));
  CHECK(x.coefficient(3) == Rational(0));

  CHECK(egf::base(egf::Base::one, 2).coefficient(0) == Rational(1));
  CHECK(egf::base(egf::Base::zero, 2) == egf::Series(2));
}

TEST_CASE("addition") {
  auto em1 = egf::base(egf::Base::exp_minus_1, 25);
  auto zero = egf::base(egf::Base::zero, 25);
  auto one = egf::base(egf::Base::one, 25);
  CHECK(egf::add(em1, zero) == em1);
  // (e^x - 1) + 1 has the plain exponential's coefficients 1/n!
  auto ex = egf::add(em1, one);
  CHECK(ex.coefficient(0) == Rational(1));
  CHECK(ex.coefficient(25) ==
        Rational(BigInt(1), setpart::factorial(25)));
  CHECK_THROWS_AS(egf::add(em1, egf::base(egf::Base::zero, 24)),
                  std::invalid_argument);
}

TEST_CASE("sum over family counts reproduces the partition total") {
  // sum_{k=0..N} (e^x-1)^k / k! truncated at N = 25, count at x^25
  const std::uint32_t order = 25;
  auto em1 = egf::base(egf::Base::exp_minus_1, order);
  auto acc = egf::base(egf::Base::zero, order);
  BigInt kfact(1);
  for (std::uint32_t k = 0; k <= order; ++k) {
    if (k > 0) kfact *= k;
    acc = egf::add(acc,
                   egf::scale(egf::pow(em1, k), Rational(BigInt(1), kfact)));
  }
  CHECK(egf::count_at(acc, 25).to_string() == "4638590332229999353");
}

TEST_CASE("multiplication") {
  auto em1 = egf::base(egf::Base::exp_minus_1, 10);
  auto one = egf::base(egf::Base::one, 10);
  CHECK(egf::mul(em1, one) == em1);

  // ordered pairs of disjoint nonempty blocks covering a 4-set
  auto pair_series = egf::mul(em1, em1);
  CHECK(egf::count_at(pair_series, 4) == BigInt(14));

  // one isolate plus one block of size two on 3 labels
  auto iso = egf::mul(egf::base(egf::Base::x, 10),
                      egf::base(egf::Base::exp_minus_x_minus_1, 10));
  CHECK(egf::count_at(iso, 3) == BigInt(3));

  CHECK_THROWS_AS(egf::mul(em1, egf::base(egf::Base::one, 9)),
                  std::invalid_argument);
}

TEST_CASE("multiplication is commutative and associative") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 30; ++iter) {
    auto f = random_series(rng, 10, false);
    auto g = random_series(rng, 10, false);
    auto h = random_series(rng, 10, false);
    CHECK(egf::mul(f, g) == egf::mul(g, f));
    CHECK(egf::mul(egf::mul(f, g), h) == egf::mul(f, egf::mul(g, h)));
  }
}

TEST_CASE("exponential") {
  CHECK(egf::exp(egf::base(egf::Base::zero, 8)) ==
        egf::base(egf::Base::one, 8));
  CHECK_THROWS_AS(egf::exp(egf::base(egf::Base::one, 8)),
                  std::invalid_argument);

  auto bell_series = egf::exp(egf::base(egf::Base::exp_minus_1, 25));
  CHECK(egf::count_at(bell_series, 25).to_string() == "4638590332229999353");
  CHECK(egf::count_at(bell_series, 8) == BigInt(4140));

  auto no_iso = egf::exp(egf::base(egf::Base::exp_minus_x_minus_1, 8));
  CHECK(egf::count_at(no_iso, 8) == BigInt(715));
}

TEST_CASE("exp turns sums into products") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 12; ++iter) {
    auto f = random_series(rng, 20, true);
    auto g = random_series(rng, 20, true);
    CHECK(egf::exp(egf::add(f, g)) == egf::mul(egf::exp(f), egf::exp(g)));
  }
}

TEST_CASE("powers") {
  auto em1 = egf::base(egf::Base::exp_minus_1, 20);
  CHECK(egf::pow(em1, 0) == egf::base(egf::Base::one, 20));

  // k! S(n,k) is the count at x^n of (e^x - 1)^k
  setpart::StirlingTable table(20);
  for (std::uint32_t k = 0; k <= 20; ++k) {
    auto p = egf::pow(em1, k);
    BigInt kfact = setpart::factorial(k);
    for (std::uint32_t n = 0; n <= 20; ++n)
      CHECK(egf::count_at(p, n) == table.at(n, k) * kfact);
  }

  // repeated squaring equals naive repeated multiplication
  std::mt19937_64 rng(41);
  auto f = random_series(rng, 8, false);
  auto naive = egf::base(egf::Base::one, 8);
  for (int k = 1; k <= 6; ++k) {
    naive = egf::mul(naive, f);
    CHECK(egf::pow(f, static_cast<std::uint64_t>(k)) == naive);
  }
}

TEST_CASE("isolate coefficient example: f families, i isolates") {
  // count of 3-family classifications of an 8-set with exactly 1 isolate:
  // 8! [x^8] (x^1/1!) (e^x-x-1)^2/2!  — brute force gives the same
  auto series = egf::mul(
      egf::base(egf::Base::x, 8),
      egf::scale(egf::pow(egf::base(egf::Base::exp_minus_x_minus_1, 8), 2),
                 Rational(BigInt(1), BigInt(2))));
  BigInt count = egf::count_at(series, 8);
  auto census = oracle::census(8);
  CHECK(count == BigInt(census.by_family_isolate.at({3, 1})));
  CHECK(count == BigInt(448));
}

TEST_CASE("count extraction guards") {
  auto em1 = egf::base(egf::Base::exp_minus_1, 5);
  CHECK(egf::count_at(egf::base(egf::Base::one, 5), 0) == BigInt(1));
  CHECK_THROWS_AS(egf::count_at(em1, 6), std::invalid_argument);
  egf::Series bad(3);
  bad.set_coefficient(1, Rational(BigInt(1), BigInt(2)));
  CHECK_THROWS_AS(egf::count_at(bad, 1), std::domain_error);
  CHECK(bad.coefficient(1) == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("denominators of the partition-count series divide N!") {
  const std::uint32_t order = 30;
  auto series = egf::exp(egf::base(egf::Base::exp_minus_1, order));
  BigInt nfact = setpart::factorial(order);
  for (std::uint32_t n = 0; n <= order; ++n)
    CHECK((nfact % series.coefficient(n).denominator()).is_zero());
}
