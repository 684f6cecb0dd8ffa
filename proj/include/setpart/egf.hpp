#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "setpart/bigint.hpp"
#include "setpart/combinatorics.hpp"
#include "setpart/rational.hpp"

namespace setpart::egf {

// Exponential generating series truncated at a fixed order, exact rational
// coefficients throughout. Coefficients are stored as c_n (the coefficient
// of x^n); the count a_n = n! * c_n is recovered only at extraction, which
// keeps multiplication a plain Cauchy product.
class Series {
 public:
  explicit Series(std::uint32_t order) : coeff_(order + 1) {}
  Series(std::uint32_t order, std::vector<Rational> coeff)
      : coeff_(std::move(coeff)) {
    if (coeff_.size() != static_cast<std::size_t>(order) + 1)
      throw std::invalid_argument("Series: coefficient count != order + 1");
  }

  std::uint32_t order() const {
    return static_cast<std::uint32_t>(coeff_.size() - 1);
  }
  const Rational& coefficient(std::uint32_t n) const {
    if (n >= coeff_.size())
      throw std::invalid_argument("Series: index beyond truncation order");
    return coeff_[n];
  }
  void set_coefficient(std::uint32_t n, Rational value) {
    if (n >= coeff_.size())
      throw std::invalid_argument("Series: index beyond truncation order");
    coeff_[n] = std::move(value);
  }

  // Smallest n with c_n != 0, or order+1 if identically zero.
  std::uint32_t lowest_order() const {
    for (std::size_t n = 0; n < coeff_.size(); ++n)
      if (!coeff_[n].is_zero()) return static_cast<std::uint32_t>(n);
    return order() + 1;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const Series& a, const Series& b) {
    return !(a == b);
  }

 private:
  std::vector<Rational> coeff_;
};

enum class Base { exp_minus_1, exp_minus_x_minus_1, x, one, zero };

inline Series base(Base kind, std::uint32_t order) {
  Series out(order);
  switch (kind) {
    case Base::zero:
      break;
    case Base::one:
      out.set_coefficient(0, Rational(1));
      break;
    case Base::x:
      if (order >= 1) out.set_coefficient(1, Rational(1));
      break;
    case Base::exp_minus_1:
    case Base::exp_minus_x_minus_1: {
      std::uint32_t from = kind == Base::exp_minus_1 ? 1 : 2;
      BigInt fact(1);
      for (std::uint32_t n = 1; n <= order; ++n) {
        fact *= n;
        if (n >= from) out.set_coefficient(n, Rational(BigInt(1), fact));
      }
      break;
    }
  }
  return out;
}

inline void require_same_order(const Series& f, const Series& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("Series: truncation orders differ");
}

inline Series add(const Series& f, const Series& g) {
  require_same_order(f, g);
  Series out(f.order());
  for (std::uint32_t n = 0; n <= f.order(); ++n)
    out.set_coefficient(n, f.coefficient(n) + g.coefficient(n));
  return out;
}

inline Series scale(const Series& f, const Rational& factor) {
  Series out(f.order());
  if (factor.is_zero()) return out;
  for (std::uint32_t n = 0; n <= f.order(); ++n)
    if (!f.coefficient(n).is_zero())
      out.set_coefficient(n, f.coefficient(n) * factor);
  return out;
}

inline Series mul(const Series& f, const Series& g) {
  require_same_order(f, g);
  const std::uint32_t order = f.order();
  std::vector<Rational> acc(order + 1);
  for (std::uint32_t i = 0; i <= order; ++i) {
    if (f.coefficient(i).is_zero()) continue;
    for (std::uint32_t j = 0; i + j <= order; ++j) {
      if (g.coefficient(j).is_zero()) continue;
      acc[i + j] += f.coefficient(i) * g.coefficient(j);
    }
  }
  return Series(order, std::move(acc));
}

inline Series pow(const Series& f, std::uint64_t exponent) {
  Series result = base(Base::one, f.order());
  Series acc = f;
  while (exponent != 0) {
    if (exponent & 1u) result = mul(result, acc);
    exponent >>= 1;
    if (exponent) acc = mul(acc, acc);
  }
  return result;
}

// exp(f) = sum_k f^k / k!, a finite sum under truncation because f must
// have zero constant term: f^k contributes nothing below order k.
inline Series exp(const Series& f) {
  if (!f.coefficient(0).is_zero())
    throw std::invalid_argument("Series: exp requires zero constant term");
  const std::uint32_t order = f.order();
  Series result = base(Base::one, order);
  const std::uint32_t lo = f.lowest_order();
  if (lo > order) return result;  // exp(0) = 1
  Series power = base(Base::one, order);
  BigInt kfact(1);
  for (std::uint32_t k = 1; k * lo <= order; ++k) {
    power = mul(power, f);
    kfact *= k;
    result = add(result, scale(power, Rational(BigInt(1), kfact)));
  }
  return result;
}

// The count a_n = n! * c_n. Errors when the result is not an integer
// (the series does not enumerate anything at that order); use
// coefficient(n) for the raw rational instead.
inline BigInt count_at(const Series& f, std::uint32_t n) {
  if (n > f.order())
    throw std::invalid_argument("count_at: beyond truncation order");
  const Rational& c = f.coefficient(n);
  Rational count = c * Rational(factorial(n));
  if (!count.is_integer())
    throw std::domain_error("count_at: n! * c_n is not an integer");
  return count.numerator();
}

}  // namespace setpart::egf
