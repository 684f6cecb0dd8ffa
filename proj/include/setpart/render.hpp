#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "setpart/bigint.hpp"
#include "setpart/rational.hpp"

namespace setpart {

// Exact decimal presentation of rationals. Two styles with deliberately
// different digit treatment:
//   - fixed-point (tables, everyday percentages): rounded half away from zero
//   - scientific notation (astronomically small values): mantissa truncated
//     toward zero, so the printed digits are the exact leading digits
// Both are pure functions of (value, digits); re-rendering is byte-stable.

namespace detail {

inline BigInt pow10(std::uint32_t e) { return pow(BigInt(10), e); }

// v > 0 exact; returns e with 10^e <= v < 10^(e+1)
inline std::int64_t decimal_exponent(const Rational& v) {
  const BigInt& num = v.numerator();
  const BigInt& den = v.denominator();
  auto cmp_with_pow10 = [&](std::int64_t e) {
    // sign of v - 10^e
    BigInt lhs = num;
    BigInt rhs = den;
    if (e >= 0)
      rhs = rhs * pow10(static_cast<std::uint32_t>(e));
    else
      lhs = lhs * pow10(static_cast<std::uint32_t>(-e));
    if (lhs == rhs) return 0;
    return lhs < rhs ? -1 : 1;
  };
  std::int64_t e =
      static_cast<std::int64_t>(num.to_string().size()) -
      static_cast<std::int64_t>(den.to_string().size());
  while (cmp_with_pow10(e) < 0) --e;
  while (cmp_with_pow10(e + 1) >= 0) ++e;
  return e;
}

// The first `digits` significant digits of v > 0 and its decimal exponent.
// value ~= 0.<digits> * 10^(e+1).
inline std::pair<std::string, std::int64_t> significant_digits(
    const Rational& v, std::uint32_t digits, bool round_half_up) {
  std::int64_t e = decimal_exponent(v);
  std::int64_t shift = static_cast<std::int64_t>(digits) - 1 - e;
  BigInt num = v.numerator();
  BigInt den = v.denominator();
  if (shift >= 0)
    num = num * pow10(static_cast<std::uint32_t>(shift));
  else
    den = den * pow10(static_cast<std::uint32_t>(-shift));
  auto [q, r] = BigInt::divmod(num, den);
  if (round_half_up && r + r >= den) q += BigInt(1);
  std::string s = q.to_string();
  if (s.size() > digits) {  // rounding carried into a new leading digit
    ++e;
    s.resize(digits);
  }
  return {std::move(s), e};
}

inline std::string fixed_from_digits(const std::string& s, std::int64_t e) {
  std::int64_t point = e + 1;  // digits before the decimal point
  if (point <= 0)
    return "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
  if (point >= static_cast<std::int64_t>(s.size()))
    return s + std::string(static_cast<std::size_t>(point) - s.size(), '0');
  return s.substr(0, static_cast<std::size_t>(point)) + "." +
         s.substr(static_cast<std::size_t>(point));
}

}  // namespace detail

// Fixed-point with `digits` significant digits, rounded half away from zero.
inline std::string render_fixed(const Rational& v, std::uint32_t digits) {
  if (digits == 0) throw std::invalid_argument("render_fixed: digits == 0");
  if (v.is_zero()) return "0";
  std::string sign = v.is_negative() ? "-" : "";
  Rational mag = v.is_negative() ? -v : v;
  auto [s, e] = detail::significant_digits(mag, digits, true);
  return sign + detail::fixed_from_digits(s, e);
}

// Scientific notation d.dd...e<exp> with the mantissa truncated toward zero.
inline std::string render_scientific(const Rational& v, std::uint32_t digits) {
  if (digits == 0)
    throw std::invalid_argument("render_scientific: digits == 0");
  if (v.is_zero()) return "0";
  std::string sign = v.is_negative() ? "-" : "";
  Rational mag = v.is_negative() ? -v : v;
  auto [s, e] = detail::significant_digits(mag, digits, false);
  std::string mant = s.substr(0, 1);
  if (s.size() > 1) mant += "." + s.substr(1);
  return sign + mant + "e" + std::to_string(e);
}

// Probability -> percent string. Ordinary magnitudes print fixed-point
// ("58.8%"); below 1e-6 % the style switches to 0.ddd x 10^-e with the
// mantissa in [0.1, 1), truncated ("0.238x10^-843 %").
inline std::string render_percent(const Rational& probability,
                                  std::uint32_t digits) {
  if (digits == 0) throw std::invalid_argument("render_percent: digits == 0");
  if (probability.is_zero()) return "0%";
  std::string sign = probability.is_negative() ? "-" : "";
  Rational percent = probability * Rational(100);
  if (percent.is_negative()) percent = -percent;
  std::int64_t e = detail::decimal_exponent(percent);
  if (e <= -7) {
    auto [s, e2] = detail::significant_digits(percent, digits, false);
    return sign + "0." + s + "x10^" + std::to_string(e2 + 1) + " %";
  }
  auto [s, e2] = detail::significant_digits(percent, digits, true);
  return sign + detail::fixed_from_digits(s, e2) + "%";
}

// A probability with its exact value and both presentations, all derived
// from the same rational.
struct ProbabilityRendering {
  Rational exact;
  std::string scientific;
  std::string percent;
  std::uint32_t digits = 3;
};

inline ProbabilityRendering render_probability(Rational exact,
                                               std::uint32_t digits = 3) {
  ProbabilityRendering out;
  out.scientific = render_scientific(exact, digits);
  out.percent = render_percent(exact, digits);
  out.exact = std::move(exact);
  out.digits = digits;
  return out;
}

// Lossy conversion for display and test statistics; fine for magnitudes a
// double can hold, saturates cleanly otherwise.
inline double to_double(const Rational& v) {
  if (v.is_zero()) return 0.0;
  Rational mag = v.is_negative() ? -v : v;
  auto [s, e] = detail::significant_digits(mag, 17, false);
  if (e < -320) return 0.0;
  if (e > 307)
    return v.is_negative() ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
  double out = std::strtod(("0." + s + "e" + std::to_string(e + 1)).c_str(),
                           nullptr);
  return v.is_negative() ? -out : out;
}

}  // namespace setpart
