#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace setpart {

// Arbitrary-precision integer, sign + magnitude with 64-bit limbs
// (little-endian). All arithmetic is exact; the only failure modes are
// division by zero and narrowing conversions that do not fit.
//
// Counts in this library routinely exceed 10^2000, so everything here is
// plain schoolbook arithmetic tuned for multiply-by-word and add, which is
// what the triangular recurrences spend their time on.
class BigInt {
 public:
  BigInt() = default;

  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  BigInt(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      negative_ = value < 0;
      std::uint64_t mag =
          negative_ ? ~static_cast<std::uint64_t>(value) + 1u
                    : static_cast<std::uint64_t>(value);
      if (mag != 0) limbs_.push_back(mag);
    } else {
      if (value != 0) limbs_.push_back(static_cast<std::uint64_t>(value));
    }
  }

  static BigInt from_limbs(std::vector<std::uint64_t> limbs) {
    BigInt out;
    out.limbs_ = std::move(limbs);
    out.trim();
    return out;
  }

  static BigInt from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    if (text.front() == '-' || text.front() == '+') {
      neg = text.front() == '-';
      text.remove_prefix(1);
    }
    if (text.empty()) throw std::invalid_argument("BigInt: sign only");
    BigInt out;
    std::size_t pos = 0;
    std::size_t lead = text.size() % kDecChunkDigits;
    if (lead == 0) lead = kDecChunkDigits;
    while (pos < text.size()) {
      std::size_t take = pos == 0 ? lead : kDecChunkDigits;
      std::uint64_t chunk = 0;
      for (std::size_t i = 0; i < take; ++i) {
        char c = text[pos + i];
        if (c < '0' || c > '9')
          throw std::invalid_argument("BigInt: invalid digit");
        chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
      }
      out.mul_add_small(kDecChunk, chunk);
      pos += take;
    }
    out.negative_ = neg && !out.limbs_.empty();
    return out;
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint64_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        unsigned __int128 cur =
            (static_cast<unsigned __int128>(rem) << 64) | work[i];
        work[i] = static_cast<std::uint64_t>(cur / kDecChunk);
        rem = static_cast<std::uint64_t>(cur % kDecChunk);
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      if (work.empty()) {
        // most significant chunk: no zero padding
        std::string head = std::to_string(rem);
        out.insert(0, head);
      } else {
        std::string part = std::to_string(rem);
        out.insert(0, std::string(kDecChunkDigits - part.size(), '0') + part);
      }
    }
    if (negative_) out.insert(0, "-");
    return out;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  int signum() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * limbs_.size() -
           static_cast<std::size_t>(std::countl_zero(limbs_.back()));
  }

  std::size_t limb_count() const { return limbs_.size(); }
  std::uint64_t limb(std::size_t i) const {
    return i < limbs_.size() ? limbs_[i] : 0;
  }

  bool fits_uint64() const { return !negative_ && limbs_.size() <= 1; }
  std::uint64_t to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigInt: does not fit u64");
    return limbs_.empty() ? 0 : limbs_[0];
  }
  double to_double() const {
    double mag = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      mag = mag * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return negative_ ? -mag : mag;
  }

  BigInt abs() const {
    BigInt copy = *this;
    copy.negative_ = false;
    return copy;
  }
  BigInt operator-() const {
    BigInt copy = *this;
    if (!copy.limbs_.empty()) copy.negative_ = !copy.negative_;
    return copy;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.negative_ ? c > 0 : c < 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt& operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
      add_mag_inplace(limbs_, rhs.limbs_);
    } else {
      int c = cmp_mag(limbs_, rhs.limbs_);
      if (c == 0) {
        limbs_.clear();
        negative_ = false;
      } else if (c > 0) {
        sub_mag_inplace(limbs_, rhs.limbs_);
      } else {
        std::vector<std::uint64_t> tmp = rhs.limbs_;
        sub_mag_inplace(tmp, limbs_);
        limbs_ = std::move(tmp);
        negative_ = rhs.negative_;
      }
    }
    return *this;
  }
  BigInt& operator-=(const BigInt& rhs) {
    BigInt flipped = rhs;
    if (!flipped.limbs_.empty()) flipped.negative_ = !flipped.negative_;
    return *this += flipped;
  }
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.limbs_.empty() || b.limbs_.empty()) return out;
    out.limbs_ = mul_mag(a.limbs_, b.limbs_);
    out.negative_ = a.negative_ != b.negative_;
    return out;
  }
  BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

  // Word multiply, the hot path of the table recurrences.
  BigInt times(std::uint64_t factor) const {
    BigInt out;
    if (limbs_.empty() || factor == 0) return out;
    out.limbs_.resize(limbs_.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 cur =
          static_cast<unsigned __int128>(limbs_[i]) * factor + carry;
      out.limbs_[i] = static_cast<std::uint64_t>(cur);
      carry = static_cast<std::uint64_t>(cur >> 64);
    }
    out.limbs_.back() = carry;
    out.trim();
    out.negative_ = negative_;
    return out;
  }
  BigInt& operator*=(std::uint64_t factor) { return *this = times(factor); }

  // Quotient truncated toward zero; remainder carries the dividend's sign.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.limbs_.empty()) throw std::domain_error("BigInt: division by zero");
    BigInt q, r;
    auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.trim();
    r.trim();
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.negative_ = !r.limbs_.empty() && a.negative_;
    return {std::move(q), std::move(r)};
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    return divmod(a, b).first;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    return divmod(a, b).second;
  }

  // Divides in place by a word, returns the remainder.
  std::uint64_t div_small(std::uint64_t divisor) {
    if (divisor == 0) throw std::domain_error("BigInt: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      unsigned __int128 cur =
          (static_cast<unsigned __int128>(rem) << 64) | limbs_[i];
      limbs_[i] = static_cast<std::uint64_t>(cur / divisor);
      rem = static_cast<std::uint64_t>(cur % divisor);
    }
    trim();
    return rem;
  }

  BigInt shifted_left(std::size_t bits) const {
    if (limbs_.empty() || bits == 0) return *this;
    std::size_t words = bits / 64, rest = bits % 64;
    BigInt out;
    out.negative_ = negative_;
    out.limbs_.assign(words, 0);
    if (rest == 0) {
      out.limbs_.insert(out.limbs_.end(), limbs_.begin(), limbs_.end());
      return out;
    }
    std::uint64_t carry = 0;
    for (std::uint64_t limb : limbs_) {
      out.limbs_.push_back((limb << rest) | carry);
      carry = limb >> (64 - rest);
    }
    if (carry) out.limbs_.push_back(carry);
    return out;
  }

  BigInt shifted_right(std::size_t bits) const {
    std::size_t words = bits / 64, rest = bits % 64;
    BigInt out;
    if (words >= limbs_.size()) return out;
    out.limbs_.assign(limbs_.begin() + static_cast<std::ptrdiff_t>(words),
                      limbs_.end());
    if (rest != 0) {
      for (std::size_t i = 0; i + 1 < out.limbs_.size(); ++i)
        out.limbs_[i] =
            (out.limbs_[i] >> rest) | (out.limbs_[i + 1] << (64 - rest));
      out.limbs_.back() >>= rest;
    }
    out.trim();
    out.negative_ = negative_ && !out.limbs_.empty();
    return out;
  }

  std::size_t trailing_zero_bits() const {
    if (limbs_.empty()) return 0;
    std::size_t i = 0;
    while (limbs_[i] == 0) ++i;
    return 64 * i + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
  }

 private:
  static constexpr std::uint64_t kDecChunk = 10'000'000'000'000'000'000ull;
  static constexpr std::size_t kDecChunkDigits = 19;

  std::vector<std::uint64_t> limbs_;
  bool negative_ = false;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
  }

  // *this = *this * factor + addend, on the magnitude (parse helper).
  void mul_add_small(std::uint64_t factor, std::uint64_t addend) {
    std::uint64_t carry = addend;
    for (std::uint64_t& limb : limbs_) {
      unsigned __int128 cur =
          static_cast<unsigned __int128>(limb) * factor + carry;
      limb = static_cast<std::uint64_t>(cur);
      carry = static_cast<std::uint64_t>(cur >> 64);
    }
    if (carry) limbs_.push_back(carry);
  }

  static int cmp_mag(const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static void add_mag_inplace(std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t bi = i < b.size() ? b[i] : 0;
      if (bi == 0 && carry == 0 && i >= b.size()) break;
      std::uint64_t sum = a[i] + bi;
      std::uint64_t c1 = sum < a[i];
      a[i] = sum + carry;
      carry = c1 + (a[i] < sum);
    }
    if (carry) a.push_back(carry);
  }

  // requires |a| >= |b|
  static void sub_mag_inplace(std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t bi = i < b.size() ? b[i] : 0;
      if (bi == 0 && borrow == 0 && i >= b.size()) break;
      std::uint64_t diff = a[i] - bi;
      std::uint64_t b1 = diff > a[i];
      a[i] = diff - borrow;
      borrow = b1 + (a[i] > diff);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  static std::vector<std::uint64_t> mul_mag(
      const std::vector<std::uint64_t>& a,
      const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        unsigned __int128 cur =
            static_cast<unsigned __int128>(a[i]) * b[j] + out[i + j] + carry;
        out[i + j] = static_cast<std::uint64_t>(cur);
        carry = static_cast<std::uint64_t>(cur >> 64);
      }
      out[i + b.size()] = carry;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

  // Knuth algorithm D on magnitudes.
  static std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
  divmod_mag(const std::vector<std::uint64_t>& u,
             const std::vector<std::uint64_t>& v) {
    if (cmp_mag(u, v) < 0) return {{}, u};
    if (v.size() == 1) {
      std::vector<std::uint64_t> q(u.size());
      std::uint64_t rem = 0;
      for (std::size_t i = u.size(); i-- > 0;) {
        unsigned __int128 cur =
            (static_cast<unsigned __int128>(rem) << 64) | u[i];
        q[i] = static_cast<std::uint64_t>(cur / v[0]);
        rem = static_cast<std::uint64_t>(cur % v[0]);
      }
      std::vector<std::uint64_t> r;
      if (rem) r.push_back(rem);
      return {std::move(q), std::move(r)};
    }

    const unsigned shift =
        static_cast<unsigned>(std::countl_zero(v.back()));
    std::vector<std::uint64_t> un(u.size() + 1, 0);
    std::vector<std::uint64_t> vn(v.size());
    if (shift == 0) {
      for (std::size_t i = 0; i < u.size(); ++i) un[i] = u[i];
      vn = v;
    } else {
      for (std::size_t i = u.size(); i-- > 0;) {
        un[i + 1] |= u[i] >> (64 - shift);
        un[i] = u[i] << shift;
      }
      for (std::size_t i = v.size(); i-- > 0;) {
        vn[i] = v[i] << shift;
        if (i > 0) vn[i] |= v[i - 1] >> (64 - shift);
      }
    }

    const std::size_t n = vn.size();
    const std::size_t m = u.size() - n;
    std::vector<std::uint64_t> q(m + 1, 0);
    const std::uint64_t vtop = vn[n - 1];
    const std::uint64_t vsecond = vn[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
      unsigned __int128 numer =
          (static_cast<unsigned __int128>(un[j + n]) << 64) | un[j + n - 1];
      unsigned __int128 qhat = numer / vtop;
      unsigned __int128 rhat = numer % vtop;
      while (qhat >> 64 ||
             qhat * vsecond >
                 ((rhat << 64) | un[j + n - 2])) {
        --qhat;
        rhat += vtop;
        if (rhat >> 64) break;
      }

      // multiply-subtract qhat * vn from un[j .. j+n]
      unsigned __int128 borrow = 0;
      unsigned __int128 carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 prod =
            qhat * vn[i] + carry;
        carry = prod >> 64;
        std::uint64_t sub = static_cast<std::uint64_t>(prod);
        unsigned __int128 diff =
            static_cast<unsigned __int128>(un[i + j]) - sub - borrow;
        un[i + j] = static_cast<std::uint64_t>(diff);
        borrow = (diff >> 64) ? 1 : 0;
      }
      unsigned __int128 diff =
          static_cast<unsigned __int128>(un[j + n]) -
          static_cast<std::uint64_t>(carry) - borrow;
      un[j + n] = static_cast<std::uint64_t>(diff);

      if (diff >> 64) {  // qhat was one too large; add vn back
        --qhat;
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t sum = un[i + j] + vn[i];
          std::uint64_t c1 = sum < un[i + j];
          un[i + j] = sum + c;
          c = c1 + (un[i + j] < sum);
        }
        un[j + n] += c;
      }
      q[j] = static_cast<std::uint64_t>(qhat);
    }

    std::vector<std::uint64_t> r(n);
    if (shift == 0) {
      for (std::size_t i = 0; i < n; ++i) r[i] = un[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = un[i] >> shift;
        if (i + 1 < un.size()) r[i] |= un[i + 1] << (64 - shift);
      }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    return {std::move(q), std::move(r)};
  }
};

inline BigInt pow(const BigInt& base, std::uint64_t exp) {
  BigInt result(1);
  BigInt acc = base;
  while (exp != 0) {
    if (exp & 1u) result *= acc;
    exp >>= 1;
    if (exp) acc *= acc;
  }
  return result;
}

// Binary gcd; always nonnegative.
inline BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::size_t az = a.trailing_zero_bits();
  std::size_t bz = b.trailing_zero_bits();
  std::size_t common = az < bz ? az : bz;
  a = a.shifted_right(az);
  b = b.shifted_right(bz);
  while (true) {
    if (a < b) std::swap(a, b);
    a -= b;
    if (a.is_zero()) break;
    a = a.shifted_right(a.trailing_zero_bits());
  }
  return b.shifted_left(common);
}

}  // namespace setpart
