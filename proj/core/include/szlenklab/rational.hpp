#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace szlenklab {

// Exact rational arithmetic on 64-bit words with __int128 intermediates.
// Every result is reduced (gcd 1, positive denominator). Operations that
// would leave the 64-bit range throw std::overflow_error instead of
// wrapping; exact-mode results are either exact or loudly absent.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    reduce_small();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Exact conversion; every finite double is a dyadic rational. Throws if
  // the reduced form does not fit in 64 bits (huge exponents).
  static Rational from_double(double x);

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return make_reduced(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return make_reduced(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make_reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  // Cross-multiplication always fits __int128, so comparisons never throw.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static Rational make_reduced(__int128 n, __int128 d);
  void reduce_small();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) {
  return r < Rational(0) ? -r : r;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

inline Rational Rational::make_reduced(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __uint128_t an = n < 0 ? static_cast<__uint128_t>(-n) : static_cast<__uint128_t>(n);
  __uint128_t ad = static_cast<__uint128_t>(d);
  __uint128_t g = an == 0 ? ad : ad == 0 ? an : [&] {
    __uint128_t x = an, y = ad;
    while (y != 0) {
      __uint128_t t = x % y;
      x = y;
      y = t;
    }
    return x;
  }();
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  constexpr __int128 kMax = static_cast<__int128>(INT64_MAX);
  constexpr __int128 kMin = static_cast<__int128>(INT64_MIN);
  if (n > kMax || n < kMin || d > kMax) {
    throw std::overflow_error("Rational: value exceeds 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

inline void Rational::reduce_small() {
  *this = make_reduced(i128(num_), i128(den_));
}

inline Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp with |m| in [1/2, 1)
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  while (mant % 2 == 0) {
    mant /= 2;
    ++exp;
  }
  if (exp >= 0) {
    if (exp > 62) throw std::overflow_error("Rational: double too large");
    return make_reduced(i128(mant) << exp, 1);
  }
  if (-exp > 62) throw std::overflow_error("Rational: double exponent too small");
  return make_reduced(i128(mant), i128(1) << (-exp));
}

}  // namespace szlenklab
