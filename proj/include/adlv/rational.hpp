#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>

#include "adlv/error.hpp"

namespace adlv {

// Exact rational scalar over int64, always normalized (gcd 1, positive
// denominator). Intermediate products go through __int128; anything that
// cannot be reduced back into int64 throws instead of wrapping.
class Rational {
public:
  using i64 = std::int64_t;
  using i128 = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(i64 n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(i64 n, i64 d) { assign(n, d); }

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    require(b.num_ != 0, "DivisionByZero", "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

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
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  void assign(i64 n, i64 d) {
    require(d != 0, "DivisionByZero", "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
  }
  static Rational make(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b) { i128 t = a % b; a = b; b = t; }  // gcd
    if (a > 1) { n /= a; d /= a; }
    constexpr i128 lim = i128(INT64_MAX);
    require(n <= lim && n >= -lim && d <= lim, "Overflow", "rational overflow");
    Rational r;
    r.num_ = i64(n);
    r.den_ = i64(d);
    return r;
  }

  i64 num_;
  i64 den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace adlv

namespace Eigen {
template <>
struct NumTraits<adlv::Rational> : GenericNumTraits<adlv::Rational> {
  using Real = adlv::Rational;
  using NonInteger = adlv::Rational;
  using Nested = adlv::Rational;
  using Literal = std::int64_t;
  static inline Real epsilon() { return adlv::Rational(0); }
  static inline Real dummy_precision() { return adlv::Rational(0); }
  static inline int digits10() { return 18; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12
  };
};
}  // namespace Eigen
