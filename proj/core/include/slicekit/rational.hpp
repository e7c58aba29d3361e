#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slicekit {

/// Exact rational number over 128-bit integers, always kept reduced with a
/// positive denominator. Multiplications are overflow-checked; the library
/// throws instead of silently wrapping.
class Rational {
 public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    reduce();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  long long to_int64() const {
    if (den_ != 1) throw std::domain_error("Rational: not an integer: " + str());
    if (num_ > INT64_MAX || num_ < INT64_MIN)
      throw std::overflow_error("Rational: integer out of 64-bit range");
    return static_cast<long long>(num_);
  }

  Rational operator-() const { return make_raw(-num_, den_); }

  Rational operator+(const Rational& o) const {
    Int g = gcd_int(den_, o.den_);
    Int lhs = checked_mul(num_, o.den_ / g);
    Int rhs = checked_mul(o.num_, den_ / g);
    return Rational(lhs + rhs, checked_mul(den_, o.den_ / g));
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    Int g1 = gcd_int(num_, o.den_);
    Int g2 = gcd_int(o.num_, den_);
    return make_raw(checked_mul(num_ / g1, o.num_ / g2),
                    checked_mul(den_ / g2, o.den_ / g1));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return *this * Rational(o.den_, o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  std::string str() const {
    std::string s = int_to_string(num_);
    if (den_ != 1) s += "/" + int_to_string(den_);
    return s;
  }

 private:
  Int num_, den_;

  static Rational make_raw(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    if (d < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
    return r;
  }

  static Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  static Int checked_mul(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    Int r = a * b;
    if (r / b != a) throw std::overflow_error("Rational: 128-bit overflow");
    return r;
  }

  static std::string int_to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u > 0) { s.insert(s.begin(), char('0' + int(u % 10))); u /= 10; }
    return neg ? "-" + s : s;
  }

  void reduce() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    Int g = gcd_int(num_, den_);
    num_ /= g;
    den_ /= g;
  }
};

}  // namespace slicekit
