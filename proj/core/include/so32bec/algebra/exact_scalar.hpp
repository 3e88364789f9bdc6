#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "so32bec/algebra/rational.hpp"

namespace so32bec {

/// Element of the ring Q(sqrt2): value = p + s*sqrt(2) with exact rationals
/// p, s.  All generator coefficients (±1, ±1/2, 1/sqrt2) live here, so
/// commutator tables can be verified with zero rounding.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long long n) : p_(n) {}  // NOLINT: implicit by design
  ExactScalar(Rational p, Rational s = Rational(0)) : p_(p), s_(s) {}

  static ExactScalar rational(long long num, long long den) {
    return ExactScalar(Rational(num, den));
  }
  /// num/den * sqrt(2)
  static ExactScalar sqrt2_times(long long num, long long den = 1) {
    return ExactScalar(Rational(0), Rational(num, den));
  }
  /// 1/sqrt(2) = sqrt(2)/2
  static ExactScalar inv_sqrt2() { return sqrt2_times(1, 2); }

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt2_part() const { return s_; }

  bool is_zero() const { return p_.is_zero() && s_.is_zero(); }

  double to_double() const { return p_.to_double() + s_.to_double() * std::sqrt(2.0); }

  ExactScalar operator-() const { return ExactScalar(-p_, -s_); }

  ExactScalar& operator+=(const ExactScalar& o) {
    p_ += o.p_;
    s_ += o.s_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    p_ -= o.p_;
    s_ -= o.s_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    // (p1 + s1 r)(p2 + s2 r) = p1 p2 + 2 s1 s2 + (p1 s2 + s1 p2) r,  r = sqrt2
    Rational p = p_ * o.p_ + Rational(2) * s_ * o.s_;
    Rational s = p_ * o.s_ + s_ * o.p_;
    p_ = p;
    s_ = s;
    return *this;
  }

  /// Exact inverse; valid because sqrt(2) is irrational so p^2 - 2 s^2 = 0
  /// only for the zero element.
  ExactScalar inverse() const {
    Rational d = p_ * p_ - Rational(2) * s_ * s_;
    return ExactScalar(p_ / d, -s_ / d);
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) = default;

  std::string to_string() const {
    if (s_.is_zero()) return p_.to_string();
    std::string st = s_.to_string() + "*sqrt2";
    if (p_.is_zero()) return st;
    std::string sign = s_.is_negative() ? "" : "+";
    return "(" + p_.to_string() + sign + st + ")";
  }

 private:
  Rational p_{0};
  Rational s_{0};
};

}  // namespace so32bec
