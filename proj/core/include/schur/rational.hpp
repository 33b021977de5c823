#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "schur/errors.hpp"

namespace schur {

// Arbitrary-precision rational, always in canonical lowest terms with a
// positive denominator. Thin layer over GMP's mpq_class that adds strict
// string parsing and compact formatting.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p/q" with integer p and q, plain integers, and exact decimal
  // or scientific strings ("0.25", "-3e-2"). Anything else throws
  // invalid_input; parsing never rounds.
  static Rational parse(std::string_view text);

  // "num/den", or just "num" when the denominator is 1.
  [[nodiscard]] std::string str() const { return v_.get_str(); }
  [[nodiscard]] double to_double() const { return v_.get_d(); }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] const mpq_class& value() const { return v_; }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

[[nodiscard]] Rational abs(const Rational& r);
[[nodiscard]] Rational pow(const Rational& base, unsigned exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace schur
