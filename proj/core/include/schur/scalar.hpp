#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "schur/errors.hpp"
#include "schur/rational.hpp"

namespace schur {

enum class Backend { exact, floating };

[[nodiscard]] std::string_view backend_name(Backend b);
[[nodiscard]] Backend backend_from_name(std::string_view name);

// A number in one of two backends: exact rational or binary64. Arithmetic
// and comparisons never mix backends; mixed operands throw
// backend_mismatch instead of silently converting.
class Scalar {
 public:
  Scalar() : v_(Rational()) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(double d) : v_(d) {}

  static Scalar zero(Backend b);
  static Scalar one(Backend b);

  [[nodiscard]] Backend backend() const {
    return std::holds_alternative<Rational>(v_) ? Backend::exact : Backend::floating;
  }
  [[nodiscard]] bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  [[nodiscard]] const Rational& exact() const;
  [[nodiscard]] double floating() const;
  // Lossy numeric view, valid in either backend.
  [[nodiscard]] double approx() const;

  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] Scalar abs() const;
  [[nodiscard]] std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

 private:
  static int compare(const Scalar& a, const Scalar& b);
  std::variant<Rational, double> v_;
};

[[nodiscard]] Scalar abs(const Scalar& s);

// Exact backend delegates to Rational::parse; floating parses standard
// decimal/scientific notation.
[[nodiscard]] Scalar parse_scalar(std::string_view text, Backend b);

}  // namespace schur
