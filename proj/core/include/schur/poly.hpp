#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schur/scalar.hpp"

namespace schur {

// Monic real polynomial x^n + a_{n-1}x^{n-1} + ... + a_1 x + a_0 with
// n >= 1. The leading 1 is implicit and never stored; tail coefficients
// are kept constant-term first and share one backend.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(std::vector<Scalar> tail);

  [[nodiscard]] int degree() const { return static_cast<int>(tail_.size()); }
  [[nodiscard]] Backend backend() const { return tail_.front().backend(); }
  [[nodiscard]] const Scalar& a(int j) const { return tail_.at(static_cast<size_t>(j)); }
  [[nodiscard]] const std::vector<Scalar>& tail() const { return tail_; }
  [[nodiscard]] Scalar tail_abs_sum() const;
  [[nodiscard]] Scalar eval(const Scalar& x) const;
  [[nodiscard]] std::string str(std::string_view var = "x") const;

  friend bool operator==(const MonicPolynomial& a, const MonicPolynomial& b) {
    return a.tail_ == b.tail_;
  }

 private:
  std::vector<Scalar> tail_;
};

// Divides through by the leading coefficient; the root set is unchanged.
// Input is descending-degree with the leading coefficient included.
[[nodiscard]] MonicPolynomial normalize(const std::vector<Scalar>& descending);

// 1 + sum |a_j|.
[[nodiscard]] Scalar l1_norm(const MonicPolynomial& p);

// Dense polynomial with arbitrary leading coefficient. Coefficients are
// stored ascending from the constant term in canonical form: no stored
// leading zeros, and the zero polynomial has an empty list (degree -1).
class GeneralPolynomial {
 public:
  explicit GeneralPolynomial(Backend b) : backend_(b) {}
  GeneralPolynomial(std::vector<Scalar> ascending, Backend b);

  static GeneralPolynomial monomial(int k, Backend b);
  static GeneralPolynomial from_monic(const MonicPolynomial& p);

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] Backend backend() const { return backend_; }
  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return c_; }
  [[nodiscard]] Scalar coeff(int k) const;
  [[nodiscard]] Scalar eval(const Scalar& x) const;
  [[nodiscard]] std::string str(std::string_view var = "x") const;

  friend bool operator==(const GeneralPolynomial& a, const GeneralPolynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<Scalar> c_;
  Backend backend_;
};

[[nodiscard]] GeneralPolynomial add(const GeneralPolynomial& a, const GeneralPolynomial& b);
[[nodiscard]] GeneralPolynomial sub(const GeneralPolynomial& a, const GeneralPolynomial& b);
[[nodiscard]] GeneralPolynomial mul(const GeneralPolynomial& a, const GeneralPolynomial& b);

// The unique remainder r with deg r < deg p and x^power = q*p + r.
[[nodiscard]] GeneralPolynomial mod_reduce(int power, const MonicPolynomial& p);

}  // namespace schur
