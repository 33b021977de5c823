#include "schur/scalar.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace schur {

namespace {

[[noreturn]] void throw_mixed(const char* what) {
  throw backend_mismatch(std::string("mixed scalar backends in ") + what);
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::exact ? "exact" : "float";
}

Backend backend_from_name(std::string_view name) {
  if (name == "exact") return Backend::exact;
  if (name == "float" || name == "floating") return Backend::floating;
  throw invalid_input("unknown backend \"" + std::string(name) + "\"");
}

Scalar Scalar::zero(Backend b) {
  return b == Backend::exact ? Scalar(Rational(0)) : Scalar(0.0);
}

Scalar Scalar::one(Backend b) {
  return b == Backend::exact ? Scalar(Rational(1)) : Scalar(1.0);
}

const Rational& Scalar::exact() const {
  if (!is_exact()) throw backend_mismatch("expected an exact scalar");
  return std::get<Rational>(v_);
}

double Scalar::floating() const {
  if (is_exact()) throw backend_mismatch("expected a floating scalar");
  return std::get<double>(v_);
}

double Scalar::approx() const {
  return is_exact() ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
}

int Scalar::sign() const {
  if (is_exact()) return std::get<Rational>(v_).sign();
  const double d = std::get<double>(v_);
  return d < 0 ? -1 : d > 0 ? 1 : 0;
}

Scalar Scalar::abs() const {
  return is_exact() ? Scalar(std::get<Rational>(v_).abs())
                    : Scalar(std::fabs(std::get<double>(v_)));
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<Rational>(v_).str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
  return buf;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() != o.is_exact()) throw_mixed("addition");
  if (is_exact()) {
    std::get<Rational>(v_) += std::get<Rational>(o.v_);
  } else {
    std::get<double>(v_) += std::get<double>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() != o.is_exact()) throw_mixed("subtraction");
  if (is_exact()) {
    std::get<Rational>(v_) -= std::get<Rational>(o.v_);
  } else {
    std::get<double>(v_) -= std::get<double>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() != o.is_exact()) throw_mixed("multiplication");
  if (is_exact()) {
    std::get<Rational>(v_) *= std::get<Rational>(o.v_);
  } else {
    std::get<double>(v_) *= std::get<double>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() != o.is_exact()) throw_mixed("division");
  if (is_exact()) {
    std::get<Rational>(v_) /= std::get<Rational>(o.v_);
  } else {
    if (std::get<double>(o.v_) == 0.0) throw invalid_input("floating division by zero");
    std::get<double>(v_) /= std::get<double>(o.v_);
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  return a.is_exact() ? Scalar(-std::get<Rational>(a.v_)) : Scalar(-std::get<double>(a.v_));
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) throw_mixed("comparison");
  if (a.is_exact()) {
    const Rational& x = std::get<Rational>(a.v_);
    const Rational& y = std::get<Rational>(b.v_);
    return x < y ? -1 : x > y ? 1 : 0;
  }
  const double x = std::get<double>(a.v_);
  const double y = std::get<double>(b.v_);
  return x < y ? -1 : x > y ? 1 : 0;
}

Scalar abs(const Scalar& s) { return s.abs(); }

Scalar parse_scalar(std::string_view text, Backend b) {
  if (b == Backend::exact) return Scalar(Rational::parse(text));
  const std::string buf(text);
  errno = 0;
  char* end = nullptr;
  const double d = std::strtod(buf.c_str(), &end);
  if (errno != 0 || end == nullptr || end == buf.c_str() || *end != '\0' || !std::isfinite(d)) {
    // Fractions like "1/2" are accepted in float mode by exact parsing
    // followed by one rounding.
    return Scalar(Rational::parse(text).to_double());
  }
  return Scalar(d);
}

}  // namespace schur
