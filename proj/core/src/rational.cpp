#include "schur/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <string>

namespace schur {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_token(s)) {
    throw invalid_input("not a rational literal: \"" + std::string(whole) + "\"");
  }
  return mpz_class(std::string(s), 10);
}

// Exponents are bounded so a typo like "1e999999999" cannot allocate a
// gigantic power of ten.
constexpr long kMaxExponent = 1 << 16;

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw invalid_input("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw invalid_input("empty rational literal");

  if (const size_t slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(s.substr(0, slash), text);
    const mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw invalid_input("zero denominator in \"" + std::string(text) + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  std::string_view rest = s;
  bool negative = false;
  if (rest.front() == '+' || rest.front() == '-') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  size_t pos = 0;
  for (; pos < rest.size(); ++pos) {
    const char c = rest[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw invalid_input("not a rational literal: \"" + std::string(text) + "\"");

  long exponent = 0;
  if (pos < rest.size()) {
    if (rest[pos] != 'e' && rest[pos] != 'E') {
      throw invalid_input("not a rational literal: \"" + std::string(text) + "\"");
    }
    const std::string_view exp_part = rest.substr(pos + 1);
    if (!is_integer_token(exp_part)) {
      throw invalid_input("not a rational literal: \"" + std::string(text) + "\"");
    }
    errno = 0;
    char* end = nullptr;
    const std::string exp_str(exp_part);
    exponent = std::strtol(exp_str.c_str(), &end, 10);
    if (errno != 0 || end == nullptr || *end != '\0' || exponent > kMaxExponent ||
        exponent < -kMaxExponent) {
      throw invalid_input("exponent out of range in \"" + std::string(text) + "\"");
    }
  }

  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long net = exponent - frac_digits;
  if (net < -kMaxExponent || net > kMaxExponent) {
    throw invalid_input("exponent out of range in \"" + std::string(text) + "\"");
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  mpq_class q = net >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

Rational abs(const Rational& r) { return r.abs(); }

Rational pow(const Rational& base, unsigned exp) {
  // gcd(num, den) = 1 is preserved under powers, so no canonicalization.
  mpq_class out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.value().get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.value().get_mpq_t()), exp);
  return Rational(out);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace schur
