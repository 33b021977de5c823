#include "schur/poly.hpp"

#include <algorithm>
#include <cstddef>

namespace schur {

namespace {

void require_uniform_backend(const std::vector<Scalar>& coeffs, const char* what) {
  for (size_t i = 1; i < coeffs.size(); ++i) {
    if (coeffs[i].backend() != coeffs[0].backend()) {
      throw backend_mismatch(std::string("mixed scalar backends in ") + what);
    }
  }
}

void append_term(std::string& out, const Scalar& coeff, int power, std::string_view var) {
  const bool negative = coeff.sign() < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Scalar mag = coeff.abs();
  const bool unit = mag == Scalar::one(coeff.backend());
  if (!unit || power == 0) out += mag.str();
  if (power > 0) {
    out += var;
    if (power > 1) {
      out += "^";
      out += std::to_string(power);
    }
  }
}

std::string render(const std::vector<Scalar>& ascending, std::string_view var) {
  std::string out;
  for (int k = static_cast<int>(ascending.size()) - 1; k >= 0; --k) {
    const Scalar& c = ascending[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    append_term(out, c, k, var);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

MonicPolynomial::MonicPolynomial(std::vector<Scalar> tail) : tail_(std::move(tail)) {
  if (tail_.empty()) throw invalid_input("monic polynomial must have degree >= 1");
  require_uniform_backend(tail_, "polynomial coefficients");
}

Scalar MonicPolynomial::tail_abs_sum() const {
  Scalar sum = Scalar::zero(backend());
  for (const Scalar& c : tail_) sum += c.abs();
  return sum;
}

Scalar MonicPolynomial::eval(const Scalar& x) const {
  if (x.backend() != backend()) throw backend_mismatch("eval argument backend");
  Scalar acc = Scalar::one(backend());
  for (int j = degree() - 1; j >= 0; --j) {
    acc *= x;
    acc += tail_[static_cast<size_t>(j)];
  }
  return acc;
}

std::string MonicPolynomial::str(std::string_view var) const {
  std::vector<Scalar> full = tail_;
  full.push_back(Scalar::one(backend()));
  return render(full, var);
}

MonicPolynomial normalize(const std::vector<Scalar>& descending) {
  if (descending.size() < 2) {
    throw invalid_input("normalize needs a polynomial of degree >= 1");
  }
  require_uniform_backend(descending, "normalize input");
  const Scalar& lead = descending.front();
  if (lead.is_zero()) throw invalid_input("normalize: zero leading coefficient");
  const int n = static_cast<int>(descending.size()) - 1;
  std::vector<Scalar> tail;
  tail.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    tail.push_back(descending[static_cast<size_t>(n - j)] / lead);
  }
  return MonicPolynomial(std::move(tail));
}

Scalar l1_norm(const MonicPolynomial& p) {
  return Scalar::one(p.backend()) + p.tail_abs_sum();
}

GeneralPolynomial::GeneralPolynomial(std::vector<Scalar> ascending, Backend b)
    : c_(std::move(ascending)), backend_(b) {
  for (const Scalar& c : c_) {
    if (c.backend() != b) throw backend_mismatch("polynomial coefficient backend");
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GeneralPolynomial GeneralPolynomial::monomial(int k, Backend b) {
  if (k < 0) throw invalid_input("monomial with negative exponent");
  std::vector<Scalar> c(static_cast<size_t>(k) + 1, Scalar::zero(b));
  c.back() = Scalar::one(b);
  return GeneralPolynomial(std::move(c), b);
}

GeneralPolynomial GeneralPolynomial::from_monic(const MonicPolynomial& p) {
  std::vector<Scalar> c = p.tail();
  c.push_back(Scalar::one(p.backend()));
  return GeneralPolynomial(std::move(c), p.backend());
}

Scalar GeneralPolynomial::coeff(int k) const {
  if (k < 0) throw invalid_input("negative coefficient index");
  if (static_cast<size_t>(k) >= c_.size()) return Scalar::zero(backend_);
  return c_[static_cast<size_t>(k)];
}

Scalar GeneralPolynomial::eval(const Scalar& x) const {
  if (x.backend() != backend_) throw backend_mismatch("eval argument backend");
  Scalar acc = Scalar::zero(backend_);
  for (int k = degree(); k >= 0; --k) {
    acc *= x;
    acc += c_[static_cast<size_t>(k)];
  }
  return acc;
}

std::string GeneralPolynomial::str(std::string_view var) const { return render(c_, var); }

GeneralPolynomial add(const GeneralPolynomial& a, const GeneralPolynomial& b) {
  if (a.backend() != b.backend()) throw backend_mismatch("polynomial addition");
  std::vector<Scalar> c(std::max(a.coeffs().size(), b.coeffs().size()),
                        Scalar::zero(a.backend()));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return GeneralPolynomial(std::move(c), a.backend());
}

GeneralPolynomial sub(const GeneralPolynomial& a, const GeneralPolynomial& b) {
  if (a.backend() != b.backend()) throw backend_mismatch("polynomial subtraction");
  std::vector<Scalar> c(std::max(a.coeffs().size(), b.coeffs().size()),
                        Scalar::zero(a.backend()));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
  return GeneralPolynomial(std::move(c), a.backend());
}

GeneralPolynomial mul(const GeneralPolynomial& a, const GeneralPolynomial& b) {
  if (a.backend() != b.backend()) throw backend_mismatch("polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return GeneralPolynomial(a.backend());
  std::vector<Scalar> c(a.coeffs().size() + b.coeffs().size() - 1, Scalar::zero(a.backend()));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    for (size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return GeneralPolynomial(std::move(c), a.backend());
}

GeneralPolynomial mod_reduce(int power, const MonicPolynomial& p) {
  if (power < 0) throw invalid_input("mod_reduce with negative power");
  const Backend b = p.backend();
  const int n = p.degree();
  if (power < n) return GeneralPolynomial::monomial(power, b);

  // r starts as x^n mod p = -(a_0 + ... + a_{n-1}x^{n-1}); each pass
  // multiplies by x and subtracts the overflow multiple of p.
  std::vector<Scalar> r;
  r.reserve(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) r.push_back(-p.a(m));
  for (int k = n; k < power; ++k) {
    const Scalar top = r[static_cast<size_t>(n - 1)];
    for (int m = n - 1; m >= 1; --m) {
      r[static_cast<size_t>(m)] = r[static_cast<size_t>(m - 1)] - top * p.a(m);
    }
    r[0] = -top * p.a(0);
  }
  return GeneralPolynomial(std::move(r), b);
}

}  // namespace schur
