#include <doctest.h>

#include <random>
#include <vector>

#include "schur/errors.hpp"
#include "schur/poly.hpp"

using schur::Backend;
using schur::GeneralPolynomial;
using schur::MonicPolynomial;
using schur::Rational;
using schur::Scalar;

namespace {

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

MonicPolynomial table3_poly() {
  // x^5 + 1/2 x^4 - 1/2 x - 1/2
  return MonicPolynomial({q(-1, 2), q(-1, 2), q(0), q(0), q(1, 2)});
}

// Schoolbook remainder of x^power divided by p, used as an independent
// oracle for mod_reduce.
GeneralPolynomial long_division_remainder(int power, const MonicPolynomial& p) {
  const int n = p.degree();
  std::vector<Scalar> r(static_cast<size_t>(power) + 1, Scalar::zero(p.backend()));
  r.back() = Scalar::one(p.backend());
  for (int d = power; d >= n; --d) {
    const Scalar lead = r[static_cast<size_t>(d)];
    if (lead.is_zero()) continue;
    r[static_cast<size_t>(d)] = Scalar::zero(p.backend());
    for (int j = 0; j < n; ++j) {
      r[static_cast<size_t>(d - n + j)] -= lead * p.a(j);
    }
  }
  r.resize(static_cast<size_t>(n));
  return GeneralPolynomial(r, p.backend());
}

}  // namespace

TEST_CASE("monic construction validates the tail") {
  CHECK_THROWS_AS(MonicPolynomial({}), schur::invalid_input);
  CHECK_THROWS_AS(MonicPolynomial({q(1), Scalar(0.5)}), schur::backend_mismatch);
  const MonicPolynomial p = table3_poly();
  CHECK(p.degree() == 5);
  CHECK(p.backend() == Backend::exact);
  CHECK(p.a(0) == q(-1, 2));
  CHECK(p.a(4) == q(1, 2));
}

TEST_CASE("normalize divides by the leading coefficient") {
  // 2x^2 - 6x + 2 -> x^2 - 3x + 1
  const MonicPolynomial p = schur::normalize({q(2), q(-6), q(2)});
  CHECK(p.degree() == 2);
  CHECK(p.a(0) == q(1));
  CHECK(p.a(1) == q(-3));
  CHECK_THROWS_AS(schur::normalize({q(0), q(1), q(1)}), schur::invalid_input);
  CHECK_THROWS_AS(schur::normalize({q(1)}), schur::invalid_input);
  CHECK_THROWS_AS(schur::normalize({}), schur::invalid_input);
}

TEST_CASE("evaluation and the l1 norm") {
  const MonicPolynomial p = table3_poly();
  CHECK(p.eval(q(1)) == q(1, 2));            // 1 + 1/2 - 1/2 - 1/2
  CHECK(p.eval(q(0)) == q(-1, 2));
  CHECK(p.eval(q(-1)) == q(-1, 2));          // -1 + 1/2 + 1/2 - 1/2
  CHECK(p.tail_abs_sum() == q(3, 2));
  CHECK(schur::l1_norm(p) == q(5, 2));
}

TEST_CASE("display form matches the printed convention") {
  CHECK(table3_poly().str() == "x^5 + 1/2x^4 - 1/2x - 1/2");
  CHECK(MonicPolynomial({q(1), q(-1)}).str() == "x^2 - x + 1");
  CHECK(MonicPolynomial({q(0), q(0)}).str() == "x^2");
  CHECK(MonicPolynomial({q(-1)}).str() == "x - 1");
  CHECK(GeneralPolynomial(Backend::exact).str() == "0");
}

TEST_CASE("general polynomials stay canonical") {
  const GeneralPolynomial zero(Backend::exact);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  // Leading zeros trim away.
  const GeneralPolynomial p({q(1), q(2), q(0), q(0)}, Backend::exact);
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == q(1));
  CHECK(p.coeff(1) == q(2));
  CHECK(p.coeff(7) == q(0));
  CHECK_THROWS_AS(p.coeff(-1), schur::invalid_input);
  CHECK(GeneralPolynomial::monomial(3, Backend::exact).degree() == 3);
  CHECK(GeneralPolynomial::from_monic(table3_poly()).degree() == 5);
  CHECK(GeneralPolynomial::from_monic(table3_poly()).coeff(5) == q(1));
}

TEST_CASE("general arithmetic identities") {
  const GeneralPolynomial xm1({q(-1), q(1)}, Backend::exact);  // x - 1
  const GeneralPolynomial xp1({q(1), q(1)}, Backend::exact);   // x + 1
  const GeneralPolynomial x2m1({q(-1), q(0), q(1)}, Backend::exact);
  CHECK(mul(xm1, xp1) == x2m1);
  CHECK(add(xm1, xp1) == GeneralPolynomial({q(0), q(2)}, Backend::exact));
  CHECK(sub(xm1, xm1).is_zero());
  CHECK(mul(xm1, GeneralPolynomial(Backend::exact)).is_zero());
  CHECK(x2m1.eval(q(3)) == q(8));
}

TEST_CASE("mod_reduce of the worked example") {
  // x^6 mod (x^5 + 1/2x^4 - 1/2x - 1/2) = 1/4x^4 + 1/2x^2 + 1/4x - 1/4
  const GeneralPolynomial r = schur::mod_reduce(6, table3_poly());
  const GeneralPolynomial want({q(-1, 4), q(1, 4), q(1, 2), q(0), q(1, 4)}, Backend::exact);
  CHECK(r == want);
  // Below the degree the power is its own remainder.
  CHECK(schur::mod_reduce(3, table3_poly()) ==
        GeneralPolynomial::monomial(3, Backend::exact));
}

TEST_CASE("mod_reduce agrees with schoolbook long division") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> den_pick(0, 3);
  const long dens[] = {1, 2, 4, 8};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(trial % 6);
    std::vector<Scalar> tail;
    tail.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      tail.push_back(Scalar(Rational(num(rng), dens[den_pick(rng)])));
    }
    const MonicPolynomial p(tail);
    for (int power = 0; power <= n + 9; ++power) {
      CAPTURE(trial);
      CAPTURE(power);
      CHECK(schur::mod_reduce(power, p) == long_division_remainder(power, p));
    }
  }
}
