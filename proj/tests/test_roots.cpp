#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "schur/errors.hpp"
#include "schur/poly.hpp"
#include "schur/roots.hpp"

using schur::Backend;
using schur::CircleClass;
using schur::MonicPolynomial;
using schur::Rational;
using schur::RootFinderOptions;
using schur::RootSet;
using schur::Scalar;

namespace {

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

// Expands prod (x - z_i) and compares against the input coefficients;
// an independent check that the returned set really is the root set.
double reconstruction_error(const MonicPolynomial& p, const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> coeffs{1.0};
  for (const std::complex<double>& z : roots) {
    std::vector<std::complex<double>> next(coeffs.size() + 1, 0.0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * z;
    }
    coeffs = std::move(next);
  }
  double worst = 0.0;
  for (size_t j = 0; j + 1 < coeffs.size(); ++j) {
    worst = std::max(worst, std::abs(coeffs[j] - std::complex<double>(p.a(static_cast<int>(j)).approx())));
  }
  return worst;
}

}  // namespace

TEST_CASE("degree one is solved directly") {
  const RootSet rs = schur::find_roots(MonicPolynomial({q(-3, 4)}));
  REQUIRE(rs.roots.size() == 1);
  CHECK(rs.roots[0] == std::complex<double>(0.75, 0.0));
  CHECK(rs.max_modulus == 0.75);
  CHECK(rs.residual == 0.0);
  CHECK(rs.iterations == 0);
}

TEST_CASE("double root at one half") {
  const RootSet rs = schur::find_roots(MonicPolynomial({q(1, 4), q(-1)}));
  REQUIRE(rs.roots.size() == 2);
  for (const std::complex<double>& z : rs.roots) {
    CHECK(std::abs(z - std::complex<double>(0.5, 0.0)) < 1e-4);
  }
  CHECK(rs.max_modulus == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(rs.residual <= 1e-10);
}

TEST_CASE("conjugate pair and reconstruction") {
  // x^2 - x + 1/2: roots (1 +- i)/2.
  const MonicPolynomial p({q(1, 2), q(-1)});
  const RootSet rs = schur::find_roots(p);
  CHECK(rs.max_modulus == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(reconstruction_error(p, rs.roots) < 1e-8);
}

TEST_CASE("random polynomials reconstruct from their roots") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> num(-12, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 9;  // up to degree 10
    std::vector<Scalar> tail;
    for (int j = 0; j < n; ++j) tail.push_back(Scalar(Rational(num(rng), 8)));
    const MonicPolynomial p(tail);
    CAPTURE(trial);
    const RootSet rs = schur::find_roots(p);
    REQUIRE(rs.roots.size() == static_cast<size_t>(n));
    CHECK(rs.residual <= 1e-10);
    CHECK(reconstruction_error(p, rs.roots) < 1e-8);
  }
}

TEST_CASE("identical seeds give identical runs") {
  const MonicPolynomial p({q(-1, 3), q(1, 4), q(0), q(-1, 2), q(1, 8)});
  RootFinderOptions a, b;
  a.seed = 7;
  b.seed = 7;
  const RootSet ra = schur::find_roots(p, a);
  const RootSet rb = schur::find_roots(p, b);
  CHECK(ra.roots == rb.roots);
  CHECK(ra.iterations == rb.iterations);

  // A different seed may order the roots differently but finds the same
  // set.
  RootFinderOptions c;
  c.seed = 12345;
  RootSet rc = schur::find_roots(p, c);
  REQUIRE(rc.roots.size() == ra.roots.size());
  for (const std::complex<double>& z : ra.roots) {
    double best = 1e9;
    for (const std::complex<double>& w : rc.roots) best = std::min(best, std::abs(z - w));
    CHECK(best < 1e-7);
  }
}

TEST_CASE("iteration budget is enforced") {
  RootFinderOptions opt;
  opt.max_iterations = 0;
  CHECK_THROWS_AS(schur::find_roots(MonicPolynomial({q(1, 2), q(-1)}), opt),
                  schur::no_convergence);
}

TEST_CASE("unit-circle classification") {
  CHECK(schur::is_schur_numeric(MonicPolynomial({q(1, 4), q(-1)})) == CircleClass::Inside);
  CHECK(schur::is_schur_numeric(MonicPolynomial({q(1), q(-3)})) == CircleClass::Outside);
  CHECK(schur::is_schur_numeric(MonicPolynomial({q(-1)})) == CircleClass::NearCircle);
  // Root at 1 - 1e-9 sits inside the default 1e-7 margin band.
  const MonicPolynomial hugging({Scalar(-(1.0 - 1e-9))});
  CHECK(schur::is_schur_numeric(hugging) == CircleClass::NearCircle);
  CHECK_THROWS_AS(schur::is_schur_numeric(MonicPolynomial({q(-1)}), 0.0), schur::invalid_input);
}

TEST_CASE("float backend input is accepted directly") {
  const MonicPolynomial p({Scalar(0.25), Scalar(-1.0)});
  const RootSet rs = schur::find_roots(p);
  CHECK(rs.max_modulus == doctest::Approx(0.5).epsilon(1e-4));
}
