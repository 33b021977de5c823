#include "schur/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "schur/errors.hpp"

namespace schur {

namespace {

using cplx = std::complex<double>;

// Horner evaluation of the monic polynomial and its derivative.
void eval_with_derivative(const std::vector<double>& tail, cplx z, cplx& value, cplx& deriv) {
  const int n = static_cast<int>(tail.size());
  cplx p = 1.0;
  cplx dp = 0.0;
  for (int j = n - 1; j >= 0; --j) {
    dp = dp * z + p;
    p = p * z + tail[static_cast<size_t>(j)];
  }
  value = p;
  deriv = dp;
}

double max_abs_value(const std::vector<double>& tail, const std::vector<cplx>& z) {
  double worst = 0.0;
  for (const cplx& zi : z) {
    cplx v, d;
    eval_with_derivative(tail, zi, v, d);
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace

std::string_view circle_class_name(CircleClass c) {
  switch (c) {
    case CircleClass::Inside:
      return "Inside";
    case CircleClass::Outside:
      return "Outside";
    case CircleClass::NearCircle:
      return "NearCircle";
  }
  return "NearCircle";
}

RootSet find_roots(const MonicPolynomial& p, const RootFinderOptions& opt) {
  const int n = p.degree();
  std::vector<double> tail;
  tail.reserve(static_cast<size_t>(n));
  for (const Scalar& c : p.tail()) tail.push_back(c.approx());

  double tail_sum = 0.0;
  for (double c : tail) tail_sum += std::fabs(c);
  const double scale = 1.0 + (1.0 + tail_sum);

  RootSet out;
  if (n == 1) {
    out.roots.push_back(cplx(-tail[0], 0.0));
    out.max_modulus = std::fabs(tail[0]);
    out.residual = 0.0;
    return out;
  }

  // Initial guesses sit on a circle covering the root bound, at even
  // angles with an irrational offset so no guess lands on a symmetry
  // axis of the root set.
  const double radius = std::max(1.0, tail_sum);
  const double offset =
      0.41421356237309515 + 1.0e-4 * static_cast<double>(opt.seed % 9973UL);
  std::vector<cplx> z;
  z.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * (k + 0.5) / n + offset;
    z.push_back(radius * cplx(std::cos(angle), std::sin(angle)));
  }

  const double target = opt.residual_target * scale;
  int sweeps = 0;
  double residual = max_abs_value(tail, z);
  while (residual > target && sweeps < opt.max_iterations) {
    for (int i = 0; i < n; ++i) {
      cplx v, d;
      eval_with_derivative(tail, z[static_cast<size_t>(i)], v, d);
      if (v == cplx(0.0, 0.0)) continue;
      if (d == cplx(0.0, 0.0)) {
        // Critical point hit exactly; nudge off it.
        z[static_cast<size_t>(i)] += cplx(1e-8, 1e-8);
        continue;
      }
      const cplx w = v / d;
      cplx repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const cplx diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
        if (diff == cplx(0.0, 0.0)) continue;
        repulsion += 1.0 / diff;
      }
      const cplx denom = 1.0 - w * repulsion;
      const cplx step = denom == cplx(0.0, 0.0) ? w : w / denom;
      z[static_cast<size_t>(i)] -= step;
    }
    ++sweeps;
    residual = max_abs_value(tail, z);
  }

  if (residual > target) {
    throw no_convergence("root finder residual " + std::to_string(residual) +
                         " above target after " + std::to_string(sweeps) + " sweeps");
  }

  out.roots = std::move(z);
  out.iterations = sweeps;
  out.residual = residual / scale;
  for (const cplx& r : out.roots) out.max_modulus = std::max(out.max_modulus, std::abs(r));
  return out;
}

CircleClass is_schur_numeric(const MonicPolynomial& p, double margin,
                             const RootFinderOptions& opt) {
  if (margin <= 0) throw invalid_input("margin must be positive");
  const RootSet rs = find_roots(p, opt);
  if (rs.max_modulus < 1.0 - margin) return CircleClass::Inside;
  if (rs.max_modulus > 1.0 + margin) return CircleClass::Outside;
  return CircleClass::NearCircle;
}

}  // namespace schur
