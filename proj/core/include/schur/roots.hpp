#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "schur/poly.hpp"

namespace schur {

struct RootSet {
  // All degree-n roots with multiplicity, unordered. Real input keeps
  // nonreal roots in conjugate pairs up to iteration noise.
  std::vector<std::complex<double>> roots;
  double max_modulus = 0.0;
  // max |p(root)| scaled by 1/(1 + l1 norm).
  double residual = 0.0;
  int iterations = 0;
};

struct RootFinderOptions {
  int max_iterations = 400;
  // Convergence requires residual <= residual_target.
  double residual_target = 1e-10;
  // Rotates the initial-guess circle; identical seeds give identical
  // root orderings.
  unsigned long seed = 0;
};

enum class CircleClass { Inside, Outside, NearCircle };

[[nodiscard]] std::string_view circle_class_name(CircleClass c);

// Aberth-Ehrlich simultaneous iteration on binary64 values; exact inputs
// are converted once. Throws no_convergence when the residual target is
// not met within the iteration budget.
[[nodiscard]] RootSet find_roots(const MonicPolynomial& p, const RootFinderOptions& opt = {});

// Inside iff max_modulus < 1 - margin, Outside iff > 1 + margin, else
// NearCircle.
[[nodiscard]] CircleClass is_schur_numeric(const MonicPolynomial& p, double margin = 1e-7,
                                           const RootFinderOptions& opt = {});

}  // namespace schur
