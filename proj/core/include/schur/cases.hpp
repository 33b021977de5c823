#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "schur/engine.hpp"
#include "schur/poly.hpp"

namespace schur {

// Cournot adjustment with lag k and two or three competitors. The
// characteristic polynomials share the head x^{k+1} - (1-lambda)x^k and
// differ only in the constant term.
struct CournotParams {
  Scalar lambda;
  int k = 1;
  int competitors = 2;
};

// [p1, p2] for two competitors, [p1, p3] for three, where
// p1 = x^{k+1} - (1-lambda)x^k - lambda/2,
// p2 = x^{k+1} - (1-lambda)x^k + lambda/2,
// p3 = x^{k+1} - (1-lambda)x^k + lambda.
// Requires 0 < lambda < 1, k >= 1, competitors in {2, 3}.
[[nodiscard]] std::vector<MonicPolynomial> cournot_polys(const CournotParams& prm);

struct CournotReport {
  CournotParams params;
  std::vector<MonicPolynomial> polys;
  // One certificate per polynomial, same order as polys.
  std::vector<Certificate> certificates;
  // The p3 fields are set only for three competitors.
  std::optional<Scalar> stage1_sum;
  std::optional<Scalar> stage_k_sum;
  // |(1-lambda)^{k+1} - lambda| + lambda * sum_{j=1..k} (1-lambda)^j,
  // evaluated in exact rationals.
  std::optional<Scalar> closed_form_stage_k;
  // Exact identity (1-lambda)^2 + lambda + lambda(1-lambda) = 1 holds at
  // stage 1 whenever k >= 2; with k = 1 the same stage mixes in the
  // constant term and the sum drops below 1.
  bool stage1_sum_is_one = false;
  bool closed_form_matches = false;
  // Every polynomial certified at some stage <= k.
  bool decided_within_k = false;
};

// Runs the engine on each Cournot polynomial and checks the closed-form
// stage sums. Exact backend only; requires cfg.max_stages >= k so the
// trace reaches stage k.
[[nodiscard]] CournotReport cournot_verify(const CournotParams& prm, const AlgoConfig& cfg = {});

// Ricker-type three-species competition near the coexistence fixed
// point; (r, a, b) are the primitive inputs and t = r/a is always
// recomputed from them.
struct RickerParams {
  Scalar r;
  Scalar a;
  Scalar b;
};

// The quadratic factor x^2 - (r+2-3t)x + (1+(a-3)t+bt^2) of the
// characteristic polynomial, with t = r/a. Requires a != 0.
[[nodiscard]] MonicPolynomial ricker_quadratic(const RickerParams& prm);

enum class RickerStatus { StableSufficient, Unknown, UnstableNecessary };

[[nodiscard]] std::string_view ricker_status_name(RickerStatus s);

struct RickerVerdict {
  RickerStatus status = RickerStatus::Unknown;
  // Certifying stage of the quadratic factor, StableSufficient only.
  std::optional<int> stage;
  // Engine certificate for the quadratic factor; absent when the factor
  // was never run (r outside (0,2)).
  std::optional<Certificate> quadratic;
};

// UnstableNecessary when r is outside (0,2) (the linear factor
// contributes the eigenvalue 1-r); otherwise StableSufficient(i) when
// the quadratic factor certifies at stage i, else Unknown. A definite
// engine verdict against the quadratic factor still reports Unknown:
// only the certification direction is conclusive for the full model.
[[nodiscard]] RickerVerdict ricker_verdict(const RickerParams& prm, const AlgoConfig& cfg = {});

}  // namespace schur
