#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schur/poly.hpp"

namespace schur {

enum class Verdict { Certified, DefinitelyUnstable, Inconclusive, Boundary };

[[nodiscard]] std::string_view verdict_name(Verdict v);
[[nodiscard]] Verdict verdict_from_name(std::string_view name);
// Process exit code contract: 0 Certified, 1 DefinitelyUnstable,
// 2 Inconclusive, 3 Boundary.
[[nodiscard]] int verdict_exit_code(Verdict v);

enum class CheckResult { Pass, Fail, Equality };

// The three classical necessary conditions |p(0)| < 1, p(1) > 0 and
// (-1)^n p(-1) > 0. Equality marks a boundary case: the strict
// inequality did not fail, but the polynomial cannot be strictly stable.
struct NecessaryChecks {
  CheckResult constant_inside = CheckResult::Pass;
  CheckResult at_plus_one = CheckResult::Pass;
  CheckResult at_minus_one = CheckResult::Pass;

  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] bool any_fail() const;
  [[nodiscard]] bool any_equality() const;
  [[nodiscard]] std::array<bool, 3> passed() const;
};

// Stage i of the iterated substitution. The stage polynomial is
// Q_i(x) = x^{n+stage} + sum_m beta[m] x^m with the whole tail held in
// the bottom n slots; beta at stage 0 is the input tail a_0..a_{n-1}.
struct StageTrace {
  int stage = 0;
  std::vector<Scalar> beta;
  Scalar tail_sum;
};

struct AlgoConfig {
  int max_stages = 64;
  // Float backend only: a tail sum within this distance of 1 at the
  // would-be deciding stage yields Boundary instead of a verdict.
  double float_boundary_epsilon = 1e-9;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> deciding_stage;
  std::vector<StageTrace> trace;
  NecessaryChecks checks;
  bool sign_pattern_exact = false;
  Backend backend = Backend::exact;
  AlgoConfig config;
};

// True iff 1 + sum |a_j| < 2 (strict), which certifies Schur stability.
[[nodiscard]] bool check_l1(const MonicPolynomial& p);

[[nodiscard]] NecessaryChecks necessary_checks(const MonicPolynomial& p);

// True iff the coefficient signs match pattern (i), all a_k < 0, or
// pattern (ii), (-1)^{k+n} a_k < 0 for every k. Under either pattern the
// l1 test is necessary as well as sufficient. Zero coefficients satisfy
// neither (the patterns are strict).
[[nodiscard]] bool sign_pattern_exact(const MonicPolynomial& p);

[[nodiscard]] StageTrace initial_stage(const MonicPolynomial& p);

// One substitution step via the tail recurrence
// Q_{i+1}(x) = x*Q_i(x) - beta[n-1]*p(x).
[[nodiscard]] StageTrace iterate_stage(const StageTrace& prev, const MonicPolynomial& p);

// One-shot substitution jumping the gap j to the first nonzero
// coefficient from the top; equals j-fold iterate_stage, the first j-1
// steps of which are pure shifts. All-zero tails report stage 0, which
// is already certified.
[[nodiscard]] StageTrace substitute_general(const MonicPolynomial& p);

[[nodiscard]] Certificate run_algorithm(const MonicPolynomial& p, const AlgoConfig& cfg = {});

// Degree-2 closed recurrence s_j = s_0 s_{j-1} + t_{j-1},
// t_j = t_0 s_{j-1} with s_0 = alpha, t_0 = -beta, for x^2 - alpha x + beta.
[[nodiscard]] std::pair<Scalar, Scalar> degree2_st(const Scalar& alpha, const Scalar& beta,
                                                   int j);

// "x^{n+stage} + ..." display form of a stage polynomial.
[[nodiscard]] std::string render_stage(const StageTrace& t, int degree,
                                       std::string_view var = "x");

}  // namespace schur
