#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schur/engine.hpp"
#include "schur/poly.hpp"

namespace schur {

enum class JuryVerdict { Stable, Unstable, Singular };

[[nodiscard]] std::string_view jury_verdict_name(JuryVerdict v);

// Classical Jury array in the doubled-row layout: the coefficient row
// ascending from x^0 and its reversal, then each derived level and its
// reversal, ending with the 3-entry level printed once. Derived rows use
// the fraction-free rule b_k = r_0 r_k - r_l r_{l-k}.
struct JuryTable {
  std::vector<std::vector<Scalar>> rows;
  JuryVerdict verdict = JuryVerdict::Singular;
  // |p(0)| < 1, p(1) > 0, (-1)^n p(-1) > 0.
  NecessaryChecks checks;
  // |first| > |last| for each derived level, in construction order.
  std::vector<CheckResult> row_conditions;
};

// Exact backend only; floating input throws backend_mismatch.
// Verdict precedence: a strictly failed necessary check proves a root
// strictly outside the disk on its own, so it gives Unstable no matter
// what the array does. Otherwise an equality in the necessary checks
// gives Singular, since rows below a marginal condition stop counting
// roots. Otherwise the derived-row conditions are read in construction
// order and the first non-strict one decides: Fail gives Unstable,
// Equality gives Singular (this covers the zero-pivot case: a derived
// row's first entry can only vanish when the previous level's condition
// held with equality). All strict passes give Stable.
[[nodiscard]] JuryTable jury_table(const MonicPolynomial& p);

[[nodiscard]] JuryVerdict jury_verdict(const MonicPolynomial& p);

// Aligned text table, one printed row per line, entries ascending x^0..
[[nodiscard]] std::string jury_table_text(const JuryTable& t);

// One printed row per line, exact fraction entries, comma separated.
[[nodiscard]] std::string jury_table_csv(const JuryTable& t);

}  // namespace schur
