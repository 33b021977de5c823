#include <doctest.h>

#include <string>
#include <vector>

#include "schur/errors.hpp"
#include "schur/jury.hpp"
#include "schur/region.hpp"

using schur::Backend;
using schur::JuryVerdict;
using schur::MonicPolynomial;
using schur::Rational;
using schur::Scalar;
using schur::Truth;

namespace {

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

MonicPolynomial table2_poly() {
  return MonicPolynomial({q(-1, 2), q(-1, 2), q(0), q(0), q(1, 2)});
}

std::vector<Rational> exact_row(const std::vector<Scalar>& row) {
  std::vector<Rational> out;
  for (const Scalar& v : row) out.push_back(v.exact());
  return out;
}

}  // namespace

TEST_CASE("jury array of the degree-5 example") {
  const schur::JuryTable t = schur::jury_table(table2_poly());
  REQUIRE(t.rows.size() == 7);
  // Coefficient row ascending from x^0, then its reversal.
  CHECK(exact_row(t.rows[0]) ==
        std::vector<Rational>{{-1, 2}, {-1, 2}, {0, 1}, {0, 1}, {1, 2}, {1, 1}});
  CHECK(exact_row(t.rows[1]) ==
        std::vector<Rational>{{1, 1}, {1, 2}, {0, 1}, {0, 1}, {-1, 2}, {-1, 2}});
  CHECK(exact_row(t.rows[2]) == std::vector<Rational>{{-3, 4}, {-1, 4}, {0, 1}, {0, 1}, {1, 4}});
  CHECK(exact_row(t.rows[3]) == std::vector<Rational>{{1, 4}, {0, 1}, {0, 1}, {-1, 4}, {-3, 4}});
  CHECK(exact_row(t.rows[4]) == std::vector<Rational>{{1, 2}, {3, 16}, {0, 1}, {1, 16}});
  CHECK(exact_row(t.rows[5]) == std::vector<Rational>{{1, 16}, {0, 1}, {3, 16}, {1, 2}});
  // Final three-entry level prints once.
  CHECK(exact_row(t.rows[6]) == std::vector<Rational>{{63, 256}, {3, 32}, {-3, 256}});
  CHECK(t.verdict == JuryVerdict::Stable);
  CHECK(t.checks.all_pass());
  for (const schur::CheckResult c : t.row_conditions) {
    CHECK(c == schur::CheckResult::Pass);
  }
}

TEST_CASE("jury verdicts on simple cases") {
  CHECK(schur::jury_verdict(MonicPolynomial({q(1), q(-3)})) == JuryVerdict::Unstable);
  CHECK(schur::jury_verdict(MonicPolynomial({q(-1)})) == JuryVerdict::Singular);
  CHECK(schur::jury_verdict(MonicPolynomial({q(-1), q(0)})) == JuryVerdict::Singular);
  CHECK(schur::jury_verdict(MonicPolynomial({q(0), q(0)})) == JuryVerdict::Stable);
  CHECK(schur::jury_verdict(MonicPolynomial({q(1, 2)})) == JuryVerdict::Stable);
  CHECK(schur::jury_verdict(table2_poly()) == schur::jury_table(table2_poly()).verdict);
}

TEST_CASE("jury requires the exact backend") {
  CHECK_THROWS_AS(schur::jury_table(MonicPolynomial({Scalar(0.5), Scalar(-0.5)})),
                  schur::backend_mismatch);
}

TEST_CASE("jury agrees with the quadratic locus on a rational grid") {
  // a0, a1 over [-2, 2] in steps of 1/4.
  for (long i = -8; i <= 8; ++i) {
    for (long j = -8; j <= 8; ++j) {
      const Rational a0(i, 4);
      const Rational a1(j, 4);
      CAPTURE(i);
      CAPTURE(j);
      const Truth truth = schur::c2_truth(Scalar(a0), Scalar(a1));
      const JuryVerdict jv = schur::jury_verdict(MonicPolynomial({Scalar(a0), Scalar(a1)}));
      if (truth == Truth::Stable) {
        CHECK(jv == JuryVerdict::Stable);
      } else {
        CHECK(jv != JuryVerdict::Stable);
        if (truth == Truth::Boundary) CHECK(jv == JuryVerdict::Singular);
      }
    }
  }
}

TEST_CASE("jury agrees with the cubic locus on a rational grid") {
  // a0, a1, a2 over [-3/2, 3/2] in steps of 1/2.
  for (long i = -3; i <= 3; ++i) {
    for (long j = -3; j <= 3; ++j) {
      for (long k = -3; k <= 3; ++k) {
        const Rational a0(i, 2);
        const Rational a1(j, 2);
        const Rational a2(k, 2);
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(k);
        const Truth truth = schur::c3_truth(Scalar(a0), Scalar(a1), Scalar(a2));
        const JuryVerdict jv =
            schur::jury_verdict(MonicPolynomial({Scalar(a0), Scalar(a1), Scalar(a2)}));
        if (truth == Truth::Stable) {
          CHECK(jv == JuryVerdict::Stable);
        } else {
          CHECK(jv != JuryVerdict::Stable);
          if (truth == Truth::Boundary) CHECK(jv == JuryVerdict::Singular);
        }
      }
    }
  }
}

TEST_CASE("text and csv renderings carry the verdict and the rows") {
  const schur::JuryTable t = schur::jury_table(table2_poly());
  const std::string text = schur::jury_table_text(t);
  CHECK(text.find("verdict: Stable") != std::string::npos);
  CHECK(text.find("63/256") != std::string::npos);
  const std::string csv = schur::jury_table_csv(t);
  CHECK(csv.find("-1/2,-1/2,0,0,1/2,1") != std::string::npos);
  CHECK(csv.find("63/256,3/32,-3/256") != std::string::npos);
}
