#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <string>

#include "schur/cases.hpp"
#include "schur/engine.hpp"
#include "schur/errors.hpp"
#include "schur/jury.hpp"
#include "schur/poly.hpp"
#include "schur/report.hpp"
#include "schur/roots.hpp"

using schur::Backend;
using schur::Certificate;
using schur::MonicPolynomial;
using schur::Rational;
using schur::Scalar;
using schur::Verdict;

namespace {

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

MonicPolynomial five_stage_poly() {
  return MonicPolynomial({q(-1, 2), q(-1, 2), q(0), q(0), q(1, 2)});
}

void check_roundtrip(const MonicPolynomial& p, const schur::AlgoConfig& cfg) {
  const Certificate cert = schur::run_algorithm(p, cfg);
  const std::string text = schur::certificate_json(p, cert);
  const schur::ParsedCertificate parsed = schur::certificate_from_json(text);

  CHECK(parsed.backend == p.backend());
  REQUIRE(static_cast<int>(parsed.tail.size()) == p.degree());
  for (int i = 0; i < p.degree(); ++i) CHECK(parsed.tail[static_cast<size_t>(i)] == p.a(i));

  CHECK(parsed.cert.verdict == cert.verdict);
  CHECK(parsed.cert.deciding_stage == cert.deciding_stage);
  CHECK(parsed.cert.checks.constant_inside == cert.checks.constant_inside);
  CHECK(parsed.cert.checks.at_plus_one == cert.checks.at_plus_one);
  CHECK(parsed.cert.checks.at_minus_one == cert.checks.at_minus_one);
  CHECK(parsed.cert.sign_pattern_exact == cert.sign_pattern_exact);
  CHECK(parsed.cert.config.max_stages == cert.config.max_stages);
  CHECK(parsed.cert.config.float_boundary_epsilon ==
        cert.config.float_boundary_epsilon);
  REQUIRE(parsed.cert.trace.size() == cert.trace.size());
  for (size_t i = 0; i < cert.trace.size(); ++i) {
    CHECK(parsed.cert.trace[i].stage == cert.trace[i].stage);
    CHECK(parsed.cert.trace[i].beta == cert.trace[i].beta);
    CHECK(parsed.cert.trace[i].tail_sum == cert.trace[i].tail_sum);
  }

  // A parsed certificate must replay: rerunning the engine on the
  // recovered input and config reproduces the recorded trace.
  const Certificate rerun =
      schur::run_algorithm(MonicPolynomial(parsed.tail), parsed.cert.config);
  CHECK(rerun.verdict == parsed.cert.verdict);
  CHECK(rerun.deciding_stage == parsed.cert.deciding_stage);
  REQUIRE(rerun.trace.size() == parsed.cert.trace.size());
  for (size_t i = 0; i < rerun.trace.size(); ++i) {
    CHECK(rerun.trace[i].tail_sum == parsed.cert.trace[i].tail_sum);
  }
}

}  // namespace

TEST_CASE("certificate json round-trips exactly") {
  check_roundtrip(five_stage_poly(), {});
  schur::AlgoConfig cfg;
  cfg.max_stages = 2;
  check_roundtrip(MonicPolynomial({q(1, 2), q(0), q(-1, 2)}), cfg);
  check_roundtrip(MonicPolynomial({q(1), q(-3)}), {});
}

TEST_CASE("certificate json round-trips floating runs") {
  check_roundtrip(MonicPolynomial({Scalar(0.25), Scalar(-0.25)}), {});
  schur::AlgoConfig wide;
  wide.float_boundary_epsilon = 0.6;
  check_roundtrip(MonicPolynomial({Scalar(0.5), Scalar(0.0), Scalar(-0.5)}), wide);
}

TEST_CASE("malformed certificates are rejected") {
  CHECK_THROWS_AS(schur::certificate_from_json("not json"), schur::invalid_input);
  CHECK_THROWS_AS(schur::certificate_from_json("{}"), schur::invalid_input);
  CHECK_THROWS_AS(schur::certificate_from_json("[1,2,3]"), schur::invalid_input);

  const MonicPolynomial p = five_stage_poly();
  const std::string good = schur::certificate_json(p, schur::run_algorithm(p));

  nlohmann::json broken = nlohmann::json::parse(good);
  broken["input"]["coefficients"].back() = "2";  // leading coefficient must be 1
  CHECK_THROWS_AS(schur::certificate_from_json(broken.dump()), schur::invalid_input);

  broken = nlohmann::json::parse(good);
  broken["input"]["coefficients"][0] = 0.5;  // number in an exact certificate
  CHECK_THROWS_AS(schur::certificate_from_json(broken.dump()), schur::invalid_input);

  broken = nlohmann::json::parse(good);
  broken.erase("trace");
  CHECK_THROWS_AS(schur::certificate_from_json(broken.dump()), schur::invalid_input);

  broken = nlohmann::json::parse(good);
  broken["verdict"] = "Sideways";
  CHECK_THROWS_AS(schur::certificate_from_json(broken.dump()), schur::invalid_input);
}

TEST_CASE("jury report serializes rows as fraction strings") {
  const MonicPolynomial p = five_stage_poly();
  const nlohmann::json j = nlohmann::json::parse(schur::jury_json(p, schur::jury_table(p)));
  CHECK(j.at("verdict") == "Stable");
  const auto& rows = j.at("rows");
  REQUIRE(rows.size() == 7);
  const std::vector<std::string> first = {"-1/2", "-1/2", "0", "0", "1/2", "1"};
  CHECK(rows.at(0).get<std::vector<std::string>>() == first);
  const std::vector<std::string> last = {"63/256", "3/32", "-3/256"};
  CHECK(rows.at(6).get<std::vector<std::string>>() == last);
  for (const auto& cond : j.at("row_conditions")) CHECK(cond == "Pass");
  CHECK(j.at("input").at("degree") == 5);
}

TEST_CASE("root report carries re, im and modulus per root") {
  const MonicPolynomial p({q(1, 2), q(-1)});  // conjugate pair, modulus sqrt(1/2)
  const schur::RootSet roots = schur::find_roots(p);
  const nlohmann::json j =
      nlohmann::json::parse(schur::roots_json(p, roots, schur::CircleClass::Inside));
  CHECK(j.at("class") == "Inside");
  REQUIRE(j.at("roots").size() == 2);
  for (const auto& r : j.at("roots")) {
    const double re = r.at("re").get<double>();
    const double im = r.at("im").get<double>();
    const double mod = r.at("modulus").get<double>();
    CHECK(std::abs(std::hypot(re, im) - mod) < 1e-12);
    CHECK(mod == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  }
  CHECK(j.at("max_modulus").get<double>() == doctest::Approx(std::sqrt(0.5)));
  CHECK(j.at("iterations").get<int>() >= 1);
  CHECK(j.at("residual").get<double>() <= 1e-10);
}

TEST_CASE("adjustment-model report pins the stage sums") {
  schur::CournotParams prm;
  prm.lambda = q(1, 2);
  prm.k = 2;
  prm.competitors = 3;
  const nlohmann::json j =
      nlohmann::json::parse(schur::cournot_json(schur::cournot_verify(prm)));
  CHECK(j.at("lambda") == "1/2");
  CHECK(j.at("k") == 2);
  CHECK(j.at("competitors") == 3);
  REQUIRE(j.at("certificates").size() == 2);
  CHECK(j.at("certificates").at(1).at("verdict") == "Certified");
  CHECK(j.at("stage1_sum") == "1");
  CHECK(j.at("stage_k_sum") == "3/4");
  CHECK(j.at("closed_form_stage_k") == "3/4");
  CHECK(j.at("stage1_sum_is_one") == true);
  CHECK(j.at("closed_form_matches") == true);
  CHECK(j.at("decided_within_k") == true);

  prm.competitors = 2;
  const nlohmann::json duo =
      nlohmann::json::parse(schur::cournot_json(schur::cournot_verify(prm)));
  CHECK(duo.at("stage1_sum").is_null());
  CHECK(duo.at("stage1_sum_is_one") == false);
}

TEST_CASE("population-model report mirrors the verdict") {
  schur::RickerParams prm;
  prm.r = q(1);
  prm.a = q(1);
  prm.b = q(1);
  const nlohmann::json ok =
      nlohmann::json::parse(schur::ricker_json(prm, schur::ricker_verdict(prm)));
  CHECK(ok.at("status") == "StableSufficient");
  CHECK(ok.at("stage") == 0);
  CHECK(ok.at("quadratic").at("verdict") == "Certified");
  CHECK(ok.at("quadratic").at("input").at("text") == "x^2");
  CHECK(ok.at("r") == "1");

  prm.r = q(3);
  const nlohmann::json no =
      nlohmann::json::parse(schur::ricker_json(prm, schur::ricker_verdict(prm)));
  CHECK(no.at("status") == "UnstableNecessary");
  CHECK(no.at("stage").is_null());
  CHECK(no.at("quadratic").is_null());
}
