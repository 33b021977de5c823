#include "schur/report.hpp"

#include <cstddef>
#include <string>

#include <json.hpp>

#include "schur/errors.hpp"
#include "schur/rational.hpp"

namespace schur {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view check_result_name(CheckResult r) {
  switch (r) {
    case CheckResult::Pass:
      return "Pass";
    case CheckResult::Fail:
      return "Fail";
    case CheckResult::Equality:
      return "Equality";
  }
  return "Fail";
}

CheckResult check_result_from_name(const std::string& name) {
  if (name == "Pass") return CheckResult::Pass;
  if (name == "Fail") return CheckResult::Fail;
  if (name == "Equality") return CheckResult::Equality;
  throw invalid_input("unknown check result: " + name);
}

ordered_json scalar_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.floating();
}

Scalar scalar_from_json(const ordered_json& j, Backend backend) {
  if (j.is_string()) {
    if (backend != Backend::exact) {
      throw invalid_input("fraction string in a floating-backend certificate");
    }
    return Scalar(Rational::parse(j.get<std::string>()));
  }
  if (j.is_number()) {
    if (backend != Backend::floating) {
      throw invalid_input("JSON number in an exact-backend certificate");
    }
    return Scalar(j.get<double>());
  }
  throw invalid_input("scalar must be a fraction string or a number");
}

ordered_json input_block(const MonicPolynomial& p) {
  ordered_json in;
  in["degree"] = p.degree();
  in["backend"] = std::string(backend_name(p.backend()));
  ordered_json coeffs = ordered_json::array();
  for (const Scalar& c : p.tail()) coeffs.push_back(scalar_json(c));
  coeffs.push_back(scalar_json(Scalar::one(p.backend())));
  in["coefficients"] = coeffs;
  in["text"] = p.str();
  return in;
}

ordered_json checks_block(const NecessaryChecks& checks) {
  ordered_json j;
  j["constant_inside"] = std::string(check_result_name(checks.constant_inside));
  j["at_plus_one"] = std::string(check_result_name(checks.at_plus_one));
  j["at_minus_one"] = std::string(check_result_name(checks.at_minus_one));
  return j;
}

ordered_json cert_block(const MonicPolynomial& p, const Certificate& cert) {
  ordered_json j;
  j["input"] = input_block(p);
  j["verdict"] = std::string(verdict_name(cert.verdict));
  if (cert.deciding_stage) {
    j["deciding_stage"] = *cert.deciding_stage;
  } else {
    j["deciding_stage"] = nullptr;
  }
  j["necessary_checks"] = checks_block(cert.checks);
  ordered_json passed = ordered_json::array();
  for (bool b : cert.checks.passed()) passed.push_back(b);
  j["necessary_checks_passed"] = passed;
  j["sign_pattern_exact"] = cert.sign_pattern_exact;
  j["max_stages"] = cert.config.max_stages;
  j["float_boundary_epsilon"] = cert.config.float_boundary_epsilon;
  ordered_json trace = ordered_json::array();
  for (const StageTrace& t : cert.trace) {
    ordered_json row;
    row["stage"] = t.stage;
    ordered_json beta = ordered_json::array();
    for (const Scalar& b : t.beta) beta.push_back(scalar_json(b));
    row["beta"] = beta;
    row["tail_sum"] = scalar_json(t.tail_sum);
    trace.push_back(row);
  }
  j["trace"] = trace;
  return j;
}

ordered_json parse_object(std::string_view text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw invalid_input("malformed JSON certificate");
  return j;
}

}  // namespace

std::string certificate_json(const MonicPolynomial& p, const Certificate& cert) {
  return cert_block(p, cert).dump(2);
}

ParsedCertificate certificate_from_json(std::string_view text) {
  const ordered_json j = parse_object(text);
  try {
    ParsedCertificate out;
    const ordered_json& in = j.at("input");
    out.backend = backend_from_name(in.at("backend").get<std::string>());
    const ordered_json& coeffs = in.at("coefficients");
    if (!coeffs.is_array() || coeffs.size() < 2) {
      throw invalid_input("coefficients must list the tail plus the leading 1");
    }
    const Scalar lead = scalar_from_json(coeffs.back(), out.backend);
    if ((lead - Scalar::one(out.backend)).sign() != 0) {
      throw invalid_input("leading coefficient must be 1");
    }
    for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
      out.tail.push_back(scalar_from_json(coeffs[i], out.backend));
    }
    if (static_cast<int>(out.tail.size()) != in.at("degree").get<int>()) {
      throw invalid_input("degree does not match the coefficient count");
    }

    out.cert.backend = out.backend;
    out.cert.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    if (j.at("deciding_stage").is_null()) {
      out.cert.deciding_stage.reset();
    } else {
      out.cert.deciding_stage = j.at("deciding_stage").get<int>();
    }
    const ordered_json& checks = j.at("necessary_checks");
    out.cert.checks.constant_inside =
        check_result_from_name(checks.at("constant_inside").get<std::string>());
    out.cert.checks.at_plus_one =
        check_result_from_name(checks.at("at_plus_one").get<std::string>());
    out.cert.checks.at_minus_one =
        check_result_from_name(checks.at("at_minus_one").get<std::string>());
    out.cert.sign_pattern_exact = j.at("sign_pattern_exact").get<bool>();
    out.cert.config.max_stages = j.at("max_stages").get<int>();
    out.cert.config.float_boundary_epsilon = j.at("float_boundary_epsilon").get<double>();
    for (const ordered_json& row : j.at("trace")) {
      StageTrace t;
      t.stage = row.at("stage").get<int>();
      for (const ordered_json& b : row.at("beta")) {
        t.beta.push_back(scalar_from_json(b, out.backend));
      }
      t.tail_sum = scalar_from_json(row.at("tail_sum"), out.backend);
      out.cert.trace.push_back(std::move(t));
    }
    return out;
  } catch (const ordered_json::exception& e) {
    throw invalid_input(std::string("malformed JSON certificate: ") + e.what());
  }
}

std::string jury_json(const MonicPolynomial& p, const JuryTable& table) {
  ordered_json j;
  j["input"] = input_block(p);
  j["verdict"] = std::string(jury_verdict_name(table.verdict));
  j["necessary_checks"] = checks_block(table.checks);
  ordered_json rows = ordered_json::array();
  for (const std::vector<Scalar>& row : table.rows) {
    ordered_json r = ordered_json::array();
    for (const Scalar& v : row) r.push_back(scalar_json(v));
    rows.push_back(r);
  }
  j["rows"] = rows;
  ordered_json conditions = ordered_json::array();
  for (CheckResult c : table.row_conditions) {
    conditions.push_back(std::string(check_result_name(c)));
  }
  j["row_conditions"] = conditions;
  return j.dump(2);
}

std::string roots_json(const MonicPolynomial& p, const RootSet& roots, CircleClass cls) {
  ordered_json j;
  j["input"] = input_block(p);
  ordered_json arr = ordered_json::array();
  for (const std::complex<double>& z : roots.roots) {
    ordered_json r;
    r["re"] = z.real();
    r["im"] = z.imag();
    r["modulus"] = std::abs(z);
    arr.push_back(r);
  }
  j["roots"] = arr;
  j["max_modulus"] = roots.max_modulus;
  j["residual"] = roots.residual;
  j["iterations"] = roots.iterations;
  j["class"] = std::string(circle_class_name(cls));
  return j.dump(2);
}

std::string cournot_json(const CournotReport& report) {
  ordered_json j;
  j["lambda"] = scalar_json(report.params.lambda);
  j["k"] = report.params.k;
  j["competitors"] = report.params.competitors;
  ordered_json certs = ordered_json::array();
  for (size_t i = 0; i < report.certificates.size(); ++i) {
    certs.push_back(cert_block(report.polys[i], report.certificates[i]));
  }
  j["certificates"] = certs;
  const auto opt_scalar = [](const std::optional<Scalar>& s) -> ordered_json {
    if (s) return scalar_json(*s);
    return nullptr;
  };
  j["stage1_sum"] = opt_scalar(report.stage1_sum);
  j["stage_k_sum"] = opt_scalar(report.stage_k_sum);
  j["closed_form_stage_k"] = opt_scalar(report.closed_form_stage_k);
  j["stage1_sum_is_one"] = report.stage1_sum_is_one;
  j["closed_form_matches"] = report.closed_form_matches;
  j["decided_within_k"] = report.decided_within_k;
  return j.dump(2);
}

std::string ricker_json(const RickerParams& prm, const RickerVerdict& verdict) {
  ordered_json j;
  j["r"] = scalar_json(prm.r);
  j["a"] = scalar_json(prm.a);
  j["b"] = scalar_json(prm.b);
  j["status"] = std::string(ricker_status_name(verdict.status));
  if (verdict.stage) {
    j["stage"] = *verdict.stage;
  } else {
    j["stage"] = nullptr;
  }
  if (verdict.quadratic) {
    j["quadratic"] = cert_block(ricker_quadratic(prm), *verdict.quadratic);
  } else {
    j["quadratic"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace schur
