#include "schur/cases.hpp"

#include <cstddef>
#include <string>

#include "schur/errors.hpp"
#include "schur/rational.hpp"

namespace schur {

namespace {

void require_cournot(const CournotParams& prm) {
  const Scalar one = Scalar::one(prm.lambda.backend());
  if (prm.lambda.sign() <= 0 || (one - prm.lambda).sign() <= 0) {
    throw invalid_input("lambda must lie strictly between 0 and 1");
  }
  if (prm.k < 1) throw invalid_input("lag k must be >= 1");
  if (prm.competitors != 2 && prm.competitors != 3) {
    throw invalid_input("competitor count must be 2 or 3");
  }
}

MonicPolynomial lagged_poly(const Scalar& lambda, int k, const Scalar& constant) {
  const Backend b = lambda.backend();
  const Scalar one = Scalar::one(b);
  std::vector<Scalar> tail(static_cast<size_t>(k) + 1, Scalar::zero(b));
  tail[0] = constant;
  tail[static_cast<size_t>(k)] = -(one - lambda);
  return MonicPolynomial(tail);
}

}  // namespace

std::vector<MonicPolynomial> cournot_polys(const CournotParams& prm) {
  require_cournot(prm);
  const Scalar one = Scalar::one(prm.lambda.backend());
  const Scalar half_lambda = prm.lambda / (one + one);
  std::vector<MonicPolynomial> polys;
  polys.push_back(lagged_poly(prm.lambda, prm.k, -half_lambda));
  if (prm.competitors == 2) {
    polys.push_back(lagged_poly(prm.lambda, prm.k, half_lambda));
  } else {
    polys.push_back(lagged_poly(prm.lambda, prm.k, prm.lambda));
  }
  return polys;
}

CournotReport cournot_verify(const CournotParams& prm, const AlgoConfig& cfg) {
  require_cournot(prm);
  if (prm.lambda.backend() != Backend::exact) {
    throw backend_mismatch("cournot_verify checks exact identities; lambda must be exact");
  }
  if (cfg.max_stages < prm.k) {
    throw invalid_input("max_stages must be >= k to reach the deciding stage");
  }

  CournotReport report;
  report.params = prm;
  report.polys = cournot_polys(prm);
  for (const MonicPolynomial& p : report.polys) {
    report.certificates.push_back(run_algorithm(p, cfg));
  }

  report.decided_within_k = true;
  for (const Certificate& cert : report.certificates) {
    if (cert.verdict != Verdict::Certified || *cert.deciding_stage > prm.k) {
      report.decided_within_k = false;
    }
  }

  if (prm.competitors == 3) {
    const Certificate& cert = report.certificates.back();
    const auto stage_sum = [&cert](int stage) -> std::optional<Scalar> {
      if (stage < static_cast<int>(cert.trace.size())) {
        return cert.trace[static_cast<size_t>(stage)].tail_sum;
      }
      return std::nullopt;
    };
    report.stage1_sum = stage_sum(1);
    report.stage_k_sum = stage_sum(prm.k);

    const Rational lam = prm.lambda.exact();
    const Rational om = Rational(1) - lam;
    Rational geometric(0);
    for (int j = 1; j <= prm.k; ++j) geometric += pow(om, static_cast<unsigned>(j));
    const Rational closed =
        abs(pow(om, static_cast<unsigned>(prm.k) + 1) - lam) + lam * geometric;
    report.closed_form_stage_k = Scalar(closed);

    if (report.stage1_sum) {
      report.stage1_sum_is_one = report.stage1_sum->exact() == Rational(1);
    }
    if (report.stage_k_sum) {
      report.closed_form_matches = report.stage_k_sum->exact() == closed;
    }
  }
  return report;
}

MonicPolynomial ricker_quadratic(const RickerParams& prm) {
  if (prm.a.is_zero()) throw invalid_input("a must be nonzero (t = r/a)");
  const Backend bk = prm.r.backend();
  const Scalar one = Scalar::one(bk);
  const Scalar two = one + one;
  const Scalar three = two + one;
  const Scalar t = prm.r / prm.a;
  const Scalar a1 = -(prm.r + two - three * t);
  const Scalar a0 = one + (prm.a - three) * t + prm.b * t * t;
  return MonicPolynomial({a0, a1});
}

std::string_view ricker_status_name(RickerStatus s) {
  switch (s) {
    case RickerStatus::StableSufficient:
      return "StableSufficient";
    case RickerStatus::Unknown:
      return "Unknown";
    case RickerStatus::UnstableNecessary:
      return "UnstableNecessary";
  }
  return "Unknown";
}

RickerVerdict ricker_verdict(const RickerParams& prm, const AlgoConfig& cfg) {
  if (prm.a.is_zero()) throw invalid_input("a must be nonzero (t = r/a)");
  RickerVerdict out;
  const Scalar one = Scalar::one(prm.r.backend());
  const Scalar two = one + one;
  if (prm.r.sign() <= 0 || (two - prm.r).sign() <= 0) {
    out.status = RickerStatus::UnstableNecessary;
    return out;
  }
  const Certificate cert = run_algorithm(ricker_quadratic(prm), cfg);
  out.quadratic = cert;
  if (cert.verdict == Verdict::Certified) {
    out.status = RickerStatus::StableSufficient;
    out.stage = cert.deciding_stage;
  } else {
    out.status = RickerStatus::Unknown;
  }
  return out;
}

}  // namespace schur
