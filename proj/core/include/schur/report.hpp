#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schur/cases.hpp"
#include "schur/engine.hpp"
#include "schur/jury.hpp"
#include "schur/poly.hpp"
#include "schur/roots.hpp"

namespace schur {

// JSON certificate: input {degree, backend, coefficients ascending with
// the leading 1}, verdict, deciding_stage (null when absent),
// necessary_checks_passed, sign_pattern_exact, max_stages and the full
// stage trace. Exact scalars serialize as fraction strings, floating
// ones as JSON numbers.
[[nodiscard]] std::string certificate_json(const MonicPolynomial& p, const Certificate& cert);

struct ParsedCertificate {
  std::vector<Scalar> tail;
  Backend backend = Backend::exact;
  Certificate cert;
};

// Inverse of certificate_json; throws invalid_input on malformed text.
[[nodiscard]] ParsedCertificate certificate_from_json(std::string_view text);

[[nodiscard]] std::string jury_json(const MonicPolynomial& p, const JuryTable& table);

// Roots as an array of {re, im, modulus} plus the residual and class.
[[nodiscard]] std::string roots_json(const MonicPolynomial& p, const RootSet& roots,
                                     CircleClass cls);

[[nodiscard]] std::string cournot_json(const CournotReport& report);

[[nodiscard]] std::string ricker_json(const RickerParams& prm, const RickerVerdict& verdict);

}  // namespace schur
