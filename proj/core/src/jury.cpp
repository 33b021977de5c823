#include "schur/jury.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace schur {

namespace {

CheckResult compare_first_last(const std::vector<Scalar>& row) {
  const Scalar first = row.front().abs();
  const Scalar last = row.back().abs();
  if (first > last) return CheckResult::Pass;
  if (first == last) return CheckResult::Equality;
  return CheckResult::Fail;
}

std::vector<Scalar> derive_row(const std::vector<Scalar>& r) {
  const size_t l = r.size() - 1;
  std::vector<Scalar> next;
  next.reserve(l);
  for (size_t k = 0; k < l; ++k) {
    next.push_back(r[0] * r[k] - r[l] * r[l - k]);
  }
  return next;
}

}  // namespace

std::string_view jury_verdict_name(JuryVerdict v) {
  switch (v) {
    case JuryVerdict::Stable:
      return "Stable";
    case JuryVerdict::Unstable:
      return "Unstable";
    case JuryVerdict::Singular:
      return "Singular";
  }
  return "Singular";
}

JuryTable jury_table(const MonicPolynomial& p) {
  if (p.backend() != Backend::exact) {
    throw backend_mismatch("jury_table requires the exact backend");
  }
  JuryTable out;
  out.checks = necessary_checks(p);

  std::vector<Scalar> cur = p.tail();
  cur.push_back(Scalar::one(Backend::exact));

  while (true) {
    const bool last_level = cur.size() <= 3;
    out.rows.push_back(cur);
    if (!last_level) {
      std::vector<Scalar> reversed(cur.rbegin(), cur.rend());
      out.rows.push_back(std::move(reversed));
    }
    if (last_level) break;
    cur = derive_row(cur);
    out.row_conditions.push_back(compare_first_last(cur));
  }

  if (out.checks.any_fail()) {
    out.verdict = JuryVerdict::Unstable;
  } else if (out.checks.any_equality()) {
    out.verdict = JuryVerdict::Singular;
  } else {
    out.verdict = JuryVerdict::Stable;
    for (const CheckResult c : out.row_conditions) {
      if (c == CheckResult::Pass) continue;
      out.verdict =
          c == CheckResult::Fail ? JuryVerdict::Unstable : JuryVerdict::Singular;
      break;
    }
  }
  return out;
}

JuryVerdict jury_verdict(const MonicPolynomial& p) { return jury_table(p).verdict; }

std::string jury_table_text(const JuryTable& t) {
  const size_t max_len = t.rows.empty() ? 0 : t.rows.front().size();
  std::vector<size_t> widths(max_len, 0);
  for (size_t i = 0; i < max_len; ++i) {
    widths[i] = ("x^" + std::to_string(i)).size();
  }
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].str().size());
    }
  }
  std::ostringstream os;
  os << "step |";
  for (size_t i = 0; i < max_len; ++i) {
    const std::string head = "x^" + std::to_string(i);
    os << ' ' << head << std::string(widths[i] - head.size(), ' ');
  }
  os << '\n';
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const std::string num = std::to_string(r + 1);
    os << std::string(num.size() < 4 ? 4 - num.size() : 0, ' ') << num << " |";
    for (size_t i = 0; i < t.rows[r].size(); ++i) {
      const std::string v = t.rows[r][i].str();
      os << ' ' << v << std::string(widths[i] - v.size(), ' ');
    }
    os << '\n';
  }
  os << "verdict: " << jury_verdict_name(t.verdict) << '\n';
  return os.str();
}

std::string jury_table_csv(const JuryTable& t) {
  std::ostringstream os;
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ',';
      os << row[i].str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace schur
