#pragma once

#include <functional>
#include <string>
#include <vector>

#include "theta2/expr.hpp"

namespace theta2 {

/// Outcome of one identity check. `anchor` is a content-descriptive tag of
/// the identity. Low confidence marks runs below the identity's recommended
/// order; conditional items never affect exit codes.
struct IdentityReport {
  std::string id;
  std::string anchor;
  int order = 0;
  bool equal = false;
  bool conditional = false;
  bool low_confidence = false;
  bool pi_consistent = true;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  int order = 0;
  std::vector<IdentityReport> items;
  double wall_seconds = 0;

  bool all_passed() const;  // ignores conditional failures
  size_t failures() const;
};

const std::vector<std::string>& verify_suite_names();
bool is_verify_suite(const std::string& name);

/// Runs a suite at the requested order (table fixtures pin their own order).
/// Items run in a bounded worker pool when threads > 1; report order is the
/// registration order regardless of completion order.
SuiteReport run_suite(const std::string& name, int order, int threads = 1);

std::string suite_report_json(const SuiteReport& r);
std::string suite_report_text(const SuiteReport& r);

/// Compare stored expansions: lhs = c * (pi i)^{declared_pi} * rhs in the
/// analytic normalization. The zeta part of the pi-power bookkeeping is
/// always applied; a mismatch between declared_pi and the bookkept exponent
/// difference is reported, not absorbed.
bool check_pi_scaled(FormExpr lhs, FormExpr rhs, const Cyc8& c, int declared_pi,
                     int order, IdentityReport& r);

}  // namespace theta2
