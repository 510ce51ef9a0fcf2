#pragma once

// Inequality checks that report how much room they had.
//
// A strict check `lhs < rhs` passes only when the relative margin
// (rhs - lhs) / |rhs| exceeds a threshold (default 2^-64), so a pass can never
// be an artifact of rounding at the working precision.

#include <string>
#include <vector>

#include "cheese/real.hpp"

namespace cheese {

enum class Outcome { pass, fail, truncated_only };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::truncated_only: return "truncated-only";
  }
  return "?";
}

struct Check {
  std::string name;
  bool passed = false;
  Real margin;  // relative; positive means room to spare
  std::string detail;
};

/// Default threshold for strict inequalities.
inline Real strict_margin_epsilon() { return Real::pow2(-64); }

/// Default slack for non-strict inequalities: a few thousand units in the last place.
inline Real rounding_slack() { return Real::pow2(12 - precision_bits()); }

namespace detail {
inline Real relative_gap(const Real& lhs, const Real& rhs) {
  const Real gap = rhs - lhs;
  const Real scale = max(abs(lhs), abs(rhs));
  return scale.is_zero() ? gap : gap / scale;
}
}  // namespace detail

inline Check strict_less(std::string name, const Real& lhs, const Real& rhs,
                         const Real& eps = strict_margin_epsilon()) {
  Check c{std::move(name), false, detail::relative_gap(lhs, rhs), {}};
  c.passed = c.margin > eps;
  c.detail = lhs.str(20) + " < " + rhs.str(20);
  return c;
}

/// lhs <= rhs up to rounding slack; the margin may be exactly zero at the boundary.
inline Check at_most(std::string name, const Real& lhs, const Real& rhs, const Real& slack = rounding_slack()) {
  Check c{std::move(name), false, detail::relative_gap(lhs, rhs), {}};
  c.passed = c.margin >= -slack;
  c.detail = lhs.str(20) + " <= " + rhs.str(20);
  return c;
}

/// |a - b| <= tol * max(|a|, |b|); margin is tol minus the achieved relative error.
inline Check close_to(std::string name, const Real& a, const Real& b, const Real& tol) {
  const Real scale = max(abs(a), abs(b));
  const Real err = scale.is_zero() ? Real(0) : abs(a - b) / scale;
  Check c{std::move(name), err <= tol, tol - err, {}};
  c.detail = a.str(25) + " vs " + b.str(25) + " (rel err " + err.str(4) + ")";
  return c;
}

inline Check boolean_check(std::string name, bool ok, std::string detail = {}) {
  return Check{std::move(name), ok, Real(ok ? 1 : -1), std::move(detail)};
}

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

inline Real min_margin(const std::vector<Check>& checks) {
  if (checks.empty()) return Real(0);
  Real m = checks.front().margin;
  for (const auto& c : checks) m = min(m, c.margin);
  return m;
}

}  // namespace cheese
