#pragma once

// Browder sums  sum_{D in family + {unit disc}} r(D) / s_a(D)^(m+1)
// with certified truncation tails, and the comparisons built on them.

#include <optional>
#include <string>
#include <vector>

#include "cheese/check.hpp"
#include "cheese/families.hpp"

namespace cheese {

struct BrowderOptions {
  bool include_unit_disc = true;
  /// Caller-supplied bound on everything beyond the realization depth.
  /// Replaces the family's own providers.
  std::optional<Real> user_tail;
};

struct BrowderReport {
  long order = 0;
  Complex point;
  std::size_t depth = 0;
  std::size_t realized_terms = 0;  // deleted discs only
  Real realized_sum;               // includes the unit-disc term when flagged
  Real non_unit_sum;
  Real unit_term;
  TailBound tail;
  bool includes_unit_disc_term = true;
  std::vector<std::string> warnings;

  bool certified() const { return tail.certified(); }
  /// realized_sum + tail; meaningful when certified().
  Real upper_bound() const { return realized_sum + tail.value; }
};

/// r / s^(order + 1).
inline Real browder_term(const Real& radius, const Real& s, long order) { return radius / pow(s, order + 1); }

inline constexpr long kConditioningExponent = -40;

/// Combined tail bound of every parametric tail beyond `depth`.
inline TailBound family_tail(const DiscFamily& fam, long order, const Complex& a, std::size_t depth) {
  TailBound total = TailBound::zero();
  for (const auto& t : fam.tails) total = combine(total, tail_bound(t, order, a, depth));
  return total;
}

/// Browder sum of order `m` at `a`, realized to `depth`.
///
/// Requires |a| < 1 and a outside every realized disc (closures included:
/// s_a(D) must be positive).
inline BrowderReport browder_sum(const DiscFamily& fam, long m, const Complex& a, std::size_t depth,
                                 const BrowderOptions& opts = {}) {
  if (m < 0) throw InputError("browder_sum: order must be >= 0");
  const Real modulus = abs(a);
  if (modulus > Real(1)) throw InputError("browder_sum: point " + a.str(17) + " lies outside the closed unit disc");
  BrowderReport rep;
  rep.order = m;
  rep.point = a;
  rep.depth = depth;
  rep.includes_unit_disc_term = opts.include_unit_disc;
  rep.warnings = fam.warnings;

  const Real tiny = Real::pow2(kConditioningExponent);
  for (const auto& d : fam.realize(depth)) {
    if (d.contains(a)) throw InputError("browder_sum: point lies inside realized disc " + d.str());
    const Real s = s_dist(d, a);
    if (s.is_zero()) throw InputError("browder_sum: point lies on the boundary of " + d.str());
    if (s < tiny) rep.warnings.push_back("ill-conditioned term: s_a(D) < 2^-40 for " + d.str());
    rep.non_unit_sum += browder_term(d.radius, s, m);
    ++rep.realized_terms;
  }
  if (opts.include_unit_disc) {
    const Real s = Real(1) - modulus;
    if (s.is_zero()) throw InputError("browder_sum: point on the unit circle; the unit-disc term is infinite");
    rep.unit_term = browder_term(Real(1), s, m);
  }
  rep.realized_sum = rep.unit_term + rep.non_unit_sum;
  if (opts.user_tail) {
    if (opts.user_tail->sign() < 0) throw InputError("browder_sum: user tail bound must be nonnegative");
    rep.tail = {TailBound::Kind::user, *opts.user_tail, "user"};
  } else {
    rep.tail = family_tail(fam, m, a, depth);
  }
  return rep;
}

struct DecreaseVerdict {
  Outcome outcome = Outcome::fail;
  long order = 0;                // m for the source; the root family is measured at 2m
  BrowderReport source;          // order m
  BrowderReport root;            // order 2m, of sqrt_family(source)
  Check comparison;              // certified upper bound (root) vs realized lower bound (source)
  std::vector<Check> per_disc;   // each root disc term vs r / (2 s^(m+1))
};

/// Compares the 2m-th order Browder sum of the square-root family with the
/// m-th order sum of the source, both at the origin.
///
/// The verdict passes when root.realized + root.tail < source.realized with
/// margin, and every realized source disc satisfies the per-disc inequality.
/// Without a certified root tail the verdict is truncated-only.
inline DecreaseVerdict sqrt_decrease_check(const DiscFamily& fam, long m, std::size_t depth) {
  if (m < 1) throw InputError("sqrt_decrease_check: m must be >= 1");
  const auto discs = fam.realize(depth);
  if (discs.empty()) throw InputError("sqrt_decrease_check: the family must be nonempty");
  const DiscFamily root = sqrt_family(fam);
  const Complex origin;

  DecreaseVerdict v;
  v.order = m;
  v.source = browder_sum(fam, m, origin, depth);
  v.root = browder_sum(root, 2 * m, origin, depth);

  for (std::size_t i = 0; i < discs.size(); ++i) {
    const auto pair = sqrt_disc(discs[i]);
    const Real bound = discs[i].radius / ldexp(pow(pair.s, m + 1), 1);
    for (const Disc* d : {&pair.delta1, &pair.delta2}) {
      v.per_disc.push_back(strict_less("disc " + std::to_string(i) + " term",
                                       browder_term(d->radius, s_dist(*d, origin), 2 * m), bound));
    }
  }

  const bool per_disc_ok = all_passed(v.per_disc);
  if (v.root.certified()) {
    v.comparison = strict_less("B_2m(root) upper < B_m(source) lower", v.root.upper_bound(), v.source.realized_sum);
    v.outcome = v.comparison.passed && per_disc_ok ? Outcome::pass : Outcome::fail;
  } else {
    v.comparison = strict_less("B_2m(root) realized < B_m(source) realized (truncated)", v.root.realized_sum,
                               v.source.realized_sum);
    v.outcome = v.comparison.passed && per_disc_ok ? Outcome::truncated_only : Outcome::fail;
  }
  return v;
}

struct MonotoneVerdict {
  bool passed = false;
  std::vector<Check> sums;   // B_k <= 2^(m-k) B_m for k = 0..m
  std::vector<Check> terms;  // the same, term by term
};

/// Term-wise r/s^(k+1) <= 2^(m-k) r/s^(m+1) for every realized term and
/// k <= m, hence B_k <= 2^(m-k) B_m on realized terms. Requires s_a(D) <= 2.
inline MonotoneVerdict monotone_order_check(const DiscFamily& fam, long m, const Complex& a, std::size_t depth,
                                            bool include_unit_disc = true) {
  if (m < 0) throw InputError("monotone_order_check: m must be >= 0");
  std::vector<std::pair<Real, Real>> terms;  // (radius, s)
  for (const auto& d : fam.realize(depth)) {
    const Real s = s_dist(d, a);
    if (s > Real(2)) throw InputError("monotone_order_check: s_a(D) > 2 for " + d.str() + " (disc misses the unit disc)");
    if (d.contains(a) || s.is_zero()) throw InputError("monotone_order_check: point not in the realized cheese");
    terms.emplace_back(d.radius, s);
  }
  if (include_unit_disc) {
    const Real s = Real(1) - abs(a);
    if (!(s.sign() > 0)) throw InputError("monotone_order_check: point must lie in the open unit disc");
    terms.emplace_back(Real(1), s);
  }
  MonotoneVerdict v;
  Real top(0);
  for (const auto& [r, s] : terms) top += browder_term(r, s, m);
  for (long k = 0; k <= m; ++k) {
    Real lower(0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& [r, s] = terms[i];
      const Real lhs = browder_term(r, s, k);
      const Real rhs = ldexp(browder_term(r, s, m), m - k);
      v.terms.push_back(at_most("k=" + std::to_string(k) + " term " + std::to_string(i), lhs, rhs));
      lower += lhs;
    }
    v.sums.push_back(at_most("B_" + std::to_string(k) + " <= 2^" + std::to_string(m - k) + " B_" + std::to_string(m),
                             lower, ldexp(top, m - k)));
  }
  v.passed = all_passed(v.sums) && all_passed(v.terms);
  return v;
}

struct OrderGroup {
  long n = 0;
  std::size_t generated = 0;
  std::size_t kept = 0;
  Real radius_sum;        // kept discs
  Real generated_radius;  // all generated discs, before filtering
  Real budget;            // 1/(4 n^n)
  Real group_sum;         // sum of r / s_0^(m+1) over kept discs
  Real group_bound;       // 2^(m-1) / n^(n-(m+1))
  std::vector<Check> checks;
};

struct InfiniteOrderVerdict {
  bool passed = false;
  long order = 0;
  long n_max = 0;
  std::vector<OrderGroup> groups;
  Real total;
  Real majorant_partial;  // sum of group bounds for n <= n_max
  Real remainder;         // certified bound on the majorant beyond n_max
  Check total_check;
};

/// For n = 1..n_max: generates the budgeted family for n, keeps the discs
/// meeting the annulus 1/n <= |z| <= 1, and checks each group against
/// (1/(4n^n)) (2n)^(m+1) = 2^(m-1) / n^(n-(m+1)) using s_0 >= 1/(2n).
inline InfiniteOrderVerdict infinite_order_estimate(long n_max, long m, long count = 8, std::uint64_t seed = 1) {
  if (n_max < 1) throw InputError("infinite_order_estimate: n_max must be >= 1");
  if (m < 1) throw InputError("infinite_order_estimate: m must be >= 1");
  InfiniteOrderVerdict v;
  v.order = m;
  v.n_max = n_max;
  const Complex origin;
  bool ok = true;
  for (long n = 1; n <= n_max; ++n) {
    OrderGroup g;
    g.n = n;
    g.budget = synthetic_budget(n);
    const auto generated = synthetic_budget_discs(n, count, infinite_order_group_seed(seed, n));
    g.generated = generated.size();
    for (const auto& d : generated) g.generated_radius += d.radius;
    g.checks.push_back(strict_less("radius budget", g.generated_radius, g.budget));
    const Real min_s = Real(1) / Real(2 * n);
    for (const auto& d : infinite_order_group(n, count, seed)) {
      const Real s = s_dist(d, origin);
      if (s < min_s || d.closure_contains(origin)) {
        throw std::logic_error("infinite_order_estimate: generated disc " + d.str() + " violates s_0 >= 1/(2n)");
      }
      ++g.kept;
      g.radius_sum += d.radius;
      g.group_sum += browder_term(d.radius, s, m);
    }
    const Real via_radii = g.radius_sum * pow(Real(2 * n), m + 1);
    g.group_bound = ldexp(pow(Real(n), m + 1 - n), m - 1);
    g.checks.push_back(at_most("group sum <= radii * (2n)^(m+1)", g.group_sum, via_radii));
    g.checks.push_back(at_most("group sum <= 2^(m-1)/n^(n-(m+1))", g.group_sum, g.group_bound));
    ok = ok && all_passed(g.checks);
    v.total += g.group_sum;
    v.majorant_partial += g.group_bound;
    v.groups.push_back(std::move(g));
  }
  v.remainder = infinite_order_tail(m, static_cast<std::size_t>(n_max) + 1);
  v.total_check = at_most("total <= partial majorant", v.total, v.majorant_partial);
  v.passed = ok && v.total_check.passed;
  return v;
}

}  // namespace cheese
