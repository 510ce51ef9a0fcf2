#pragma once

// Certified bounds on the unrealized part of Browder-type sums
//   sum over discs D with index > N of r(D) / s_a(D)^(order + 1).
// `order == -1` bounds the plain radius sum.

#include <algorithm>
#include <string>

#include "cheese/generators.hpp"

namespace cheese {

struct TailBound {
  enum class Kind {
    exact,      // analytic or exhaustive bound from the generator
    user,       // caller-supplied bound
    unknown,    // no provider applies; results are truncated-only
    unbounded,  // the series diverges
  };
  Kind kind = Kind::exact;
  Real value;
  std::string provider;

  bool certified() const { return kind == Kind::exact || kind == Kind::user; }

  static TailBound zero(std::string provider = "none") { return {Kind::exact, Real(0), std::move(provider)}; }
  static TailBound unknown(std::string why) { return {Kind::unknown, Real(0), std::move(why)}; }
  static TailBound unbounded(std::string why) { return {Kind::unbounded, Real::infinity(), std::move(why)}; }
};

inline const char* to_string(TailBound::Kind k) {
  switch (k) {
    case TailBound::Kind::exact: return "exact";
    case TailBound::Kind::user: return "user";
    case TailBound::Kind::unknown: return "unknown";
    case TailBound::Kind::unbounded: return "unbounded";
  }
  return "?";
}

/// Sum of two tail bounds; unbounded dominates, then unknown.
inline TailBound combine(const TailBound& a, const TailBound& b) {
  using K = TailBound::Kind;
  if (a.kind == K::unbounded) return a;
  if (b.kind == K::unbounded) return b;
  if (a.kind == K::unknown) return a;
  if (b.kind == K::unknown) return b;
  const K kind = (a.kind == K::user || b.kind == K::user) ? K::user : K::exact;
  std::string provider = a.provider == "none" ? b.provider
                         : (b.provider == "none" ? a.provider : a.provider + "+" + b.provider);
  return {kind, a.value + b.value, std::move(provider)};
}

namespace detail {
/// Pads an analytic bound to absorb rounding in its own evaluation.
inline Real round_up(const Real& x) { return x * (Real(1) + Real::pow2(16 - precision_bits())); }
}  // namespace detail

/// Bound on sum_{n > N} r_n / (a_n - r_n)^(order + 1) for road_runner(m_family).
///
/// Uses a_n - r_n >= a_n / 2 and a_n <= 2^-n, giving terms at most
/// 2^(order+1) 2^(-n (m - order)); the geometric sum is
/// 2^(order+1) 2^(-(N+1)(m-order)) / (1 - 2^-(m-order)). For order = m - 1
/// this is 2^(m-N).
inline Real road_runner_tail(long m_family, long m_order, std::size_t N) {
  if (m_family < 1) throw InputError("road_runner_tail: family parameter m must be >= 1");
  if (m_order < -1) throw InputError("road_runner_tail: order must be >= -1");
  if (m_order >= m_family) {
    throw InputError("road_runner_tail: order " + std::to_string(m_order) + " >= m = " + std::to_string(m_family) +
                     "; the tail series diverges");
  }
  // a_n - r_n >= a_n / 2 is equivalent to a_n^(m-1) <= 2^(n-1); the ratio
  // a_n^(m-1) / 2^n decreases in n, so checking the first tail index suffices.
  const long first = static_cast<long>(N) + 1;
  const Disc d = road_runner_disc(m_family, first);
  if (!(ldexp(d.radius, 1) <= d.center.re)) {
    throw InputError("road_runner_tail: a_n - r_n >= a_n/2 fails at index " + std::to_string(first));
  }
  const long gap = m_family - m_order;
  const Real bound = Real::pow2(m_order + 1 - first * gap) / (Real(1) - Real::pow2(-gap));
  return detail::round_up(bound);
}

/// Bound on sum_{n >= first} 2^(order-1) n^(order+1-n): the per-group
/// majorant (1/(4 n^n)) (2n)^(order+1) summed over the unrealized groups.
inline Real infinite_order_tail(long order, std::size_t first) {
  if (order < -1) throw InputError("infinite_order_tail: order must be >= -1");
  if (first < 1) first = 1;
  const long n1 = std::max<long>(static_cast<long>(first), order + 3);
  Real sum(0);
  for (long n = static_cast<long>(first); n < n1; ++n) {
    sum += ldexp(pow(Real(n), order + 1 - n), order - 1);
  }
  // For n >= n1 >= order + 3 the exponent is negative, so n^(order+1-n) <= n1^(order+1-n).
  const Real q = Real(1) / Real(n1);
  sum += ldexp(pow(Real(n1), order + 1 - n1), order - 1) / (Real(1) - q);
  return detail::round_up(sum);
}

/// True (analytically, or by exhaustion for finite generators) when no disc of
/// the tail has the origin in its closure; nullopt when it cannot be decided.
inline std::optional<bool> tail_excludes_origin(const ParametricTail& t) {
  if (t.has_affine()) return std::nullopt;
  switch (t.generator) {
    case GeneratorKind::road_runner:     // a_n - r_n >= a_n / 2 > 0
    case GeneratorKind::infinite_order:  // s_0 >= 1/(2n) > 0
      return true;
    case GeneratorKind::synthetic_budget:
      for (const auto& d : synthetic_budget_discs(t.params.n, t.params.count, t.params.seed)) {
        if (d.closure_contains(Complex())) return false;
      }
      return true;
  }
  return std::nullopt;
}

/// Tail bound for the part of `t` beyond index `depth`, at point `a`.
///
/// Finite generators are summed exhaustively at any point. Infinite
/// generators have analytic providers at the origin only. Each square-root
/// transform maps order k to ceil(k/2) on the layer below: a source disc with
/// s = s_0 <= 1 yields two discs of radius < r/(2 sqrt s) at distance sqrt s,
/// whose terms total < r / s^((k+2)/2) <= r / s^(ceil(k/2)+1).
inline TailBound tail_bound(const ParametricTail& t, long order, const Complex& a, std::size_t depth) {
  const std::size_t first = std::max(depth + 1, t.start);
  if (auto last = t.last_index()) {
    if (first > *last) return TailBound::zero();
    Real sum(0);
    for (const auto& d : t.groups(first, *last)) {
      if (d.closure_contains(a)) throw InputError("tail disc " + d.str() + " contains the evaluation point");
      sum += order < 0 ? d.radius : d.radius / pow(s_dist(d, a), order + 1);
    }
    return {TailBound::Kind::exact, sum, "exhaustive:" + to_string(t.generator)};
  }
  if (t.has_affine()) return TailBound::unknown("affine-transformed tail");
  if (!a.is_zero()) return TailBound::unknown("tail providers are anchored at the origin");
  long k = order;
  // (k + 1) / 2 == ceil(k / 2) for k >= -1.
  for (std::size_t i = 0; i < t.transforms.size(); ++i) k = (k + 1) / 2;
  switch (t.generator) {
    case GeneratorKind::road_runner:
      if (k >= t.params.m) {
        if (!t.transforms.empty()) return TailBound::unknown("no finite majorant through square-root layers");
        return TailBound::unbounded("road_runner(m=" + std::to_string(t.params.m) + ") diverges at order " +
                                    std::to_string(k));
      }
      return {TailBound::Kind::exact, road_runner_tail(t.params.m, k, first - 1), "road_runner"};
    case GeneratorKind::infinite_order:
      return {TailBound::Kind::exact, infinite_order_tail(k, first), "infinite_order"};
    case GeneratorKind::synthetic_budget:
      break;
  }
  return TailBound::unknown("no provider");
}

}  // namespace cheese
