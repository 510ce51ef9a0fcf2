#pragma once

// Closed-form disc generators. A generator maps an index to a small group of
// discs; a ParametricTail applies a chain of transforms to each group.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheese/geometry.hpp"
#include "cheese/random.hpp"

namespace cheese {

enum class GeneratorKind {
  road_runner,       // index n -> D(1/(2^n n), a_n^m / 2^n)
  synthetic_budget,  // index i in [1, count] -> i-th disc of a budgeted pseudo-random family
  infinite_order,    // index n -> synthetic budget family for n, filtered to the annulus 1/n <= |z| <= 1
};

inline std::string to_string(GeneratorKind g) {
  switch (g) {
    case GeneratorKind::road_runner: return "road_runner";
    case GeneratorKind::synthetic_budget: return "synthetic_budget";
    case GeneratorKind::infinite_order: return "infinite_order";
  }
  return "?";
}

inline std::optional<GeneratorKind> generator_from_string(const std::string& s) {
  if (s == "road_runner") return GeneratorKind::road_runner;
  if (s == "synthetic_budget") return GeneratorKind::synthetic_budget;
  if (s == "infinite_order") return GeneratorKind::infinite_order;
  return std::nullopt;
}

struct GeneratorParams {
  long m = 0;      // road_runner
  long n = 0;      // synthetic_budget
  long count = 0;  // synthetic_budget, infinite_order
  std::uint64_t seed = 0;
};

struct Transform {
  enum class Kind { sqrt, affine };
  Kind kind = Kind::sqrt;
  Complex offset;   // affine only
  Real scale{1};    // affine only

  static Transform square_root() { return Transform{}; }
  static Transform affine(Complex a, Real rho) {
    if (!(rho.sign() > 0)) throw InputError("affine transform: rho must be positive");
    Transform t;
    t.kind = Kind::affine;
    t.offset = std::move(a);
    t.scale = std::move(rho);
    return t;
  }
};

/// Center 1/(2^n n) of the n-th road-runner disc.
inline Real road_runner_center(long n) { return ldexp(Real(1) / Real(n), -n); }

inline Disc road_runner_disc(long m, long n) {
  if (m < 1) throw InputError("road_runner: m must be >= 1");
  if (n < 1) throw InputError("road_runner: index must be >= 1");
  const Real a = road_runner_center(n);
  return Disc(Complex(a), ldexp(pow(a, m), -n));
}

/// Radius budget 1/(4 n^n).
inline Real synthetic_budget(long n) { return Real(1) / (Real(4) * pow(Real(n), n)); }

/// Deterministic pseudo-random discs meeting the unit disc, with total radius
/// (1 - 2^-8) times the budget 1/(4 n^n). Every center satisfies |c| > 2r,
/// so the origin stays outside every closed disc.
inline std::vector<Disc> synthetic_budget_discs(long n, long count, std::uint64_t seed) {
  if (n < 1) throw InputError("synthetic_budget: n must be >= 1");
  if (count < 1) throw InputError("synthetic_budget: count must be >= 1");
  const CounterRng rng(seed);
  std::vector<Real> weights;
  weights.reserve(static_cast<std::size_t>(count));
  Real total(0);
  for (long i = 1; i <= count; ++i) {
    weights.emplace_back(0.5 + 0.5 * rng.uniform(static_cast<std::uint64_t>(i), 0));
    total += weights.back();
  }
  const Real scale = synthetic_budget(n) * (Real(1) - Real::pow2(-8)) / total;
  const double two_pi = 2.0 * M_PI;
  std::vector<Disc> discs;
  discs.reserve(weights.size());
  for (long i = 1; i <= count; ++i) {
    const Real r = weights[static_cast<std::size_t>(i - 1)] * scale;
    const double min_modulus = 2.0 * r.to_double() * (1.0 + 0x1.0p-20);
    for (std::uint64_t t = 0;; ++t) {
      const double rho = std::sqrt(rng.uniform(static_cast<std::uint64_t>(i), 1 + 2 * t));
      if (rho <= min_modulus || rho >= 1.0) continue;
      const double theta = two_pi * rng.uniform(static_cast<std::uint64_t>(i), 2 + 2 * t);
      discs.emplace_back(Complex(rho * std::cos(theta), rho * std::sin(theta)), r);
      break;
    }
  }
  return discs;
}

/// True when the closed disc meets the annulus 1/n <= |z| <= 1.
inline bool meets_annulus(const Disc& d, long n) {
  const Real modulus = abs(d.center);
  return modulus + d.radius >= Real(1) / Real(n) && modulus - d.radius <= Real(1);
}

inline std::uint64_t infinite_order_group_seed(std::uint64_t seed, long n) {
  return CounterRng::mix(seed ^ CounterRng::mix(static_cast<std::uint64_t>(n) + 0x1000));
}

inline std::vector<Disc> infinite_order_group(long n, long count, std::uint64_t seed) {
  std::vector<Disc> kept;
  for (auto& d : synthetic_budget_discs(n, count, infinite_order_group_seed(seed, n))) {
    if (meets_annulus(d, n)) kept.push_back(std::move(d));
  }
  return kept;
}

/// Infinite (or finite, for synthetic_budget) index -> disc-group rule.
struct ParametricTail {
  GeneratorKind generator = GeneratorKind::road_runner;
  GeneratorParams params;
  std::size_t start = 1;
  std::vector<Transform> transforms;

  void validate() const {
    if (start < 1) throw InputError("parametric tail: start must be >= 1");
    switch (generator) {
      case GeneratorKind::road_runner:
        if (params.m < 1) throw InputError("road_runner: m must be >= 1");
        break;
      case GeneratorKind::synthetic_budget:
        if (params.n < 1) throw InputError("synthetic_budget: n must be >= 1");
        if (params.count < 1) throw InputError("synthetic_budget: count must be >= 1");
        break;
      case GeneratorKind::infinite_order:
        if (params.count < 1) throw InputError("infinite_order: count must be >= 1");
        break;
    }
  }

  /// Last valid index for finite generators.
  std::optional<std::size_t> last_index() const {
    if (generator == GeneratorKind::synthetic_budget) return static_cast<std::size_t>(params.count);
    return std::nullopt;
  }

  bool has_sqrt() const {
    for (const auto& t : transforms) {
      if (t.kind == Transform::Kind::sqrt) return true;
    }
    return false;
  }
  bool has_affine() const {
    for (const auto& t : transforms) {
      if (t.kind == Transform::Kind::affine) return true;
    }
    return false;
  }

  /// Transformed groups for indices max(start, first)..last (inclusive), in index order.
  std::vector<Disc> groups(std::size_t first, std::size_t last) const {
    std::vector<Disc> out;
    first = std::max(first, start);
    if (auto end = last_index()) last = std::min(last, *end);
    if (first > last) return out;
    std::vector<Disc> synthetic;
    if (generator == GeneratorKind::synthetic_budget) {
      synthetic = synthetic_budget_discs(params.n, params.count, params.seed);
    }
    for (std::size_t i = first; i <= last; ++i) {
      std::vector<Disc> g;
      switch (generator) {
        case GeneratorKind::road_runner:
          g.push_back(road_runner_disc(params.m, static_cast<long>(i)));
          break;
        case GeneratorKind::synthetic_budget:
          g.push_back(synthetic[i - 1]);
          break;
        case GeneratorKind::infinite_order:
          g = infinite_order_group(static_cast<long>(i), params.count, params.seed);
          break;
      }
      for (const auto& t : transforms) g = apply(t, g);
      for (auto& d : g) out.push_back(std::move(d));
    }
    return out;
  }

  static std::vector<Disc> apply(const Transform& t, const std::vector<Disc>& in) {
    std::vector<Disc> out;
    out.reserve(t.kind == Transform::Kind::sqrt ? 2 * in.size() : in.size());
    for (const auto& d : in) {
      if (t.kind == Transform::Kind::sqrt) {
        auto pair = sqrt_disc(d);
        out.push_back(std::move(pair.delta1));
        out.push_back(std::move(pair.delta2));
      } else {
        out.push_back(affine_disc(d, t.offset, t.scale));
      }
    }
    return out;
  }
};

}  // namespace cheese
