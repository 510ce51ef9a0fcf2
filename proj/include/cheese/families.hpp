#pragma once

// Disc families (finite list plus parametric tails), Swiss-cheese sets and
// the family-level constructions: road runner, square root of a cheese,
// annulus filtering, merging, budgeted synthetic families and affine copies.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cheese/geometry.hpp"
#include "cheese/generators.hpp"
#include "cheese/tails.hpp"

namespace cheese {

/// Finite discs followed by zero or more parametric tails.
///
/// Realizing to depth N yields every finite disc and, for each tail, the
/// groups with index start..N in index order. Families in the unit-disc
/// frame never hold finite discs that miss the open unit disc (they are
/// dropped on construction with a warning); affine copies live in the frame
/// of their image disc and are exempt.
struct DiscFamily {
  std::vector<Disc> finite;
  std::vector<ParametricTail> tails;
  std::vector<std::string> warnings;

  bool empty() const { return finite.empty() && tails.empty(); }

  bool has_infinite_tail() const {
    for (const auto& t : tails) {
      if (!t.last_index()) return true;
    }
    return false;
  }

  /// True when realizing to `depth` leaves no disc out.
  bool fully_realized(std::size_t depth) const {
    for (const auto& t : tails) {
      auto last = t.last_index();
      if (!last || depth < *last) return false;
    }
    return true;
  }

  /// Smallest depth that realizes every finite tail completely.
  std::size_t finite_extent() const {
    std::size_t n = 0;
    for (const auto& t : tails) {
      if (auto last = t.last_index()) n = std::max(n, *last);
    }
    return n;
  }

  std::vector<Disc> realize(std::size_t depth) const {
    std::vector<Disc> out = finite;
    for (const auto& t : tails) {
      for (auto& d : t.groups(1, depth)) out.push_back(std::move(d));
    }
    return out;
  }
};

/// Builds a unit-disc-frame family, dropping discs that miss the open unit disc.
inline DiscFamily make_family(std::vector<Disc> discs, std::vector<ParametricTail> tails = {}) {
  DiscFamily f;
  for (auto& d : discs) {
    if (intersects_unit_disc(d)) {
      f.finite.push_back(std::move(d));
    } else {
      f.warnings.push_back("dropped " + d.str() + ": does not meet the open unit disc");
    }
  }
  for (auto& t : tails) {
    t.validate();
    f.tails.push_back(std::move(t));
  }
  return f;
}

/// The finite family of discs realized to `depth`.
inline DiscFamily truncate(const DiscFamily& fam, std::size_t depth) {
  DiscFamily f;
  f.finite = fam.realize(depth);
  f.warnings = fam.warnings;
  return f;
}

/// Closed unit disc minus the union of a family.
struct CheeseSpec {
  DiscFamily family;
  std::string label;
};

/// Membership in the realized cheese, with double-precision filtering and an
/// exact fallback. Not copyable: the filters point into the owned disc list.
class RealizedCheese {
 public:
  RealizedCheese(const DiscFamily& fam, std::size_t depth) : discs_(fam.realize(depth)), unit_(Complex(), Real(1)) {
    fast_.reserve(discs_.size());
    for (const auto& d : discs_) fast_.emplace_back(d);
  }
  RealizedCheese(const RealizedCheese&) = delete;
  RealizedCheese& operator=(const RealizedCheese&) = delete;

  const std::vector<Disc>& discs() const { return discs_; }

  bool contains(const Complex& z) const {
    if (norm(z) > Real(1)) return false;
    for (const auto& d : discs_) {
      if (d.contains(z)) return false;
    }
    return true;
  }

  /// Membership of the exact point (x, y); `skip` excludes one disc index.
  bool contains(double x, double y, std::size_t skip = npos) const {
    if (FastDisc(unit_).side(x, y) > 0) return false;
    for (std::size_t i = 0; i < fast_.size(); ++i) {
      if (i != skip && fast_[i].side(x, y) < 0) return false;
    }
    return true;
  }

  /// Membership of w^2 for the exact point w = (x, y).
  bool contains_square(double x, double y) const {
    if (FastDisc(unit_).side_of_square(x, y) > 0) return false;
    for (const auto& f : fast_) {
      if (f.side_of_square(x, y) < 0) return false;
    }
    return true;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Disc> discs_;
  std::vector<FastDisc> fast_;
  Disc unit_;
};

/// z in K (realized to `depth`): |z| <= 1 and z outside every realized disc.
inline bool membership(const Complex& z, const CheeseSpec& cheese, std::size_t depth) {
  return RealizedCheese(cheese.family, depth).contains(z);
}

/// z in the square root of K: z^2 in K.
inline bool sqrt_membership(const Complex& z, const CheeseSpec& cheese, std::size_t depth) {
  return membership(z * z, cheese, depth);
}

/// Parametric road runner: centers 1/(2^n n), radii a_n^m / 2^n, n >= 1.
inline DiscFamily road_runner(long m) {
  if (m < 1) throw InputError("road_runner: m must be >= 1");
  ParametricTail t;
  t.generator = GeneratorKind::road_runner;
  t.params.m = m;
  return make_family({}, {t});
}

/// Replaces each disc by the two discs covering its square root. Tails gain
/// a square-root transform. Every source disc must exclude the origin from
/// its closure.
inline DiscFamily sqrt_family(const DiscFamily& fam) {
  DiscFamily out;
  out.warnings = fam.warnings;
  out.finite.reserve(2 * fam.finite.size());
  for (const auto& d : fam.finite) {
    auto pair = sqrt_disc(d);
    out.finite.push_back(std::move(pair.delta1));
    out.finite.push_back(std::move(pair.delta2));
  }
  for (const auto& t : fam.tails) {
    const auto ok = tail_excludes_origin(t);
    if (!ok || !*ok) {
      throw InputError("sqrt_family: cannot certify that the " + to_string(t.generator) +
                       " tail keeps the origin outside its discs");
    }
    ParametricTail s = t;
    s.transforms.push_back(Transform::square_root());
    out.tails.push_back(std::move(s));
  }
  return out;
}

/// Keeps the discs whose closure meets the annulus 1/n <= |z| <= 1.
/// Families with infinite tails must be realized to an explicit depth.
inline DiscFamily annulus_filter(const DiscFamily& fam, long n, std::optional<std::size_t> depth = std::nullopt) {
  if (n < 1) throw InputError("annulus_filter: n must be >= 1");
  if (fam.has_infinite_tail() && !depth) {
    throw InputError("annulus_filter: family has an infinite tail; a realization depth is required");
  }
  const std::size_t N = depth.value_or(fam.finite_extent());
  DiscFamily out;
  out.warnings = fam.warnings;
  for (auto& d : fam.realize(N)) {
    if (meets_annulus(d, n)) out.finite.push_back(std::move(d));
  }
  if (!fam.fully_realized(N)) {
    out.warnings.push_back("annulus_filter: discs beyond depth " + std::to_string(N) + " were not considered");
  }
  return out;
}

/// Concatenation; the cheese of the result is the intersection of the input cheeses.
inline DiscFamily merge_families(const std::vector<DiscFamily>& fams) {
  DiscFamily out;
  for (const auto& f : fams) {
    out.finite.insert(out.finite.end(), f.finite.begin(), f.finite.end());
    out.tails.insert(out.tails.end(), f.tails.begin(), f.tails.end());
    out.warnings.insert(out.warnings.end(), f.warnings.begin(), f.warnings.end());
  }
  return out;
}

/// `count` pseudo-random discs meeting the unit disc with total radius below 1/(4 n^n).
inline DiscFamily synthetic_budget_family(long n, long count, std::uint64_t seed) {
  return make_family(synthetic_budget_discs(n, count, seed));
}

/// The image of a family under z -> a + rho z (frame of the disc a + rho D).
inline DiscFamily affine_family(const DiscFamily& fam, const Complex& a, const Real& rho) {
  if (!(rho.sign() > 0)) throw InputError("affine_family: rho must be positive");
  DiscFamily out;
  out.warnings = fam.warnings;
  for (const auto& d : fam.finite) out.finite.push_back(affine_disc(d, a, rho));
  for (const auto& t : fam.tails) {
    ParametricTail s = t;
    s.transforms.push_back(Transform::affine(a, rho));
    out.tails.push_back(std::move(s));
  }
  return out;
}

struct AffineCopy {
  Complex offset;
  Real scale;
};

/// First pair (i, j) of copies whose closed image discs a + rho D meet, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> find_overlapping_copies(
    const std::vector<AffineCopy>& copies) {
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (std::size_t j = i + 1; j < copies.size(); ++j) {
      const Real gap = copies[i].scale + copies[j].scale;
      if (!(norm(copies[i].offset - copies[j].offset) > gap * gap)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

struct CheeseReport {
  std::size_t depth = 0;
  std::size_t realized_discs = 0;
  Real realized_radius_sum;
  TailBound radius_tail;
  /// Sum of radii < 1 (certified realized + tail) when decidable.
  std::optional<bool> radius_sum_below_one;
  bool origin_in_realized_cheese = false;
  /// Origin exclusion also holds for every unrealized tail disc.
  bool origin_certified = false;
  bool all_meet_unit_disc = false;
  std::optional<bool> pairwise_disjoint_closures;
  bool road_runner_input = false;
  /// Road-runner inputs: every realized disc lies in (0, 1) on the real axis.
  std::optional<bool> on_positive_axis_in_unit_interval;
  std::vector<std::string> notes;
};

/// Summarizes the quantitative facts checkable at `realize_n`. Empty interior
/// and nontriviality of R(K) are not claimed.
inline CheeseReport validate_cheese(const CheeseSpec& spec, std::size_t realize_n) {
  CheeseReport rep;
  rep.depth = realize_n;
  const auto discs = spec.family.realize(realize_n);
  rep.realized_discs = discs.size();
  rep.notes = spec.family.warnings;

  for (const auto& d : discs) rep.realized_radius_sum += d.radius;

  TailBound tail = TailBound::zero();
  for (const auto& t : spec.family.tails) tail = combine(tail, tail_bound(t, -1, Complex(), realize_n));
  rep.radius_tail = tail;
  if (tail.certified()) rep.radius_sum_below_one = rep.realized_radius_sum + tail.value < Real(1);
  if (!tail.certified() && rep.realized_radius_sum >= Real(1)) rep.radius_sum_below_one = false;

  const Complex origin;
  rep.origin_in_realized_cheese = true;
  for (const auto& d : discs) {
    if (d.contains(origin)) rep.origin_in_realized_cheese = false;
  }
  rep.origin_certified = rep.origin_in_realized_cheese;
  for (const auto& t : spec.family.tails) {
    if (t.last_index() && realize_n >= *t.last_index()) continue;
    const auto excl = tail_excludes_origin(t);
    if (!excl) {
      rep.origin_certified = false;
      rep.notes.push_back("origin exclusion for the " + to_string(t.generator) + " tail is not decidable");
    } else if (!*excl) {
      rep.origin_certified = false;
      rep.notes.push_back("a " + to_string(t.generator) + " tail disc contains the origin in its closure");
    }
  }

  rep.all_meet_unit_disc = true;
  for (const auto& d : discs) {
    if (!intersects_unit_disc(d)) rep.all_meet_unit_disc = false;
  }

  for (const auto& t : spec.family.tails) {
    if (t.generator == GeneratorKind::road_runner && t.transforms.empty()) rep.road_runner_input = true;
  }
  if (discs.size() <= 4000) {
    bool disjoint = true;
    for (std::size_t i = 0; i < discs.size() && disjoint; ++i) {
      for (std::size_t j = i + 1; j < discs.size(); ++j) {
        if (!closures_disjoint(discs[i], discs[j])) {
          disjoint = false;
          break;
        }
      }
    }
    rep.pairwise_disjoint_closures = disjoint;
  }
  if (rep.road_runner_input) {
    bool ok = true;
    for (const auto& d : discs) {
      ok = ok && d.center.im.is_zero() && (d.center.re - d.radius).sign() > 0 && d.center.re + d.radius < Real(1);
    }
    rep.on_positive_axis_in_unit_interval = ok;
  }
  return rep;
}

}  // namespace cheese
