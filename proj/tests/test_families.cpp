#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cheese/families.hpp"
#include "cheese/random.hpp"

using namespace cheese;

namespace {

Real q(long num, long den) { return Real(num) / Real(den); }

bool same_disc(const Disc& a, const Disc& b) { return a.center == b.center && a.radius == b.radius; }

}  // namespace

TEST(RoadRunner, ExactDiscs) {
  const auto d1 = road_runner(2).realize(1).at(0);
  EXPECT_EQ(d1.center, Complex(q(1, 2)));
  EXPECT_EQ(d1.radius, q(1, 8));
  const auto d2 = road_runner(2).realize(2).at(1);
  EXPECT_EQ(d2.center, Complex(q(1, 8)));
  EXPECT_EQ(d2.radius, q(1, 256));
  const auto d3 = road_runner(1).realize(3).at(2);
  EXPECT_EQ(d3.center, Complex(q(1, 24)));
  EXPECT_EQ(d3.radius, q(1, 192));
}

TEST(RoadRunner, RejectsNonPositiveM) { EXPECT_THROW(road_runner(0), InputError); }

TEST(RoadRunner, DisjointOnPositiveAxisToFifty) {
  for (long m = 1; m <= 4; ++m) {
    const CheeseSpec spec{road_runner(m), "rr"};
    const auto rep = validate_cheese(spec, 50);
    EXPECT_EQ(rep.realized_discs, 50u);
    ASSERT_TRUE(rep.pairwise_disjoint_closures.has_value());
    EXPECT_TRUE(*rep.pairwise_disjoint_closures);
    ASSERT_TRUE(rep.on_positive_axis_in_unit_interval.has_value());
    EXPECT_TRUE(*rep.on_positive_axis_in_unit_interval);
    EXPECT_TRUE(rep.origin_in_realized_cheese);
    EXPECT_TRUE(rep.origin_certified);
  }
}

TEST(SqrtFamily, Examples) {
  EXPECT_TRUE(sqrt_family(DiscFamily{}).empty());
  const auto out = sqrt_family(make_family({Disc(Complex(1), q(3, 4))}));
  ASSERT_EQ(out.finite.size(), 2u);
  EXPECT_TRUE(same_disc(out.finite[0], Disc(Complex(1), q(1, 2))));
  EXPECT_TRUE(same_disc(out.finite[1], Disc(Complex(-1), q(1, 2))));
}

TEST(SqrtFamily, DoublesCountWithSymmetricPairs) {
  const auto src = truncate(road_runner(2), 3);
  const auto out = sqrt_family(src);
  ASSERT_EQ(out.finite.size(), 6u);
  for (std::size_t i = 0; i < out.finite.size(); i += 2) {
    EXPECT_EQ(out.finite[i].center, -out.finite[i + 1].center);
    EXPECT_EQ(out.finite[i].radius, out.finite[i + 1].radius);
  }
  // The parametric form realizes the same discs.
  const auto lazy = sqrt_family(road_runner(2)).realize(3);
  ASSERT_EQ(lazy.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(same_disc(lazy[i], out.finite[i]));
}

TEST(SqrtFamily, RejectsDiscTouchingOrigin) {
  EXPECT_THROW(sqrt_family(make_family({Disc(Complex(0.5), Real(0.5))})), InputError);
  EXPECT_THROW(sqrt_family(make_family({Disc(Complex(0.1), Real(0.2))})), InputError);
}

TEST(SqrtFamily, CoverProperty) {
  CounterRng rng(21);
  const auto src = make_family({Disc(Complex(0.6, 0.2), Real(0.15)), Disc(Complex(-0.3, -0.5), Real(0.1))});
  const auto out = sqrt_family(src);
  for (std::size_t i = 0; i < src.finite.size(); ++i) {
    const Disc& d = src.finite[i];
    const FastDisc fd(d);
    const FastDisc a(out.finite[2 * i]);
    const FastDisc b(out.finite[2 * i + 1]);
    long hits = 0;
    while (hits < 10000) {
      // w^2 uniform in the bounding box of d, then w = +-sqrt.
      const double x = d.center.re.to_double() + d.radius.to_double() * rng.next_uniform(-1, 1);
      const double y = d.center.im.to_double() + d.radius.to_double() * rng.next_uniform(-1, 1);
      const std::complex<double> w = std::sqrt(std::complex<double>(x, y)) * (rng.next_uniform() < 0.5 ? 1.0 : -1.0);
      if (fd.side_of_square(w.real(), w.imag()) >= 0) continue;
      ++hits;
      EXPECT_TRUE(a.side(w.real(), w.imag()) < 0 || b.side(w.real(), w.imag()) < 0);
    }
  }
}

TEST(SqrtFamily, SubsetProperty) {
  const auto src = truncate(road_runner(2), 12);
  const auto root = sqrt_family(src);
  const RealizedCheese source_cheese(src, 12);
  const RealizedCheese root_cheese(root, 12);
  CounterRng rng(4);
  long tested = 0;
  while (tested < 10000) {
    const double x = rng.next_uniform(-1, 1);
    const double y = rng.next_uniform(-1, 1);
    if (!root_cheese.contains(x, y)) continue;
    ++tested;
    EXPECT_TRUE(source_cheese.contains_square(x, y)) << x << "," << y;
  }
}

TEST(AnnulusFilter, Examples) {
  const long n = 4;
  const auto inner = annulus_filter(make_family({Disc(Complex(q(1, 2 * n)), q(1, 16 * n))}), n);
  EXPECT_TRUE(inner.finite.empty());
  const auto kept = annulus_filter(make_family({Disc(Complex(q(1, 2)), q(1, 4))}), 2);
  EXPECT_EQ(kept.finite.size(), 1u);
  EXPECT_TRUE(annulus_filter(DiscFamily{}, 3).empty());
  EXPECT_THROW(annulus_filter(road_runner(2), 3), InputError);
  EXPECT_THROW(annulus_filter(DiscFamily{}, 0), InputError);
  // Only the first road-runner disc reaches |z| >= 1/4.
  EXPECT_EQ(annulus_filter(road_runner(2), 4, 30).finite.size(), 1u);
}

TEST(Merge, Examples) {
  const auto f = make_family({Disc(Complex(0.5), Real(0.1))});
  const auto merged = merge_families({DiscFamily{}, f});
  ASSERT_EQ(merged.finite.size(), 1u);
  EXPECT_TRUE(same_disc(merged.finite[0], f.finite[0]));
  const CheeseSpec both{merge_families({road_runner(2), make_family({Disc(Complex(-0.5), q(1, 4))})}), ""};
  EXPECT_TRUE(membership(Complex(), both, 40));
}

TEST(Merge, MembershipIsConjunction) {
  const CheeseSpec a{make_family({Disc(Complex(0.5), Real(0.3))}), ""};
  const CheeseSpec b{make_family({Disc(Complex(-0.2, 0.4), Real(0.25))}), ""};
  const CheeseSpec ab{merge_families({a.family, b.family}), ""};
  CounterRng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const Complex z(rng.next_uniform(-1, 1), rng.next_uniform(-1, 1));
    EXPECT_EQ(membership(z, ab, 1), membership(z, a, 1) && membership(z, b, 1));
  }
}

TEST(SyntheticBudget, DeterministicAndWithinBudget) {
  const auto a = synthetic_budget_family(3, 12, 99);
  const auto b = synthetic_budget_family(3, 12, 99);
  ASSERT_EQ(a.finite.size(), b.finite.size());
  for (std::size_t i = 0; i < a.finite.size(); ++i) EXPECT_TRUE(same_disc(a.finite[i], b.finite[i]));
  Real total(0);
  for (const auto& d : a.finite) {
    total += d.radius;
    EXPECT_FALSE(d.closure_contains(Complex()));
  }
  EXPECT_LT(total, q(1, 4 * 27));
  const auto one = synthetic_budget_family(1, 1, 5);
  ASSERT_EQ(one.finite.size(), 1u);
  EXPECT_LT(one.finite[0].radius, q(1, 4));
  EXPECT_THROW(synthetic_budget_family(0, 1, 5), InputError);
}

TEST(Affine, IdentityAndCopies) {
  const auto rr = truncate(road_runner(2), 5);
  const auto id = affine_family(rr, Complex(), Real(1));
  for (std::size_t i = 0; i < rr.finite.size(); ++i) EXPECT_TRUE(same_disc(id.finite[i], rr.finite[i]));

  std::vector<AffineCopy> copies;
  for (long m = 2; m <= 6; ++m) copies.push_back({Complex(q(1, m)), q(1, 10 * m * m)});
  EXPECT_FALSE(find_overlapping_copies(copies).has_value());

  const std::vector<AffineCopy> touching{{Complex(0), Real(0.25)}, {Complex(0.5), Real(0.25)}};
  const auto bad = find_overlapping_copies(touching);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->first, 0u);
  EXPECT_EQ(bad->second, 1u);
}

TEST(Affine, TailTransformMatchesFiniteImage) {
  const Complex a(0.25, -0.125);
  const Real rho(0.0625);
  const auto lazy = affine_family(road_runner(3), a, rho).realize(6);
  const auto eager = affine_family(truncate(road_runner(3), 6), a, rho).finite;
  ASSERT_EQ(lazy.size(), eager.size());
  for (std::size_t i = 0; i < lazy.size(); ++i) EXPECT_TRUE(same_disc(lazy[i], eager[i]));
}

TEST(Validate, OriginInsideDisc) {
  const CheeseSpec spec{make_family({Disc(Complex(), Real(0.1))}), ""};
  const auto rep = validate_cheese(spec, 1);
  EXPECT_FALSE(rep.origin_in_realized_cheese);
  EXPECT_FALSE(rep.origin_certified);
}

TEST(Validate, RadiusSumBelowOne) {
  const auto rep = validate_cheese(CheeseSpec{road_runner(1), ""}, 10);
  ASSERT_TRUE(rep.radius_tail.certified());
  ASSERT_TRUE(rep.radius_sum_below_one.has_value());
  EXPECT_TRUE(*rep.radius_sum_below_one);
}

TEST(MakeFamily, DropsDiscsMissingTheUnitDisc) {
  const auto f = make_family({Disc(Complex(3), Real(1)), Disc(Complex(0.5), Real(0.1)), Disc(Complex(2), Real(1))});
  EXPECT_EQ(f.finite.size(), 1u);
  EXPECT_EQ(f.warnings.size(), 2u);
}
