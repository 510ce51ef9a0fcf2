#include <gtest/gtest.h>

#include <algorithm>

#include <gmpxx.h>

#include "cheese/browder.hpp"
#include "cheese/random.hpp"

using namespace cheese;

namespace {

Real q(long num, long den) { return Real(num) / Real(den); }

DiscFamily random_family(std::uint64_t seed, int count) {
  CounterRng rng(seed);
  std::vector<Disc> discs;
  while (static_cast<int>(discs.size()) < count) {
    const Complex c(rng.next_uniform(-0.9, 0.9), rng.next_uniform(-0.9, 0.9));
    const Real r = abs(c) * Real(rng.next_uniform(0.05, 0.5));
    Disc d(c, r);
    bool ok = norm(c) > Real(0.01);
    for (const auto& e : discs) ok = ok && closures_disjoint(d, e);
    if (ok) discs.push_back(std::move(d));
  }
  return make_family(std::move(discs));
}

}  // namespace

TEST(BrowderSum, EmptyFamilyIsUnitTermOnly) {
  for (long m = 0; m <= 4; ++m) {
    const auto rep = browder_sum(DiscFamily{}, m, Complex(), 10);
    EXPECT_EQ(rep.realized_sum, Real(1));
    EXPECT_TRUE(rep.certified());
    EXPECT_EQ(rep.tail.value, Real(0));
    EXPECT_TRUE(rep.includes_unit_disc_term);
  }
}

TEST(BrowderSum, SingleDisc) {
  const auto rep = browder_sum(make_family({Disc(Complex(q(1, 2)), q(1, 4))}), 0, Complex(), 1);
  EXPECT_EQ(rep.realized_sum, Real(2));
  EXPECT_EQ(rep.non_unit_sum, Real(1));
}

TEST(BrowderSum, RoadRunnerOrderOneBelowThree) {
  const auto rep = browder_sum(road_runner(2), 1, Complex(), 30);
  ASSERT_TRUE(rep.certified());
  EXPECT_LE(rep.upper_bound(), Real(3));
  EXPECT_GE(rep.realized_sum, Real(1));
}

TEST(BrowderSum, RoadRunnerAtOrderMIsUnbounded) {
  const auto rep = browder_sum(road_runner(2), 2, Complex(), 30);
  EXPECT_EQ(rep.tail.kind, TailBound::Kind::unbounded);
  EXPECT_FALSE(rep.certified());
}

TEST(BrowderSum, Errors) {
  const auto fam = make_family({Disc(Complex(q(1, 2)), q(1, 4))});
  EXPECT_THROW(browder_sum(fam, 1, Complex(0.5), 1), InputError);
  EXPECT_THROW(browder_sum(fam, 1, Complex(0.25), 1), InputError);
  EXPECT_THROW(browder_sum(fam, 1, Complex(0, 1), 1), InputError);
  EXPECT_THROW(browder_sum(fam, 1, Complex(2), 1), InputError);
  EXPECT_THROW(browder_sum(fam, -1, Complex(), 1), InputError);
}

TEST(BrowderSum, ConditioningWarning) {
  const Real r = q(1, 4);
  const auto fam = make_family({Disc(Complex(r + Real::pow2(-50)), r)});
  const auto rep = browder_sum(fam, 0, Complex(), 1);
  EXPECT_FALSE(rep.warnings.empty());
}

TEST(BrowderSum, UserTailAndTruncatedOnly) {
  auto fam = sqrt_family(road_runner(3));
  fam.tails.front().transforms.push_back(Transform::affine(Complex(), Real(0.5)));
  const auto plain = browder_sum(fam, 1, Complex(), 5);
  EXPECT_EQ(plain.tail.kind, TailBound::Kind::unknown);
  BrowderOptions opts;
  opts.user_tail = Real(0.125);
  const auto user = browder_sum(fam, 1, Complex(), 5, opts);
  EXPECT_TRUE(user.certified());
  EXPECT_EQ(user.upper_bound(), user.realized_sum + Real(0.125));
}

TEST(BrowderSum, PermutationInvariant) {
  auto fam = random_family(3, 12);
  const auto a = browder_sum(fam, 2, Complex(), 1);
  std::reverse(fam.finite.begin(), fam.finite.end());
  const auto b = browder_sum(fam, 2, Complex(), 1);
  EXPECT_LT(abs(a.realized_sum - b.realized_sum) / a.realized_sum, Real::pow2(-100));
}

TEST(BrowderSum, MonotoneInDepth) {
  Real prev(0);
  for (std::size_t depth = 1; depth <= 40; ++depth) {
    const auto rep = browder_sum(road_runner(2), 1, Complex(), depth);
    EXPECT_GE(rep.realized_sum, prev);
    prev = rep.realized_sum;
  }
}

TEST(BrowderSum, TermsAgainstDoublePrecisionRecomputation) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto fam = random_family(seed, 8);
    const Complex a(0.01 * static_cast<double>(seed), -0.02);
    bool inside = false;
    for (const auto& d : fam.finite) inside = inside || d.closure_contains(a);
    if (inside) continue;
    const auto rep = browder_sum(fam, 3, a, 1, {.include_unit_disc = false});
    Real oracle;
    {
      const PrecisionScope hi(256);
      Real sum(0);
      for (const auto& d : fam.finite) {
        const Real dx = Real(d.center.re) - Real(a.re);
        const Real dy = Real(d.center.im) - Real(a.im);
        const Real s = abs(sqrt(dx * dx + dy * dy) - Real(d.radius));
        sum += Real(d.radius) / (s * s * s * s);
      }
      oracle = sum;
    }
    EXPECT_LT(abs(rep.realized_sum - oracle) / oracle, Real::pow2(-64));
  }
}

TEST(RoadRunnerTail, GeometricBoundForOrderMMinusOne) {
  for (long m = 1; m <= 4; ++m) {
    for (std::size_t N : {1u, 5u, 20u}) {
      const Real t = road_runner_tail(m, m - 1, N);
      const Real closed = Real::pow2(m - static_cast<long>(N));
      EXPECT_GE(t, closed);
      EXPECT_LT((t - closed) / closed, Real::pow2(-100));
    }
  }
  EXPECT_THROW(road_runner_tail(2, 2, 5), InputError);
}

TEST(RoadRunnerTail, DominatesBruteForcePartialTail) {
  for (long m = 1; m <= 3; ++m) {
    for (long order = -1; order < m; ++order) {
      for (long N : {1L, 3L, 10L}) {
        const Real bound = road_runner_tail(m, order, static_cast<std::size_t>(N));
        Real partial;
        {
          const PrecisionScope hi(256);
          Real sum(0);
          for (long n = N + 1; n <= N + 10000; ++n) {
            const Real a = Real(1) / (Real(n) * Real::pow2(n));
            const Real r = pow(a, m) / Real::pow2(n);
            sum += order < 0 ? r : r / pow(a - r, order + 1);
          }
          partial = sum;
        }
        EXPECT_GE(bound, partial) << "m=" << m << " order=" << order << " N=" << N;
      }
    }
  }
}

TEST(RoadRunnerTail, DecreasesInN) {
  Real prev = Real::infinity();
  for (std::size_t N = 1; N <= 60; ++N) {
    const Real t = road_runner_tail(3, 1, N);
    EXPECT_LT(t, prev);
    prev = t;
  }
}

TEST(SqrtDecrease, RoadRunnerDepthTwenty) {
  const auto v = sqrt_decrease_check(road_runner(2), 1, 20);
  EXPECT_EQ(v.outcome, Outcome::pass);
  EXPECT_GT(v.comparison.margin.sign(), 0);
}

TEST(SqrtDecrease, TruncatedRoadRunnerAllOrders) {
  const auto fam = truncate(road_runner(2), 20);
  for (long m = 1; m <= 3; ++m) EXPECT_EQ(sqrt_decrease_check(fam, m, 20).outcome, Outcome::pass) << m;
}

TEST(SqrtDecrease, InfiniteRoadRunnerAboveOrderOneIsTruncatedOnly) {
  EXPECT_EQ(sqrt_decrease_check(road_runner(2), 2, 20).outcome, Outcome::truncated_only);
}

TEST(SqrtDecrease, RandomFamilies) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto fam = random_family(seed + 100, 5);
    for (long m = 1; m <= 3; ++m) EXPECT_EQ(sqrt_decrease_check(fam, m, 1).outcome, Outcome::pass);
  }
}

TEST(SqrtDecrease, EmptyFamilyRejected) { EXPECT_THROW(sqrt_decrease_check(DiscFamily{}, 1, 5), InputError); }

TEST(MonotoneOrder, RoadRunnerThree) {
  const auto v = monotone_order_check(road_runner(3), 2, Complex(), 30);
  EXPECT_TRUE(v.passed);
  // k = m is the equality case.
  EXPECT_TRUE(v.sums.back().passed);
  const auto b1 = browder_sum(road_runner(3), 1, Complex(), 30).realized_sum;
  const auto b2 = browder_sum(road_runner(3), 2, Complex(), 30).realized_sum;
  EXPECT_LE(b1, ldexp(b2, 1));
}

TEST(MonotoneOrder, BoundaryDistanceTwo) {
  DiscFamily fam;
  fam.finite.emplace_back(Complex(3), Real(1));
  const auto v = monotone_order_check(fam, 3, Complex(), 1, false);
  EXPECT_TRUE(v.passed);
  for (long k = 0; k <= 3; ++k) {
    const Real lhs = browder_term(Real(1), Real(2), k);
    const Real rhs = ldexp(browder_term(Real(1), Real(2), 3), 3 - k);
    EXPECT_EQ(lhs, rhs);
  }
  DiscFamily far;
  far.finite.emplace_back(Complex(4), Real(1));
  EXPECT_THROW(monotone_order_check(far, 2, Complex(), 1, false), InputError);
}

TEST(InfiniteOrder, GroupsWithinMajorant) {
  for (long m = 1; m <= 3; ++m) {
    const auto v = infinite_order_estimate(10, m);
    EXPECT_TRUE(v.passed) << m;
    ASSERT_EQ(v.groups.size(), 10u);
    // Independent exact majorant sum_{n<=10} 2^(m-1) n^(m+1-n).
    mpq_class majorant = 0;
    for (long n = 1; n <= 10; ++n) {
      mpq_class term = 1;
      const long e = m + 1 - n;
      for (long i = 0; i < std::abs(e); ++i) term *= n;
      if (e < 0) term = 1 / term;
      for (long i = 0; i < m - 1; ++i) term *= 2;
      majorant += term;
    }
    EXPECT_LE(v.total, Real(majorant));
    EXPECT_LT(abs(v.majorant_partial - Real(majorant)) / Real(majorant), Real::pow2(-100));
    EXPECT_GT(v.remainder.sign(), 0);
  }
}

TEST(InfiniteOrder, OrderOneGroupBound) {
  const auto v = infinite_order_estimate(6, 1);
  for (const auto& g : v.groups) {
    const Real bound = pow(Real(g.n), 2 - g.n);
    EXPECT_LE(g.group_sum, bound);
    EXPECT_EQ(g.group_bound, bound);
  }
  EXPECT_EQ(infinite_order_estimate(1, 2).groups.size(), 1u);
}
