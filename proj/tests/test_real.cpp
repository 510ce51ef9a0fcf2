#include <gtest/gtest.h>

#include "cheese/check.hpp"
#include "cheese/complex.hpp"
#include "cheese/poly.hpp"
#include "cheese/random.hpp"

using namespace cheese;

TEST(Real, DefaultPrecisionIs128Bits) {
  EXPECT_EQ(precision_bits(), 128);
  EXPECT_EQ(Real(1).precision(), 128);
}

TEST(Real, PrecisionScopeRestores) {
  {
    const PrecisionScope scope(256);
    EXPECT_EQ(Real(0.5).precision(), 256);
  }
  EXPECT_EQ(precision_bits(), 128);
}

TEST(Real, StringRoundTripIsExact) {
  const Real third = Real(1) / Real(3);
  EXPECT_EQ(Real::from_string(third.str()), third);
  const Real tiny = Real::pow2(-1000) / Real(7);
  EXPECT_EQ(Real::from_string(tiny.str()), tiny);
  EXPECT_EQ(Real(-2.5).str(), "-2.5");
  EXPECT_EQ(Real(0).str(), "0");
}

TEST(Real, RejectsGarbage) {
  EXPECT_THROW(Real::from_string("1.5x"), std::invalid_argument);
  EXPECT_THROW(Real::from_string(""), std::invalid_argument);
  EXPECT_THROW(Real::from_string("inf"), std::invalid_argument);
}

TEST(Complex, Arithmetic) {
  const Complex z(1, 1);
  EXPECT_EQ(z * z, Complex(0, 2));
  EXPECT_EQ(Complex(0, 2) / Complex(1, 1), Complex(1, 1));
  EXPECT_EQ(abs(Complex(3, 4)), Real(5));
}

TEST(Complex, PrincipalSqrt) {
  EXPECT_EQ(sqrt(Complex(4)), Complex(2));
  EXPECT_EQ(sqrt(Complex(-4)), Complex(0, 2));
  EXPECT_EQ(sqrt(Complex(0, 2)), Complex(1, 1));
  const Complex w = sqrt(Complex(-3, -4));
  EXPECT_EQ(w, Complex(1, -2));
}

TEST(Check, StrictNeedsMargin) {
  EXPECT_TRUE(strict_less("a", Real(1), Real(2)).passed);
  EXPECT_FALSE(strict_less("a", Real(1), Real(1)).passed);
  EXPECT_FALSE(strict_less("a", Real(1), Real(1) + Real::pow2(-100)).passed);
  EXPECT_TRUE(at_most("a", Real(1), Real(1)).passed);
  EXPECT_FALSE(at_most("a", Real(1) + Real::pow2(-20), Real(1)).passed);
}

TEST(Random, CounterRngIsAPureFunction) {
  const CounterRng a(7);
  const CounterRng b(7);
  EXPECT_EQ(a.bits(3, 5), b.bits(3, 5));
  EXPECT_NE(a.bits(3, 5), a.bits(3, 6));
  EXPECT_NE(CounterRng(8).bits(3, 5), a.bits(3, 5));
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform(1, static_cast<std::uint64_t>(i));
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Poly, TaylorShiftMatchesBinomialExpansion) {
  // (z + 2)^3 = z^3 + 6 z^2 + 12 z + 8
  const Poly<mpq_class> p{0, 0, 0, 1};
  const auto s = taylor_shift(p, mpq_class(2));
  EXPECT_EQ(s, (Poly<mpq_class>{8, 12, 6, 1}));
}

TEST(Poly, SeriesDivideGeometric) {
  const auto q = series_divide(Poly<mpq_class>{1}, Poly<mpq_class>{1, -1}, 6);
  for (const auto& c : q) EXPECT_EQ(c, 1);
}

TEST(Poly, RootsOfKnownPolynomial) {
  const std::vector<Complex> roots{Complex(0.5, 0.25), Complex(-1.5), Complex(0, -2), Complex(3, 1)};
  auto found = polynomial_roots(from_roots(roots));
  ASSERT_EQ(found.size(), roots.size());
  for (const auto& r : roots) {
    Real best = Real::infinity();
    for (const auto& f : found) best = min(best, abs(f - r));
    EXPECT_LT(best, Real::pow2(-100));
  }
}

TEST(Poly, RootsWithMultiplicity) {
  const std::vector<Complex> roots{Complex(0.5), Complex(0.5), Complex(-0.25, 1)};
  for (const auto& f : polynomial_roots(from_roots(roots))) {
    const Real d = min(abs(f - roots[0]), abs(f - roots[2]));
    EXPECT_LT(d, Real::pow2(-50));
  }
}
