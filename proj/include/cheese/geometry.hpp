#pragma once

// Disc primitives, the square-root-of-a-disc transform and affine maps.

#include <cmath>
#include <string>

#include "cheese/complex.hpp"
#include "cheese/errors.hpp"

namespace cheese {

/// Open disc D(center, radius) with radius > 0.
struct Disc {
  Complex center;
  Real radius;

  Disc() : radius(1) {}
  Disc(Complex c, Real r) : center(std::move(c)), radius(std::move(r)) {
    if (!center.is_finite() || !radius.is_finite()) throw InputError("disc: non-finite center or radius");
    if (radius.sign() <= 0) throw InputError("disc: radius must be positive, got " + radius.str(17));
  }

  bool contains(const Complex& z) const { return norm(z - center) < radius * radius; }
  bool closure_contains(const Complex& z) const { return norm(z - center) <= radius * radius; }
  std::string str() const { return "D(" + center.str(17) + ", " + radius.str(17) + ")"; }
};

/// Two discs whose union covers the square root of a source disc.
struct SqrtDiscPair {
  Disc delta1;  // centered at the principal square root of the source center
  Disc delta2;  // the reflection of delta1 through the origin
  Real s;       // distance from the origin to the source boundary
};

/// Distance from the boundary circle of `d` to `a`.
inline Real s_dist(const Disc& d, const Complex& a) { return abs(abs(d.center - a) - d.radius); }

/// True when the open unit disc meets `d`.
inline bool intersects_unit_disc(const Disc& d) { return abs(d.center) < Real(1) + d.radius; }

/// True when the closed discs are disjoint.
inline bool closures_disjoint(const Disc& a, const Disc& b) {
  const Real gap = a.radius + b.radius;
  return norm(a.center - b.center) > gap * gap;
}

/// Requires 0 < radius < |center|. The output radius is computed as
/// r / (sqrt|a| + sqrt s), which has no cancellation.
inline SqrtDiscPair sqrt_disc(const Disc& d) {
  if (d.center.is_zero()) throw InputError("sqrt_disc: center must be nonzero");
  const Real modulus = abs(d.center);
  if (!(d.radius < modulus)) {
    throw InputError("sqrt_disc: origin must lie outside the closed disc (radius " + d.radius.str(17) +
                     " >= |center| " + modulus.str(17) + ")");
  }
  Real s = modulus - d.radius;
  const Complex root = sqrt(d.center);
  const Real r = d.radius / (sqrt(modulus) + sqrt(s));
  return SqrtDiscPair{Disc(root, r), Disc(-root, r), std::move(s)};
}

/// The image of `d` under z -> a + rho z.
inline Disc affine_disc(const Disc& d, const Complex& a, const Real& rho) {
  if (!(rho.sign() > 0)) throw InputError("affine_disc: rho must be positive");
  return Disc(a + rho * d.center, rho * d.radius);
}

/// Double-precision shadow of a Disc for fast point classification.
///
/// `side` returns the sign of |p - c|^2 - r^2 (negative inside). The double
/// result is trusted only outside a forward error bound; otherwise the test
/// is redone at working precision from the exact (double) coordinates.
class FastDisc {
 public:
  explicit FastDisc(const Disc& d)
      : exact_(&d), cx_(d.center.re.to_double()), cy_(d.center.im.to_double()), r_(d.radius.to_double()) {}

  int side(double x, double y) const {
    const double dx = x - cx_;
    const double dy = y - cy_;
    const double v = dx * dx + dy * dy - r_ * r_;
    const double ax = std::fabs(x) + std::fabs(cx_);
    const double ay = std::fabs(y) + std::fabs(cy_);
    const double bound = 0x1.0p-48 * (ax * ax + ay * ay + r_ * r_) + 0x1.0p-1000;
    if (v > bound) return 1;
    if (v < -bound) return -1;
    return exact_side(Complex(Real(x), Real(y)));
  }

  /// Classifies w^2 where w = (x, y).
  int side_of_square(double x, double y) const {
    const double zx = x * x - y * y;
    const double zy = 2.0 * x * y;
    const double e = x * x + y * y;
    const double dx = zx - cx_;
    const double dy = zy - cy_;
    const double v = dx * dx + dy * dy - r_ * r_;
    const double ax = std::fabs(zx) + std::fabs(cx_) + e;
    const double ay = std::fabs(zy) + std::fabs(cy_) + e;
    const double bound = 0x1.0p-46 * (ax * ax + ay * ay + r_ * r_) + 0x1.0p-1000;
    if (v > bound) return 1;
    if (v < -bound) return -1;
    const Real rx(x);
    const Real ry(y);
    return exact_side(Complex(rx * rx - ry * ry, ldexp(rx * ry, 1)));
  }

  const Disc& exact() const { return *exact_; }

 private:
  int exact_side(const Complex& z) const {
    const Real v = norm(z - exact_->center) - exact_->radius * exact_->radius;
    return v.sign();
  }

  const Disc* exact_;
  double cx_, cy_, r_;
};

}  // namespace cheese
