#pragma once

#include <string>

#include "cheese/real.hpp"

namespace cheese {

/// A point of the plane at working precision.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT
  Complex(double r) : re(r), im(0) {}           // NOLINT
  Complex(int r) : re(r), im(0) {}              // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i) : re(r), im(i) {}

  static Complex polar(const Real& radius, const Real& angle) {
    return {radius * cos(angle), radius * sin(angle)};
  }

  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
  Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // Smith's scaling avoids overflow for badly scaled operands.
    if (abs(b.re) >= abs(b.im)) {
      const Real t = b.im / b.re;
      const Real d = b.re + b.im * t;
      return {(a.re + a.im * t) / d, (a.im - a.re * t) / d};
    }
    const Real t = b.re / b.im;
    const Real d = b.re * t + b.im;
    return {(a.re * t + a.im) / d, (a.im * t - a.re) / d};
  }
  friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  std::string str(int significant = 20) const {
    return "(" + re.str(significant) + ", " + im.str(significant) + ")";
  }
};

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

/// Principal square root (branch cut on the negative real axis).
inline Complex sqrt(const Complex& z) {
  if (z.is_zero()) return {};
  const Real m = abs(z);
  Real re = sqrt(ldexp(m + abs(z.re), -1));
  if (z.re.sign() >= 0) {
    return {re, z.im / ldexp(re, 1)};
  }
  Real im = z.im.sign() < 0 ? -re : re;
  return {abs(z.im) / ldexp(re, 1), im};
}

inline Complex pow(const Complex& z, unsigned e) {
  Complex result(1);
  Complex base = z;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

inline std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(25); }

}  // namespace cheese
