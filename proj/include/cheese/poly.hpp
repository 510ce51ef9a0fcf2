#pragma once

// Dense polynomials in ascending-power order over Complex or mpq_class, and
// an Aberth-Ehrlich root finder at working precision.

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "cheese/complex.hpp"
#include "cheese/errors.hpp"

namespace cheese {

template <class T>
using Poly = std::vector<T>;

inline bool is_zero_coeff(const Complex& c) { return c.is_zero(); }
inline bool is_zero_coeff(const mpq_class& c) { return sgn(c) == 0; }

/// Drops trailing exact zeros; the zero polynomial becomes empty.
template <class T>
Poly<T> trim(Poly<T> p) {
  while (!p.empty() && is_zero_coeff(p.back())) p.pop_back();
  return p;
}

/// Degree, or -1 for the zero polynomial.
template <class T>
long degree(const Poly<T>& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
    if (!is_zero_coeff(p[static_cast<std::size_t>(i)])) return i;
  }
  return -1;
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> out(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero_coeff(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class T>
Poly<T> scale(const Poly<T>& p, const T& s) {
  Poly<T> out = p;
  for (auto& c : out) c *= s;
  return out;
}

/// p(-z).
template <class T>
Poly<T> reflect(const Poly<T>& p) {
  Poly<T> out = p;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

template <class T>
T eval(const Poly<T>& p, const T& z) {
  T acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.size() <= 1) return {};
  Poly<T> out(p.size() - 1, T(0));
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * T(static_cast<int>(i));
  return out;
}

/// Coefficients of p(z + a), by repeated synthetic division.
template <class T>
Poly<T> taylor_shift(const Poly<T>& p, const T& a) {
  Poly<T> c = p;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  }
  return c;
}

/// First order+1 coefficients of num/den as a power series; den[0] != 0.
template <class T>
Poly<T> series_divide(const Poly<T>& num, const Poly<T>& den, std::size_t order) {
  if (den.empty() || is_zero_coeff(den[0])) throw PoleError("series_divide: denominator vanishes at the expansion point");
  Poly<T> q(order + 1, T(0));
  for (std::size_t k = 0; k <= order; ++k) {
    T acc = k < num.size() ? num[k] : T(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

/// Coefficients of z^(2i) in p(z), i.e. the polynomial P with P(z^2) = even part of p.
template <class T>
Poly<T> even_coefficients(const Poly<T>& p) {
  Poly<T> out;
  for (std::size_t i = 0; i < p.size(); i += 2) out.push_back(p[i]);
  return out;
}

/// P(z^2) from P.
template <class T>
Poly<T> interleave_zeros(const Poly<T>& p) {
  if (p.empty()) return {};
  Poly<T> out(2 * p.size() - 1, T(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[2 * i] = p[i];
  return out;
}

/// Monic polynomial with the given roots.
inline Poly<Complex> from_roots(const std::vector<Complex>& roots) {
  Poly<Complex> p{Complex(1)};
  for (const auto& r : roots) p = mul(p, Poly<Complex>{-r, Complex(1)});
  return p;
}

inline Real max_abs(const Poly<Complex>& p) {
  Real m(0);
  for (const auto& c : p) m = max(m, abs(c));
  return m;
}

inline Poly<Complex> to_complex(const Poly<mpq_class>& p) {
  Poly<Complex> out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(Real(c));
  return out;
}

/// All roots of p (with repetition), by simultaneous Aberth-Ehrlich
/// iteration at working precision.
inline std::vector<Complex> polynomial_roots(const Poly<Complex>& p_in) {
  const Poly<Complex> p = trim(p_in);
  const long n = degree(p);
  if (n < 0) throw InputError("polynomial_roots: zero polynomial");
  if (n == 0) return {};
  std::size_t leading_zeros = 0;
  while (p[leading_zeros].is_zero()) ++leading_zeros;
  std::vector<Complex> roots(leading_zeros);
  const Poly<Complex> q(p.begin() + static_cast<long>(leading_zeros), p.end());
  const long d = static_cast<long>(q.size()) - 1;
  if (d == 0) return roots;
  if (d == 1) {
    roots.push_back(-q[0] / q[1]);
    return roots;
  }

  // Fujiwara-type radius for the initial circle.
  const Complex& lead = q.back();
  Real radius(0);
  for (long i = 0; i < d; ++i) {
    const Real t = pow(abs(q[static_cast<std::size_t>(i)] / lead), Real(1) / Real(d - i));
    radius = max(radius, t);
  }
  radius = ldexp(radius, 1);
  if (radius.is_zero()) radius = Real(1);

  const Poly<Complex> dq = derivative(q);
  std::vector<Complex> z;
  const Real two_pi = ldexp(Real::pi(), 1);
  for (long k = 0; k < d; ++k) {
    const Real angle = two_pi * Real(k) / Real(d) + Real(0.4);
    z.push_back(Complex::polar(radius, angle));
  }
  const Real tol = Real::pow2(8 - precision_bits());
  std::vector<bool> done(static_cast<std::size_t>(d), false);
  for (int iter = 0; iter < 2000; ++iter) {
    bool all_done = true;
    for (long k = 0; k < d; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      if (done[ku]) continue;
      const Complex pv = eval(q, z[ku]);
      if (pv.is_zero()) {
        done[ku] = true;
        continue;
      }
      const Complex ratio = pv / eval(dq, z[ku]);
      Complex sum;
      for (long j = 0; j < d; ++j) {
        if (j != k) sum += Complex(1) / (z[ku] - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (Complex(1) - ratio * sum);
      z[ku] -= step;
      if (abs(step) <= tol * (Real(1) + abs(z[ku]))) {
        done[ku] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  for (auto& r : z) roots.push_back(std::move(r));
  return roots;
}

}  // namespace cheese
