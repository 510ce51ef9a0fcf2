#pragma once

// Rational functions with cached poles, Taylor functionals
//   delta_{a,m}(f) = f^(m)(a) / m!,
// sup-norm estimates over realized cheeses, the even-part / descent
// construction, and norm-bound experiments against Browder sums.

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cheese/browder.hpp"
#include "cheese/check.hpp"
#include "cheese/families.hpp"
#include "cheese/poly.hpp"

namespace cheese {

struct Pole {
  Complex location;
  unsigned multiplicity = 1;
};

namespace detail {

inline std::vector<Pole> merge_poles(std::vector<Pole> in) {
  std::vector<Pole> out;
  for (auto& p : in) {
    if (p.multiplicity == 0) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const Pole& q) { return q.location == p.location; });
    if (it == out.end()) {
      out.push_back(std::move(p));
    } else {
      it->multiplicity += p.multiplicity;
    }
  }
  return out;
}

/// p(z) / (z - rho), remainder discarded.
inline Poly<Complex> deflate(const Poly<Complex>& p, const Complex& rho) {
  if (p.size() <= 1) return {};
  Poly<Complex> q(p.size() - 1);
  q.back() = p.back();
  for (std::size_t k = p.size() - 2; k > 0; --k) q[k - 1] = p[k] + rho * q[k];
  return q;
}

/// sum |p_i| |z|^i, the natural scale for |p(z)|.
inline Real eval_scale(const Poly<Complex>& p, const Complex& z) {
  const Real r = abs(z);
  Real acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * r + abs(p[i]);
  return acc;
}

inline Real reduction_tolerance() { return Real::pow2(-precision_bits() / 2); }
inline Real pole_cluster_tolerance() { return Real::pow2(-precision_bits() / 4); }

}  // namespace detail

/// num / den in ascending powers, with the distinct poles and multiplicities
/// cached. The zero function has an empty numerator, denominator 1 and no poles.
class RationalFunction {
 public:
  RationalFunction() : den_{Complex(1)} {}

  static RationalFunction constant(const Complex& c) { return polynomial({c}); }
  static RationalFunction polynomial(Poly<Complex> p) { return RationalFunction(trim(std::move(p)), {Complex(1)}, {}); }
  static RationalFunction monomial(unsigned k, const Complex& c = Complex(1)) {
    Poly<Complex> p(k + 1);
    p[k] = c;
    return polynomial(std::move(p));
  }
  /// residue / (z - p).
  static RationalFunction simple_pole(const Complex& residue, const Complex& p) {
    return from_poles({residue}, Complex(1), {Pole{p, 1}});
  }
  /// num / (lead * prod (z - p)^k).
  static RationalFunction from_poles(Poly<Complex> num, const Complex& lead, std::vector<Pole> poles) {
    if (lead.is_zero()) throw InputError("rational function: zero leading denominator coefficient");
    poles = detail::merge_poles(std::move(poles));
    Poly<Complex> den{lead};
    for (const auto& p : poles) {
      for (unsigned i = 0; i < p.multiplicity; ++i) den = mul(den, Poly<Complex>{-p.location, Complex(1)});
    }
    RationalFunction f(trim(std::move(num)), std::move(den), std::move(poles));
    f.reduce();
    return f;
  }
  /// General coefficients; poles are located numerically and clustered.
  static RationalFunction from_coefficients(Poly<Complex> num, Poly<Complex> den) {
    den = trim(std::move(den));
    if (den.empty()) throw InputError("rational function: denominator is identically zero");
    std::vector<Pole> poles;
    const Real tol = detail::pole_cluster_tolerance();
    for (auto& r : polynomial_roots(den)) {
      auto it = std::find_if(poles.begin(), poles.end(), [&](const Pole& p) {
        return abs(p.location - r) <= tol * (Real(1) + abs(r));
      });
      if (it == poles.end()) {
        poles.push_back(Pole{std::move(r), 1});
      } else {
        // Running mean of the cluster.
        const Real k(static_cast<long>(it->multiplicity));
        it->location = (k * it->location + r) / (k + Real(1));
        ++it->multiplicity;
      }
    }
    RationalFunction f(trim(std::move(num)), std::move(den), std::move(poles));
    f.reduce();
    return f;
  }

  const Poly<Complex>& numerator() const { return num_; }
  const Poly<Complex>& denominator() const { return den_; }
  const std::vector<Pole>& poles() const { return poles_; }
  bool is_zero() const { return num_.empty(); }

  /// Throws PoleError when |z - p| <= 2^(-prec/2) max(|z|, |p|) for a pole p.
  void require_regular(const Complex& z) const {
    const Real tol = detail::reduction_tolerance();
    for (const auto& p : poles_) {
      if (abs(z - p.location) <= tol * max(abs(z), abs(p.location))) {
        throw PoleError("rational function: " + z.str(17) + " is at a pole");
      }
    }
  }

  Complex operator()(const Complex& z) const {
    if (is_zero()) return {};
    require_regular(z);
    const Complex d = eval(den_, z);
    if (d.is_zero()) throw PoleError("rational function: denominator vanishes at " + z.str(17));
    return eval(num_, z) / d;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto poles = a.poles_;
    poles.insert(poles.end(), b.poles_.begin(), b.poles_.end());
    RationalFunction f(trim(add(mul(a.num_, b.den_), mul(b.num_, a.den_))), mul(a.den_, b.den_),
                       detail::merge_poles(std::move(poles)));
    f.reduce();
    return f;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto poles = a.poles_;
    poles.insert(poles.end(), b.poles_.begin(), b.poles_.end());
    RationalFunction f(mul(a.num_, b.num_), mul(a.den_, b.den_), detail::merge_poles(std::move(poles)));
    f.reduce();
    return f;
  }
  friend RationalFunction operator*(const Complex& c, const RationalFunction& f) {
    if (c.is_zero()) return {};
    RationalFunction g = f;
    for (auto& x : g.num_) x *= c;
    return g;
  }
  friend RationalFunction operator-(const RationalFunction& f) { return Complex(-1) * f; }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

 private:
  friend RationalFunction compose_square(const RationalFunction& h);
  friend RationalFunction symmetric_descent(const RationalFunction& f);

  RationalFunction(Poly<Complex> num, Poly<Complex> den, std::vector<Pole> poles)
      : num_(std::move(num)), den_(std::move(den)), poles_(std::move(poles)) {
    if (num_.empty()) {
      den_ = {Complex(1)};
      poles_.clear();
    }
  }

  /// Cancels (z - rho) factors where the numerator vanishes at a cached pole.
  void reduce() {
    const Real tol = detail::reduction_tolerance();
    for (auto& p : poles_) {
      while (p.multiplicity > 0 && !num_.empty()) {
        const Real scale = detail::eval_scale(num_, p.location);
        if (!(abs(eval(num_, p.location)) <= tol * scale)) break;
        num_ = trim(detail::deflate(num_, p.location));
        den_ = detail::deflate(den_, p.location);
        --p.multiplicity;
      }
    }
    std::erase_if(poles_, [](const Pole& p) { return p.multiplicity == 0; });
    if (num_.empty()) {
      den_ = {Complex(1)};
      poles_.clear();
    }
  }

  Poly<Complex> num_;
  Poly<Complex> den_;
  std::vector<Pole> poles_;
};

/// Coefficients of (z - a)^0 .. (z - a)^order in the expansion of f at a.
inline Poly<Complex> taylor_coefficients(const RationalFunction& f, const Complex& a, std::size_t order) {
  if (f.is_zero()) return Poly<Complex>(order + 1);
  f.require_regular(a);
  return series_divide(taylor_shift(f.numerator(), a), taylor_shift(f.denominator(), a), order);
}

/// delta_{a,m}(f): the coefficient of (z - a)^m.
inline Complex taylor_functional(const RationalFunction& f, const Complex& a, std::size_t m) {
  return taylor_coefficients(f, a, m)[m];
}

/// Exact delta_{a,m}(num/den) for rational data.
inline mpq_class taylor_functional_exact(const Poly<mpq_class>& num, const Poly<mpq_class>& den, const mpq_class& a,
                                         std::size_t m) {
  return series_divide(taylor_shift(num, a), taylor_shift(den, a), m)[m];
}

/// |a - b| <= tol * max(|a|, |b|) for complex values.
inline Check close_to(std::string name, const Complex& a, const Complex& b, const Real& tol) {
  const Real scale = max(abs(a), abs(b));
  const Real err = scale.is_zero() ? Real(0) : abs(a - b) / scale;
  Check c{std::move(name), err <= tol, tol - err, {}};
  c.detail = a.str(25) + " vs " + b.str(25) + " (rel err " + err.str(4) + ")";
  return c;
}

/// delta_{a,k}(f) = delta_{a,m}((z - a)^(m-k) f).
inline Check relation_delta_shift(const RationalFunction& f, const Complex& a, std::size_t k, std::size_t m,
                                  const Real& tol = strict_margin_epsilon()) {
  if (k < 1 || k > m) throw InputError("relation_delta_shift: requires 1 <= k <= m");
  Poly<Complex> shift{Complex(1)};
  for (std::size_t i = k; i < m; ++i) shift = mul(shift, Poly<Complex>{-a, Complex(1)});
  const RationalFunction g = RationalFunction::polynomial(shift) * f;
  return close_to("delta_{a," + std::to_string(k) + "}(f) = delta_{a," + std::to_string(m) + "}((z-a)^" +
                      std::to_string(m - k) + " f)",
                  taylor_functional(f, a, k), taylor_functional(g, a, m), tol);
}

/// h(z^2).
inline RationalFunction compose_square(const RationalFunction& h) {
  if (h.is_zero()) return {};
  std::vector<Pole> poles;
  for (const auto& p : h.poles()) {
    if (p.location.is_zero()) {
      poles.push_back(Pole{Complex(), 2 * p.multiplicity});
    } else {
      const Complex r = sqrt(p.location);
      poles.push_back(Pole{r, p.multiplicity});
      poles.push_back(Pole{-r, p.multiplicity});
    }
  }
  return RationalFunction(interleave_zeros(h.numerator()), interleave_zeros(h.denominator()), std::move(poles));
}

/// The reduced h with h(z^2) = (f(z) + f(-z)) / 2, built from
///   (p(z) q(-z) + p(-z) q(z)) / (2 q(z) q(-z)),
/// whose numerator and denominator are even polynomials in z.
inline RationalFunction symmetric_descent(const RationalFunction& f) {
  if (f.is_zero()) return {};
  const Poly<Complex>& p = f.numerator();
  const Poly<Complex>& q = f.denominator();
  Poly<Complex> num = trim(even_coefficients(mul(p, reflect(q))));
  Poly<Complex> den = even_coefficients(mul(q, reflect(q)));
  std::vector<Pole> poles;
  for (const auto& pole : f.poles()) poles.push_back(Pole{pole.location * pole.location, pole.multiplicity});
  RationalFunction h(std::move(num), std::move(den), detail::merge_poles(std::move(poles)));
  h.reduce();
  return h;
}

/// g(z) = (f(z) + f(-z)) / 2. Odd coefficients of the result are exact zeros;
/// an odd f yields the exact zero function.
inline RationalFunction even_part(const RationalFunction& f) { return compose_square(symmetric_descent(f)); }

/// True when the odd coefficients of p(z) q(-z) are negligible relative to its largest coefficient.
inline bool is_even(const RationalFunction& g, const Real& tol = detail::reduction_tolerance()) {
  const Poly<Complex> a = mul(g.numerator(), reflect(g.denominator()));
  Real odd(0);
  for (std::size_t i = 1; i < a.size(); i += 2) odd = max(odd, abs(a[i]));
  return odd <= tol * max_abs(a);
}

/// h with g(z) = h(z^2); g must be even.
inline RationalFunction descend_even(const RationalFunction& g) {
  if (!is_even(g)) throw InputError("descend_even: function is not even within tolerance");
  return symmetric_descent(g);
}

struct DescentVerdict {
  bool passed = false;
  bool exact_zero = false;  // all three values are exactly 0
  Complex direct;           // delta_{0,2m}(f)
  Complex via_even;         // delta_{0,2m}(even_part(f))
  Complex descended;        // delta_{0,m}(descend_even(even_part(f)))
  std::vector<Check> checks;
};

/// delta_{0,2m}(f) = delta_{0,2m}(g) = delta_{0,m}(h) with g the even part of f
/// and g(z) = h(z^2).
inline DescentVerdict delta_descent_check(const RationalFunction& f, std::size_t m,
                                          const Real& tol = Real::pow2(-40)) {
  if (m < 1) throw InputError("delta_descent_check: m must be >= 1");
  DescentVerdict v;
  const RationalFunction g = even_part(f);
  const RationalFunction h = descend_even(g);
  v.direct = taylor_functional(f, Complex(), 2 * m);
  v.via_even = taylor_functional(g, Complex(), 2 * m);
  v.descended = taylor_functional(h, Complex(), m);
  v.exact_zero = v.direct.is_zero() && v.via_even.is_zero() && v.descended.is_zero();
  v.checks.push_back(close_to("delta_{0,2m}(f) = delta_{0,2m}(g)", v.direct, v.via_even, tol));
  v.checks.push_back(close_to("delta_{0,2m}(g) = delta_{0,m}(h)", v.via_even, v.descended, tol));
  v.passed = all_passed(v.checks);
  return v;
}

struct SupNormEstimate {
  Real value;     // lower bound on the sup norm over the realized cheese
  Complex where;  // a sample point attaining `value`
  std::size_t points = 0;
};

/// Default pole-membership margin: a pole counts as deleted when it lies
/// within radius (1 - 2^-32) of a realized disc center.
inline Real pole_margin() { return Real::pow2(-32); }

/// Lower bound on sup_K |f| from nested dyadic samples of the unit circle,
/// the realized boundary circles and a square grid; every sample lies in K.
/// The sample set for `samples` is contained in the set for any larger value.
inline SupNormEstimate sup_norm_estimate(const RationalFunction& f, const CheeseSpec& cheese, std::size_t samples,
                                         std::size_t depth) {
  if (samples < 1) throw InputError("sup_norm_estimate: samples must be positive");
  const RealizedCheese k(cheese.family, depth);
  const Real shrink = Real(1) - pole_margin();
  for (const auto& p : f.poles()) {
    if (norm(p.location) > Real(1)) continue;
    const bool deleted = std::any_of(k.discs().begin(), k.discs().end(), [&](const Disc& d) {
      return abs(p.location - d.center) < d.radius * shrink;
    });
    if (!deleted) throw PoleError("sup_norm_estimate: pole " + p.location.str(17) + " lies in K");
  }

  const std::size_t n = std::bit_ceil(std::max<std::size_t>(samples, 4));
  SupNormEstimate est;
  auto visit = [&](double x, double y) {
    if (!k.contains(x, y)) return;
    ++est.points;
    const Complex z(x, y);
    const Real v = abs(f(z));
    if (v > est.value) {
      est.value = v;
      est.where = z;
    }
  };
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n) * two_pi;
    visit(std::cos(t), std::sin(t));
  }
  for (const auto& d : k.discs()) {
    const double cx = d.center.re.to_double();
    const double cy = d.center.im.to_double();
    const double r = d.radius.to_double();
    for (std::size_t j = 0; j < n; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(n) * two_pi;
      visit(cx + r * std::cos(t), cy + r * std::sin(t));
    }
  }
  const std::size_t side = std::size_t{1} << (std::bit_width(n) / 2);
  for (std::size_t i = 0; i <= side; ++i) {
    for (std::size_t j = 0; j <= side; ++j) {
      visit(-1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(side),
            -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(side));
    }
  }
  return est;
}

struct FunctionalSample {
  RationalFunction function;
  Complex delta_value;
  Real norm_estimate;
  bool norm_is_exact = false;
  std::string label;
};

/// a_n = 1 / (2^n n).
inline mpq_class road_runner_center_exact(long n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n));
  den *= n;
  return mpq_class(1, den);
}

/// r_n = a_n^m / 2^n.
inline mpq_class road_runner_radius_exact(long m, long n) {
  const mpq_class a = road_runner_center_exact(n);
  mpq_class r(1);
  for (long i = 0; i < m; ++i) r *= a;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return r / p;
}

/// delta_{0,k}(f_n) for f_n = r_n / (z - a_n), in exact arithmetic.
inline mpq_class road_runner_delta_exact(long m, long n, std::size_t k) {
  const mpq_class a = road_runner_center_exact(n);
  return taylor_functional_exact({road_runner_radius_exact(m, n)}, {-a, mpq_class(1)}, mpq_class(0), k);
}

/// ||f_n||_K = 1 for the road-runner cheese: |f_n| = r_n / |z - a_n| <= 1
/// off D_n, with equality at x = a_n + r_n. Checks exactly that x <= 1 and
/// that x lies outside the neighbouring discs; the discs are ordered along
/// the positive axis (a_j - r_j >= a_j / 2 > a_(j+1)), so the neighbours suffice.
inline Check road_runner_norm_certificate(long m, long n) {
  const mpq_class x = road_runner_center_exact(n) + road_runner_radius_exact(m, n);
  bool ok = x <= 1;
  if (n > 1) ok = ok && x < road_runner_center_exact(n - 1) - road_runner_radius_exact(m, n - 1);
  ok = ok && x > road_runner_center_exact(n + 1) + road_runner_radius_exact(m, n + 1);
  return boolean_check("||f_" + std::to_string(n) + "|| = 1 via a_n + r_n in K", ok, "x = " + x.get_str());
}

/// Exact-norm witnesses on road_runner(m): f_n and (3+4i)/5 f_n for
/// n = 1..n_max, and the monomials z^0..z^(order+1) (norm 1, attained at -1,
/// which lies left of every disc). delta values are taken at (0, order).
inline std::vector<FunctionalSample> road_runner_witnesses(long m, std::size_t order, long n_max) {
  std::vector<FunctionalSample> out;
  const Complex unimodular(Real(3) / Real(5), Real(4) / Real(5));
  for (long n = 1; n <= n_max; ++n) {
    if (!road_runner_norm_certificate(m, n).passed) {
      throw std::logic_error("road_runner_witnesses: norm certificate failed for n = " + std::to_string(n));
    }
    const Complex a(Real(road_runner_center_exact(n)));
    const Complex r(Real(road_runner_radius_exact(m, n)));
    auto fn = RationalFunction::simple_pole(r, a);
    auto rotated = unimodular * fn;
    const Complex d = taylor_functional(fn, Complex(), order);
    const Complex dr = taylor_functional(rotated, Complex(), order);
    out.push_back({std::move(fn), d, Real(1), true, "f_" + std::to_string(n)});
    out.push_back({std::move(rotated), dr, Real(1), true, "(3+4i)/5 f_" + std::to_string(n)});
  }
  for (unsigned j = 0; j <= order + 1; ++j) {
    auto zj = RationalFunction::monomial(j);
    const Complex d = taylor_functional(zj, Complex(), order);
    out.push_back({std::move(zj), d, Real(1), true, "z^" + std::to_string(j)});
  }
  return out;
}

struct NormExperiment {
  bool passed = false;
  BrowderReport browder;
  Real bound;      // certified upper bound B
  Real max_ratio;  // empirical lower bound on the operator norm of delta_{a,m}
  std::string argmax;
  std::size_t witnesses = 0;
  std::vector<Check> violations;
};

/// |delta_{a,m}(f)| <= B ||f|| for every exact-norm witness, with B the
/// certified Browder sum of order m at a.
inline NormExperiment browder_norm_experiment(const CheeseSpec& cheese, const Complex& a, long m,
                                              const std::vector<FunctionalSample>& witnesses, std::size_t depth) {
  NormExperiment e;
  e.browder = browder_sum(cheese.family, m, a, depth);
  if (!e.browder.certified()) {
    throw InputError("browder_norm_experiment: Browder sum of order " + std::to_string(m) +
                     " is not certified finite (tail " + e.browder.tail.provider + ")");
  }
  e.bound = e.browder.upper_bound();
  for (const auto& w : witnesses) {
    if (!w.norm_is_exact) throw InputError("browder_norm_experiment: witness " + w.label + " has no exact norm");
    if (w.norm_estimate.sign() <= 0) continue;
    const Real delta = abs(taylor_functional(w.function, a, static_cast<std::size_t>(m)));
    const Real ratio = delta / w.norm_estimate;
    if (ratio > e.max_ratio) {
      e.max_ratio = ratio;
      e.argmax = w.label;
    }
    Check c = at_most(w.label, delta, e.bound * w.norm_estimate);
    if (!c.passed) e.violations.push_back(std::move(c));
    ++e.witnesses;
  }
  e.passed = e.violations.empty();
  return e;
}

}  // namespace cheese
