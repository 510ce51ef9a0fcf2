#pragma once

// Configurable-precision binary floating point on top of MPFR.
//
// Every new value (temporaries included) is created at the calling thread's
// working precision, which defaults to 128 bits and is changed with
// PrecisionScope. Arithmetic rounds to nearest.

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cheese {

inline constexpr long kDefaultPrecisionBits = 128;

namespace detail {
inline long& thread_precision() {
  thread_local long bits = kDefaultPrecisionBits;
  return bits;
}
}  // namespace detail

/// Working precision (bits) for newly created values on this thread.
inline long precision_bits() { return detail::thread_precision(); }

/// Sets the working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits) : saved_(detail::thread_precision()) {
    if (bits < MPFR_PREC_MIN || bits > 1 << 20) {
      throw std::invalid_argument("precision out of range: " + std::to_string(bits));
    }
    detail::thread_precision() = bits;
  }
  ~PrecisionScope() { detail::thread_precision() = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

class Real {
 public:
  Real() { init(precision_bits()); mpfr_set_zero(v_, 1); }
  Real(double x) { init(precision_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }  // NOLINT
  Real(int x) { init(precision_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }     // NOLINT
  Real(long x) { init(precision_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }    // NOLINT
  Real(long long x) { init(precision_bits()); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }  // NOLINT
  Real(unsigned long x) { init(precision_bits()); mpfr_set_ui(v_, x, MPFR_RNDN); }  // NOLINT
  Real(unsigned x) { init(precision_bits()); mpfr_set_ui(v_, x, MPFR_RNDN); }       // NOLINT
  explicit Real(const mpq_class& q) { init(precision_bits()); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  explicit Real(const mpz_class& z) { init(precision_bits()); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

  Real(const Real& o) {
    init(mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (!live()) {
        init(mpfr_get_prec(o.v_));
      } else {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      }
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    std::swap(v_[0], o.v_[0]);
    return *this;
  }
  ~Real() {
    if (live()) mpfr_clear(v_);
  }

  /// Parses a decimal (or "0x" hexadecimal) literal; the whole string must be consumed.
  static Real from_string(std::string_view text) {
    Real r;
    const std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 0, MPFR_RNDN);
    if (s.empty() || end == nullptr || end == s.c_str() || *end != '\0') {
      throw std::invalid_argument("not a real number: '" + s + "'");
    }
    if (!mpfr_number_p(r.v_)) throw std::invalid_argument("non-finite real: '" + s + "'");
    return r;
  }

  static Real from_rational(const mpq_class& q) { return Real(q); }
  static Real infinity() {
    Real r;
    mpfr_set_inf(r.v_, 1);
    return r;
  }
  static Real pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  /// 2^e exactly.
  static Real pow2(long e) {
    Real r(1);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }
  /// Unit roundoff of the current working precision.
  static Real epsilon() { return pow2(1 - precision_bits()); }

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const { return is_zero() || !is_finite() ? 0 : mpfr_get_exp(v_); }

  /// Decimal string that reads back exactly at this value's precision.
  std::string str() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    mpfr_exp_t exp = 0;
    char* digits = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
    std::string d(digits);
    mpfr_free_str(digits);
    std::string out;
    if (d[0] == '-') {
      out = "-";
      d.erase(0, 1);
    }
    while (d.size() > 1 && d.back() == '0') d.pop_back();
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    const long e = static_cast<long>(exp) - 1;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
  }

  /// Human-oriented rendering with a fixed number of significant digits.
  std::string str(int significant) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", significant, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a) { Real r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend Real sqrt(const Real& x) { Real r; mpfr_sqrt(r.v_, x.v_, MPFR_RNDN); return r; }
  friend Real abs(const Real& x) { Real r; mpfr_abs(r.v_, x.v_, MPFR_RNDN); return r; }
  friend Real hypot(const Real& x, const Real& y) { Real r; mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }
  friend Real pow(const Real& x, long e) { Real r; mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN); return r; }
  friend Real pow(const Real& x, const Real& e) { Real r; mpfr_pow(r.v_, x.v_, e.v_, MPFR_RNDN); return r; }
  friend Real ldexp(const Real& x, long e) { Real r; mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN); return r; }
  friend Real log2(const Real& x) { Real r; mpfr_log2(r.v_, x.v_, MPFR_RNDN); return r; }
  friend Real sin(const Real& x) { Real r; mpfr_sin(r.v_, x.v_, MPFR_RNDN); return r; }
  friend Real cos(const Real& x) { Real r; mpfr_cos(r.v_, x.v_, MPFR_RNDN); return r; }
  friend Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN); return r; }
  friend Real asin(const Real& x) { Real r; mpfr_asin(r.v_, x.v_, MPFR_RNDN); return r; }
  friend Real min(const Real& a, const Real& b) { return a < b ? a : b; }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  void init(mpfr_prec_t p) { mpfr_init2(v_, p); }
  bool live() const { return v_[0]._mpfr_d != nullptr; }

  mpfr_t v_;
};

/// Exact conversion of a rational to the working precision (rounded to nearest).
inline Real to_real(const mpq_class& q) { return Real(q); }

inline std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

}  // namespace cheese
