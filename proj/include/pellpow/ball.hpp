#pragma once

// Midpoint-radius interval arithmetic on top of MPFR.
//
// A RealBall [m +/- r] encloses a real value; every operation returns a ball
// that encloses the exact result for every choice of inputs inside the
// operand balls. Midpoints are rounded to nearest and the rounding error is
// folded into the radius; radii are kept at 64 bits and always rounded up.

#include <mpfr.h>

#include <string>

#include "pellpow/bigint.hpp"

namespace pellpow {

/// Three-valued outcome of a comparison between enclosures.
enum class Tri { False, True, Unknown };

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  return Tri::Unknown;
}
inline Tri tri_not(Tri a) {
  if (a == Tri::Unknown) return a;
  return a == Tri::True ? Tri::False : Tri::True;
}
const char* to_string(Tri t);

/// Owning RAII handle for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  /// Exact conversion of the (dyadic) value; requires a finite value.
  Rational to_rational() const;
  /// Scientific notation with `digits` significant digits, rounded in `rnd`.
  std::string to_decimal(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

constexpr mpfr_prec_t kRadiusPrec = 64;

class RealBall {
 public:
  /// The exact value zero at `prec` bits.
  explicit RealBall(mpfr_prec_t prec = 64);

  static RealBall from_int(long v, mpfr_prec_t prec);
  static RealBall from_bigint(const BigInt& v, mpfr_prec_t prec);
  static RealBall from_rational(const Rational& v, mpfr_prec_t prec);
  /// Ball covering [lo, hi] exactly (lo <= hi required).
  static RealBall from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  /// Parses an exact decimal string, e.g. "1.94", "2.77e87".
  static RealBall from_decimal(const std::string& text, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mid_.prec(); }
  const Mpfr& mid() const { return mid_; }
  const Mpfr& rad() const { return rad_; }

  /// Rigorous lower / upper endpoints at the midpoint precision.
  Mpfr lower() const;
  Mpfr upper() const;
  double lower_d() const;
  double upper_d() const;
  double mid_d() const { return mid_.to_double(); }
  Rational lower_q() const { return lower().to_rational(); }
  Rational upper_q() const { return upper().to_rational(); }

  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
  bool contains(const BigInt& v) const;
  bool contains(const Rational& v) const;
  bool contains_zero() const;

  Tri is_positive() const;
  Tri is_negative() const;

  /// The midpoint as an exact ball (radius dropped). Not an enclosure of the
  /// original value; used to seed iterations.
  RealBall center() const;

  /// Same value re-rounded to a different midpoint precision.
  RealBall with_prec(mpfr_prec_t prec) const;
  /// Widens the radius by `extra` (rounded up).
  RealBall widened(const Mpfr& extra) const;

  RealBall operator-() const;
  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  friend RealBall operator+(const RealBall& a, long b);
  friend RealBall operator-(const RealBall& a, long b);
  friend RealBall operator*(const RealBall& a, long b);
  friend RealBall operator*(long b, const RealBall& a) { return a * b; }

  friend RealBall log(const RealBall& x);
  friend RealBall exp(const RealBall& x);
  friend RealBall sqrt(const RealBall& x);
  friend RealBall abs(const RealBall& x);

  /// "m +/- r" with the midpoint printed to `digits` significant digits.
  std::string to_string(int digits = 20) const;

 private:
  void add_rounding_error(int ternary);

  Mpfr mid_;
  Mpfr rad_;
};

RealBall pow(const RealBall& x, long n);
RealBall golden_ratio(mpfr_prec_t prec);
RealBall log_int(long v, mpfr_prec_t prec);

/// Certified strict comparisons.
Tri less(const RealBall& a, const RealBall& b);
inline Tri greater(const RealBall& a, const RealBall& b) { return less(b, a); }
Tri less_eq(const RealBall& a, const RealBall& b);

class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}

  const RealBall& re() const { return re_; }
  const RealBall& im() const { return im_; }
  mpfr_prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const RealBall& b);
  friend ComplexBall operator+(const ComplexBall& a, long b);
  friend ComplexBall operator-(const ComplexBall& a, long b);
  friend ComplexBall operator*(const ComplexBall& a, long b);

  /// Upper bound on |z| over the enclosure, rounded up.
  Mpfr abs_upper() const;
  /// Lower bound on |z| over the enclosure, rounded down.
  Mpfr abs_lower() const;

 private:
  RealBall re_;
  RealBall im_;
};

ComplexBall pow(const ComplexBall& z, long n);

}  // namespace pellpow
