#include "pellpow/ball.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "pellpow/errors.hpp"

namespace pellpow {

// ---------------------------------------------------------------------------
// decimal parsing

Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_len;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw DomainError("not a decimal number: '" + std::string(text) + "'");
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::string exp_text(text.substr(i));
    if (exp_text.empty()) throw DomainError("missing exponent in '" + std::string(text) + "'");
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw DomainError("bad exponent in '" + std::string(text) + "'");
    }
    i += used;
  }
  if (i != text.size()) throw DomainError("trailing characters in '" + std::string(text) + "'");

  BigInt numerator(digits, 10);
  if (negative) numerator = -numerator;
  long shift = exponent - frac_len;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational out = shift >= 0 ? Rational(numerator * scale) : Rational(numerator, scale);
  out.canonicalize();
  return out;
}

BigInt parse_decimal_integer(std::string_view text) {
  Rational q = parse_decimal(text);
  if (q.get_den() != 1) throw DomainError("not an integer: '" + std::string(text) + "'");
  return q.get_num();
}

std::size_t decimal_digits(const BigInt& v) {
  BigInt a = abs(v);
  return a.get_str().size();
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "unknown";
  }
}

// ---------------------------------------------------------------------------
// Mpfr

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

Rational Mpfr::to_rational() const {
  if (!mpfr_number_p(value_)) throw PrecisionError("non-finite MPFR value");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string Mpfr::to_decimal(int digits, mpfr_rnd_t rnd) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*R*e", std::max(digits - 1, 0), rnd, value_);
  std::string out(buf ? buf : "");
  mpfr_free_str(buf);
  return out;
}

// ---------------------------------------------------------------------------
// RealBall

namespace {

Mpfr abs_copy(const Mpfr& x) {
  Mpfr out(x.prec());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);  // exact
  return out;
}

// rad_out += a * b, rounded up; a may be negative.
void add_abs_product(Mpfr& rad_out, const Mpfr& a, const Mpfr& b) {
  Mpfr t(kRadiusPrec);
  Mpfr aa = abs_copy(a);
  Mpfr bb = abs_copy(b);
  mpfr_mul(t.get(), aa.get(), bb.get(), MPFR_RNDU);
  mpfr_add(rad_out.get(), rad_out.get(), t.get(), MPFR_RNDU);
}

}  // namespace

RealBall::RealBall(mpfr_prec_t prec) : mid_(prec), rad_(kRadiusPrec) {}

void RealBall::add_rounding_error(int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid_.get())) return;
  Mpfr err(kRadiusPrec);
  mpfr_set_ui_2exp(err.get(), 1, mpfr_get_exp(mid_.get()) - mid_.prec(), MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), err.get(), MPFR_RNDU);
}

RealBall RealBall::from_int(long v, mpfr_prec_t prec) {
  RealBall out(prec);
  out.add_rounding_error(mpfr_set_si(out.mid_.get(), v, MPFR_RNDN));
  return out;
}

RealBall RealBall::from_bigint(const BigInt& v, mpfr_prec_t prec) {
  RealBall out(prec);
  out.add_rounding_error(mpfr_set_z(out.mid_.get(), v.get_mpz_t(), MPFR_RNDN));
  return out;
}

RealBall RealBall::from_rational(const Rational& v, mpfr_prec_t prec) {
  RealBall out(prec);
  out.add_rounding_error(mpfr_set_q(out.mid_.get(), v.get_mpq_t(), MPFR_RNDN));
  return out;
}

RealBall RealBall::from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  if (lo > hi) throw DomainError("from_endpoints: lo > hi");
  RealBall out(prec);
  Rational centre = (lo + hi) / 2;
  mpfr_set_q(out.mid_.get(), centre.get_mpq_t(), MPFR_RNDN);
  Rational m = out.mid_.to_rational();
  Rational spread = std::max(Rational(hi - m), Rational(m - lo));
  mpfr_set_q(out.rad_.get(), spread.get_mpq_t(), MPFR_RNDU);
  return out;
}

RealBall RealBall::from_decimal(const std::string& text, mpfr_prec_t prec) {
  return from_rational(parse_decimal(text), prec);
}

Mpfr RealBall::lower() const {
  Mpfr out(prec());
  mpfr_sub(out.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return out;
}

Mpfr RealBall::upper() const {
  Mpfr out(prec());
  mpfr_add(out.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return out;
}

double RealBall::lower_d() const { return lower().to_double(MPFR_RNDD); }
double RealBall::upper_d() const { return upper().to_double(MPFR_RNDU); }

bool RealBall::contains(const BigInt& v) const {
  return mpfr_cmp_z(lower().get(), v.get_mpz_t()) <= 0 && mpfr_cmp_z(upper().get(), v.get_mpz_t()) >= 0;
}

bool RealBall::contains(const Rational& v) const {
  return mpfr_cmp_q(lower().get(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(upper().get(), v.get_mpq_t()) >= 0;
}

bool RealBall::contains_zero() const {
  return mpfr_sgn(lower().get()) <= 0 && mpfr_sgn(upper().get()) >= 0;
}

Tri RealBall::is_positive() const {
  if (mpfr_sgn(lower().get()) > 0) return Tri::True;
  if (mpfr_sgn(upper().get()) <= 0) return Tri::False;
  return Tri::Unknown;
}

Tri RealBall::is_negative() const {
  if (mpfr_sgn(upper().get()) < 0) return Tri::True;
  if (mpfr_sgn(lower().get()) >= 0) return Tri::False;
  return Tri::Unknown;
}

RealBall RealBall::center() const {
  RealBall out(prec());
  mpfr_set(out.mid_.get(), mid_.get(), MPFR_RNDN);
  return out;
}

RealBall RealBall::with_prec(mpfr_prec_t prec) const {
  RealBall out(prec);
  out.rad_ = rad_;
  out.add_rounding_error(mpfr_set(out.mid_.get(), mid_.get(), MPFR_RNDN));
  return out;
}

RealBall RealBall::widened(const Mpfr& extra) const {
  RealBall out = *this;
  Mpfr e = abs_copy(extra);
  mpfr_add(out.rad_.get(), out.rad_.get(), e.get(), MPFR_RNDU);
  return out;
}

RealBall RealBall::operator-() const {
  RealBall out = *this;
  mpfr_neg(out.mid_.get(), mid_.get(), MPFR_RNDN);
  return out;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall out(std::max(a.prec(), b.prec()));
  int t = mpfr_add(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(out.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  RealBall out(std::max(a.prec(), b.prec()));
  int t = mpfr_sub(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(out.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  RealBall out(std::max(a.prec(), b.prec()));
  int t = mpfr_mul(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  add_abs_product(out.rad_, a.mid_, b.rad_);
  add_abs_product(out.rad_, b.mid_, a.rad_);
  add_abs_product(out.rad_, a.rad_, b.rad_);
  out.add_rounding_error(t);
  return out;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  Mpfr bm = abs_copy(b.mid_);
  Mpfr gap(kRadiusPrec);
  mpfr_sub(gap.get(), bm.get(), b.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(gap.get()) <= 0) throw PrecisionError("division by a ball containing zero");

  RealBall out(std::max(a.prec(), b.prec()));
  int t = mpfr_div(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |a/b - am/bm| <= (|am| rb + |bm| ra) / (|bm| (|bm| - rb))
  Mpfr num(kRadiusPrec);
  add_abs_product(num, a.mid_, b.rad_);
  add_abs_product(num, b.mid_, a.rad_);
  Mpfr den(kRadiusPrec);
  mpfr_mul(den.get(), bm.get(), gap.get(), MPFR_RNDD);
  mpfr_div(out.rad_.get(), num.get(), den.get(), MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

RealBall operator+(const RealBall& a, long b) { return a + RealBall::from_int(b, a.prec()); }
RealBall operator-(const RealBall& a, long b) { return a - RealBall::from_int(b, a.prec()); }
RealBall operator*(const RealBall& a, long b) { return a * RealBall::from_int(b, a.prec()); }

RealBall log(const RealBall& x) {
  Mpfr lo(kRadiusPrec);
  mpfr_sub(lo.get(), x.mid_.get(), x.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(lo.get()) <= 0) throw PrecisionError("log of a ball reaching nonpositive values");
  RealBall out(x.prec());
  int t = mpfr_log(out.mid_.get(), x.mid_.get(), MPFR_RNDN);
  mpfr_div(out.rad_.get(), x.rad_.get(), lo.get(), MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

RealBall exp(const RealBall& x) {
  RealBall out(x.prec());
  int t = mpfr_exp(out.mid_.get(), x.mid_.get(), MPFR_RNDN);
  Mpfr hi(kRadiusPrec);
  mpfr_add(hi.get(), x.mid_.get(), x.rad_.get(), MPFR_RNDU);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  mpfr_mul(out.rad_.get(), x.rad_.get(), hi.get(), MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

RealBall sqrt(const RealBall& x) {
  Mpfr lo(kRadiusPrec);
  mpfr_sub(lo.get(), x.mid_.get(), x.rad_.get(), MPFR_RNDD);
  if (x.is_exact() && mpfr_sgn(x.mid_.get()) == 0) return x;
  if (mpfr_sgn(lo.get()) <= 0) throw PrecisionError("sqrt of a ball reaching nonpositive values");
  RealBall out(x.prec());
  int t = mpfr_sqrt(out.mid_.get(), x.mid_.get(), MPFR_RNDN);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_mul_ui(lo.get(), lo.get(), 2, MPFR_RNDD);
  mpfr_div(out.rad_.get(), x.rad_.get(), lo.get(), MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

RealBall abs(const RealBall& x) {
  RealBall out = x;
  mpfr_abs(out.mid_.get(), x.mid_.get(), MPFR_RNDN);
  return out;
}

std::string RealBall::to_string(int digits) const {
  return mid_.to_decimal(digits) + " +/- " + rad_.to_decimal(3, MPFR_RNDU);
}

RealBall pow(const RealBall& x, long n) {
  if (n < 0) return RealBall::from_int(1, x.prec()) / pow(x, -n);
  RealBall result = RealBall::from_int(1, x.prec());
  RealBall base = x;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

RealBall golden_ratio(mpfr_prec_t prec) {
  RealBall s = sqrt(RealBall::from_int(5, prec));
  return (s + 1) / RealBall::from_int(2, prec);
}

RealBall log_int(long v, mpfr_prec_t prec) { return log(RealBall::from_int(v, prec)); }

Tri less(const RealBall& a, const RealBall& b) { return (b - a).is_positive(); }

Tri less_eq(const RealBall& a, const RealBall& b) {
  RealBall d = b - a;
  if (mpfr_sgn(d.lower().get()) >= 0) return Tri::True;
  if (mpfr_sgn(d.upper().get()) < 0) return Tri::False;
  return Tri::Unknown;
}

// ---------------------------------------------------------------------------
// ComplexBall

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  RealBall den = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

ComplexBall operator*(const ComplexBall& a, const RealBall& b) { return {a.re_ * b, a.im_ * b}; }
ComplexBall operator+(const ComplexBall& a, long b) { return {a.re_ + b, a.im_}; }
ComplexBall operator-(const ComplexBall& a, long b) { return {a.re_ - b, a.im_}; }
ComplexBall operator*(const ComplexBall& a, long b) { return {a.re_ * b, a.im_ * b}; }

namespace {

Mpfr abs_max(const RealBall& x) {
  Mpfr out(kRadiusPrec);
  Mpfr m = abs_copy(x.mid());
  mpfr_add(out.get(), m.get(), x.rad().get(), MPFR_RNDU);
  return out;
}

Mpfr abs_min(const RealBall& x) {
  Mpfr out(kRadiusPrec);
  Mpfr m = abs_copy(x.mid());
  mpfr_sub(out.get(), m.get(), x.rad().get(), MPFR_RNDD);
  if (mpfr_sgn(out.get()) < 0) mpfr_set_zero(out.get(), 1);
  return out;
}

Mpfr hypot_dir(const Mpfr& x, const Mpfr& y, mpfr_rnd_t rnd) {
  Mpfr a(kRadiusPrec), b(kRadiusPrec);
  mpfr_sqr(a.get(), x.get(), rnd);
  mpfr_sqr(b.get(), y.get(), rnd);
  mpfr_add(a.get(), a.get(), b.get(), rnd);
  mpfr_sqrt(a.get(), a.get(), rnd);
  return a;
}

}  // namespace

Mpfr ComplexBall::abs_upper() const { return hypot_dir(abs_max(re_), abs_max(im_), MPFR_RNDU); }
Mpfr ComplexBall::abs_lower() const { return hypot_dir(abs_min(re_), abs_min(im_), MPFR_RNDD); }

ComplexBall pow(const ComplexBall& z, long n) {
  mpfr_prec_t p = z.prec();
  ComplexBall one(RealBall::from_int(1, p), RealBall(p));
  if (n < 0) return one / pow(z, -n);
  ComplexBall result = one;
  ComplexBall base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

}  // namespace pellpow
