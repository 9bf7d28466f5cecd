#include "pellpow/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "pellpow/sequences.hpp"

namespace pellpow {

namespace {

void require_order(int k) {
  if (k < 2) throw DomainError("order k must be >= 2");
}

Rational dyadic(long numerator, long exponent) {
  Rational q(numerator);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-exponent));
  }
  return q;
}

}  // namespace

Rational psi_eval(int k, const Rational& x) {
  require_order(k);
  Rational acc = x - 2;
  for (int i = 1; i < k; ++i) acc = acc * x - 1;
  return acc;
}

int psi_sign(int k, const Rational& x) {
  require_order(k);
  if (x <= 1) return sgn(psi_eval(k, x));
  // Scale by den^{k+1}: num^{k-1} (num^2 - 3 num den + den^2) + den^{k+1}.
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt p, d;
  mpz_pow_ui(p.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k - 1));
  mpz_pow_ui(d.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k + 1));
  BigInt quad = num * num - 3 * num * den + den * den;
  BigInt total = p * quad + d;
  return sgn(total);
}

DominantRoot dominant_root(int k, long precision_bits) {
  require_order(k);
  if (precision_bits < 64) throw DomainError("dominant_root needs at least 64 bits");
  const mpfr_prec_t work = precision_bits + 64;

  // Newton on f(x) = x^2 - 3x + 1 + x^{1-k}. f is convex on x > 0 and
  // f(phi^2) > 0, so the iteration decreases monotonically to alpha.
  Mpfr x(work), fx(work), dfx(work), t(work);
  mpfr_sqrt_ui(x.get(), 5, MPFR_RNDN);
  mpfr_add_ui(x.get(), x.get(), 3, MPFR_RNDN);
  mpfr_div_2ui(x.get(), x.get(), 1, MPFR_RNDN);
  for (int iter = 0; iter < 400; ++iter) {
    mpfr_pow_si(t.get(), x.get(), 1 - k, MPFR_RNDN);
    // f
    mpfr_sub_ui(fx.get(), x.get(), 3, MPFR_RNDN);
    mpfr_mul(fx.get(), fx.get(), x.get(), MPFR_RNDN);
    mpfr_add_ui(fx.get(), fx.get(), 1, MPFR_RNDN);
    mpfr_add(fx.get(), fx.get(), t.get(), MPFR_RNDN);
    // f' = 2x - 3 + (1-k) x^{-k}
    mpfr_div(t.get(), t.get(), x.get(), MPFR_RNDN);
    mpfr_mul_si(t.get(), t.get(), 1 - k, MPFR_RNDN);
    mpfr_mul_2ui(dfx.get(), x.get(), 1, MPFR_RNDN);
    mpfr_sub_ui(dfx.get(), dfx.get(), 3, MPFR_RNDN);
    mpfr_add(dfx.get(), dfx.get(), t.get(), MPFR_RNDN);
    mpfr_div(t.get(), fx.get(), dfx.get(), MPFR_RNDN);
    mpfr_sub(x.get(), x.get(), t.get(), MPFR_RNDN);
    if (mpfr_zero_p(t.get()) || mpfr_get_exp(t.get()) < -(work - 8)) break;
  }

  const Rational half_width = dyadic(1, -(precision_bits + 4));
  const Rational centre = x.to_rational();
  Rational lo = centre - half_width;
  Rational hi = centre + half_width;
  const bool newton_ok = lo > 2 && hi < 3 && psi_sign(k, lo) < 0 && psi_sign(k, hi) > 0;
  if (!newton_ok) {
    // Exact bisection from the a-priori bracket (2, 3).
    lo = 2;
    hi = 3;
    if (psi_sign(k, lo) >= 0 || psi_sign(k, hi) <= 0) {
      throw PrecisionError("Psi_k has no sign change on (2, 3)");
    }
    const Rational target = 2 * half_width;
    while (hi - lo > target) {
      Rational m = (lo + hi) / 2;
      int s = psi_sign(k, m);
      if (s == 0) throw PrecisionError("hit a rational root of Psi_k");
      (s < 0 ? lo : hi) = m;
    }
  }

  DominantRoot root;
  root.k = k;
  root.bracket_lo = lo;
  root.bracket_hi = hi;
  root.precision_bits = precision_bits;
  root.alpha = RealBall::from_endpoints(lo, hi, work);
  return root;
}

RealBall g_k(int k, const RealBall& z) {
  RealBall den = (z * z) * (k + 1) - z * (3L * k) + (k - 1);
  if (den.contains_zero()) throw PrecisionError("g_k denominator enclosure contains zero");
  return (z - 1) / den;
}

RealBall g_k_value(const DominantRoot& root) { return g_k(root.k, root.alpha); }

RealBall pell_lucas_coefficient(int k, const RealBall& z) { return (z - 1) * 2 * g_k(k, z); }

ComplexBall pell_lucas_coefficient(int k, const ComplexBall& z) {
  ComplexBall den = (z * z) * (k + 1) - z * (3L * k) + (k - 1);
  ComplexBall zm1 = z - 1;
  return (zm1 * zm1 * 2) / den;
}

RealBall c_k_value(int k, mpfr_prec_t prec) {
  RealBall disc = RealBall::from_int(5L * k * k + 4, prec);
  return (sqrt(disc) + 3L * k) / RealBall::from_int(2L * k + 2, prec);
}

// ---------------------------------------------------------------------------
// Z[phi]

GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
  BigInt bd = x.b * y.b;
  return {x.a * y.a + bd, x.a * y.b + x.b * y.a + bd};
}

int GoldenInt::sign() const {
  // 2(a + b phi) = (2a + b) + b sqrt(5)
  BigInt u = 2 * a + b;
  const BigInt& v = b;
  int su = sgn(u), sv = sgn(v);
  if (su >= 0 && sv >= 0) return (su == 0 && sv == 0) ? 0 : 1;
  if (su <= 0 && sv <= 0) return -1;
  BigInt diff = u * u - 5 * v * v;  // nonzero: sqrt(5) is irrational
  return su > 0 ? sgn(diff) : -sgn(diff);
}

GoldenInt pow(const GoldenInt& x, unsigned long n) {
  GoldenInt result{1, 0};
  GoldenInt base = x;
  while (n != 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

GoldenInt golden_inverse_power(unsigned long n) {
  BigInt f_n, f_n1;
  mpz_fib2_ui(f_n1.get_mpz_t(), f_n.get_mpz_t(), n + 1);  // F_{n+1}, F_n
  GoldenInt out{f_n1, -f_n};
  if (n % 2 == 1) out = {-out.a, -out.b};
  return out;
}

int psi_sign_golden(int k, const GoldenInt& x) {
  require_order(k);
  // Valid for x > 1: sign Psi_k(x) = sign(x^{k-1} (x^2 - 3x + 1) + 1).
  GoldenInt quad = x * x - GoldenInt{3 * x.a, 3 * x.b} + GoldenInt{1, 0};
  GoldenInt total = pow(x, static_cast<unsigned long>(k - 1)) * quad + GoldenInt{1, 0};
  return total.sign();
}

// ---------------------------------------------------------------------------
// root inequality report

namespace {

// Does (k+1)t^2 - 3kt + k - 1 exceed 2 on all of [lo, hi]? Adaptive
// subdivision of the interval enclosure.
Tri quadratic_exceeds_two(int k, const Rational& lo, const Rational& hi, mpfr_prec_t prec, int depth) {
  RealBall t = RealBall::from_endpoints(lo, hi, prec);
  RealBall h = (t * t) * (k + 1) - t * (3L * k) + (k - 1);
  RealBall two = RealBall::from_int(2, prec);
  Tri r = less(two, h);
  if (r != Tri::Unknown || depth == 0) return r;
  Rational mid = (lo + hi) / 2;
  Tri left = quadratic_exceeds_two(k, lo, mid, prec, depth - 1);
  if (left == Tri::False) return left;
  return tri_and(left, quadratic_exceeds_two(k, mid, hi, prec, depth - 1));
}

ItemCheck decide(Tri t, const std::string& method, const std::string& what) {
  if (t == Tri::Unknown) throw PrecisionError("inconclusive: " + what);
  return {t == Tri::True, method, what};
}

RootInequalityReport root_inequalities_at(int k, long bits) {
  RootInequalityReport rep;
  rep.k = k;
  rep.precision_bits = bits;
  DominantRoot root = dominant_root(k, bits);
  const mpfr_prec_t prec = root.alpha.prec();
  rep.alpha = root.alpha;
  rep.g = g_k_value(root);

  RealBall phi = golden_ratio(prec);
  RealBall phi2 = phi + 1;
  RealBall lower = phi2 - pow(phi, 2 - k);
  Tri upper_enc = less(root.alpha, phi2);
  Tri lower_enc = less(lower, root.alpha);
  if (upper_enc != Tri::Unknown && lower_enc != Tri::Unknown) {
    rep.golden_bounds = {tri_and(upper_enc, lower_enc) == Tri::True, "enclosure",
                         "phi^2(1-phi^-k) < alpha < phi^2"};
  } else {
    // Psi_k has a single positive root (one sign change), so for x > 1 the
    // sign of Psi_k(x) tells on which side of alpha x lies.
    const GoldenInt phi_sq{1, 1};
    const GoldenInt lower_exact = phi_sq - golden_inverse_power(static_cast<unsigned long>(k - 2));
    bool up = psi_sign_golden(k, phi_sq) > 0;
    bool lo = lower_enc == Tri::True || psi_sign_golden(k, lower_exact) < 0;
    rep.golden_bounds = {up && lo, "exact-golden", "sign of Psi_k at phi^2 and phi^2(1-phi^-k) in Z[phi]"};
  }

  RealBall g_lo = RealBall::from_decimal("0.276", prec);
  RealBall g_hi = RealBall::from_decimal("0.5", prec);
  rep.g_bounds = decide(tri_and(less(g_lo, rep.g), less(rep.g, g_hi)), "enclosure", "0.276 < g_k(alpha) < 0.5");
  rep.c_k_bound = decide(less(c_k_value(k, prec), root.alpha), "enclosure", "c_k < alpha");

  const Rational t_lo = root.bracket_lo;
  const Rational t_hi = phi2.upper_q();
  rep.quadratic = decide(quadratic_exceeds_two(k, t_lo, t_hi, prec, 24), "interval-subdivision",
                         "(k+1)t^2 - 3kt + k - 1 > 2 on [alpha_lo, phi^2_hi]");
  return rep;
}

// alpha(k-1) and alpha(k) are only ~phi^{-2k} apart, so this item runs its
// own precision schedule and does not raise the precision of the others.
ItemCheck monotone_at(int k, long bits) {
  DominantRoot root = dominant_root(k, bits);
  DominantRoot prev = dominant_root(k - 1, bits);
  Tri t = less(prev.alpha, root.alpha);
  if (prev.bracket_hi < root.bracket_lo) t = Tri::True;
  ItemCheck c = decide(t, "enclosure", "alpha(k-1) < alpha(k)");
  c.detail += " at " + std::to_string(bits) + " bits";
  return c;
}

}  // namespace

RootInequalityReport root_inequality_report(int k, long precision_bits, long cap_bits) {
  require_order(k);
  RootInequalityReport rep =
      with_precision_retry(precision_bits, cap_bits, [k](long bits) { return root_inequalities_at(k, bits); });
  if (k >= 3) {
    rep.monotone = with_precision_retry(precision_bits, cap_bits, [k](long bits) { return monotone_at(k, bits); });
  } else {
    rep.monotone = {true, "vacuous", "k = 2 has no predecessor"};
  }
  return rep;
}

// ---------------------------------------------------------------------------
// spectrum

namespace {

// Psi_k coefficients, index = degree.
std::vector<long> psi_coefficients(int k) {
  std::vector<long> c(static_cast<std::size_t>(k) + 1, -1);
  c[static_cast<std::size_t>(k)] = 1;
  c[static_cast<std::size_t>(k) - 1] = -2;
  return c;
}

ComplexBall psi_eval_complex(int k, const ComplexBall& z) {
  std::vector<long> c = psi_coefficients(k);
  mpfr_prec_t p = z.prec();
  ComplexBall acc(RealBall::from_int(1, p), RealBall(p));
  for (int d = k - 1; d >= 0; --d) acc = acc * z + c[static_cast<std::size_t>(d)];
  return acc;
}

ComplexBall psi_derivative_complex(int k, const ComplexBall& z) {
  std::vector<long> c = psi_coefficients(k);
  mpfr_prec_t p = z.prec();
  ComplexBall acc(RealBall::from_int(k, p), RealBall(p));
  for (int d = k - 1; d >= 1; --d) acc = acc * z + c[static_cast<std::size_t>(d)] * d;
  return acc;
}

std::vector<std::complex<double>> durand_kerner(int k) {
  std::vector<long> c = psi_coefficients(k);
  auto p = [&](std::complex<double> z) {
    std::complex<double> acc = 1.0;
    for (int d = k - 1; d >= 0; --d) acc = acc * z + static_cast<double>(c[static_cast<std::size_t>(d)]);
    return acc;
  };
  std::vector<std::complex<double>> z(static_cast<std::size_t>(k));
  const std::complex<double> seed(0.4, 0.9);
  for (int i = 0; i < k; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i) * 1.5;
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::complex<double> den = 1.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      std::complex<double> step = p(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  return z;
}

ComplexBall exact_point(const RealBall& re, const RealBall& im) { return {re.center(), im.center()}; }

}  // namespace

RootSpectrum root_spectrum(int k, long precision_bits) {
  require_order(k);
  if (k > kMaxSpectrumOrder) throw DomainError("root_spectrum supports k <= 16");
  const mpfr_prec_t work = precision_bits + 32;

  std::vector<std::complex<double>> approx = durand_kerner(k);
  std::vector<ComplexBall> pts;
  pts.reserve(approx.size());
  for (const auto& a : approx) {
    ComplexBall z(RealBall::from_rational(Rational(a.real()), work), RealBall::from_rational(Rational(a.imag()), work));
    int iters = 8;
    for (long b = 53; b < 2 * work; b *= 2) ++iters;
    for (int i = 0; i < iters; ++i) {
      ComplexBall step = psi_eval_complex(k, z) / psi_derivative_complex(k, z);
      ComplexBall next = z - step;
      z = exact_point(next.re(), next.im());
    }
    pts.push_back(std::move(z));
  }

  // Dominant root first.
  auto dom = std::max_element(pts.begin(), pts.end(),
                              [](const ComplexBall& a, const ComplexBall& b) { return a.re().mid_d() < b.re().mid_d(); });
  std::iter_swap(pts.begin(), dom);

  // Weierstrass corrections W_i = p(z_i) / prod_{j != i} (z_i - z_j) give
  // Gerschgorin discs D(z_i, k |W_i|) containing all roots; when pairwise
  // disjoint each contains exactly one.
  std::vector<Mpfr> radii;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ComplexBall den(RealBall::from_int(1, work), RealBall(work));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) den = den * (pts[i] - pts[j]);
    }
    ComplexBall w = psi_eval_complex(k, pts[i]) / den;
    Mpfr r = w.abs_upper();
    mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(k), MPFR_RNDU);
    radii.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Mpfr sep = (pts[i] - pts[j]).abs_lower();
      Mpfr reach(kRadiusPrec);
      mpfr_add(reach.get(), radii[i].get(), radii[j].get(), MPFR_RNDU);
      if (mpfr_cmp(sep.get(), reach.get()) <= 0) throw PrecisionError("root inclusion discs overlap");
    }
  }

  RootSpectrum spec;
  spec.k = k;
  spec.precision_bits = precision_bits;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ComplexBall disc(pts[i].re().widened(radii[i]), pts[i].im().widened(radii[i]));
    if (i > 0) {
      Mpfr m = disc.abs_upper();
      if (mpfr_cmp_ui(m.get(), 1) >= 0) throw PrecisionError("non-dominant root not certified inside the unit circle");
    }
    spec.radii.push_back(radii[i].to_double(MPFR_RNDU));
    spec.roots.push_back(std::move(disc));
  }
  // The other k-1 discs lie inside the unit circle, so the real root alpha > 2
  // is the one in the first disc; use its tighter real enclosure.
  DominantRoot root = dominant_root(k, precision_bits);
  spec.roots[0] = ComplexBall(root.alpha, RealBall(root.alpha.prec()));
  return spec;
}

double binet_coefficient_magnitude(int k, const ComplexBall& z) {
  ComplexBall z2 = z * z;
  ComplexBall den = (z2 - 1) + (z2 - z * 3 + 1) * k;
  ComplexBall v = (z - 1) / den;
  return v.abs_upper().to_double(MPFR_RNDU);
}

RealBall binet_reconstruct(int k, long n, const RootSpectrum& spectrum) {
  require_order(k);
  if (spectrum.k != k) throw DomainError("spectrum order mismatch");
  if (n < 2 - static_cast<long>(k)) throw DomainError("index below the first defined term");
  mpfr_prec_t p = spectrum.roots.front().prec();
  ComplexBall sum(p);
  for (const ComplexBall& z : spectrum.roots) sum = sum + pell_lucas_coefficient(k, z) * pow(z, n);
  if (!sum.im().contains_zero()) throw PrecisionError("Binet sum has a nonzero imaginary part");
  const RealBall& re = sum.re();
  Mpfr half(kRadiusPrec);
  mpfr_set_d(half.get(), 0.5, MPFR_RNDN);
  if (mpfr_cmp(re.rad().get(), half.get()) >= 0) throw PrecisionError("Binet enclosure too wide to pin an integer");
  return re;
}

RealBall dominant_residual(const DominantRoot& root, long n) {
  BigInt q = term({root.k, Family::PellLucas}, n);
  const RealBall& a = root.alpha;
  return RealBall::from_bigint(q, a.prec()) - pell_lucas_coefficient(root.k, a) * pow(a, n);
}

GrowthReport growth_report(const DominantRoot& root, long n_max) {
  GrowthReport rep;
  rep.k = root.k;
  rep.n_max = n_max;
  const RealBall& a = root.alpha;
  const mpfr_prec_t p = a.prec();
  const RealBall coeff_q = pell_lucas_coefficient(root.k, a);
  const RealBall g = g_k_value(root);
  const RealBall two = RealBall::from_int(2, p);
  const RealBall half = RealBall::from_decimal("0.5", p);

  TermStream qs({root.k, Family::PellLucas});
  TermStream ps({root.k, Family::Pell});
  qs.seek(1);
  ps.seek(1);
  RealBall a_nm2 = RealBall::from_int(1, p) / a;  // alpha^{n-2} at n = 1
  RealBall a_nm1 = RealBall::from_int(1, p);
  for (long n = 1; n <= n_max; ++n) {
    RealBall a_n = a_nm1 * a;
    RealBall q = RealBall::from_bigint(qs.value(), p);
    RealBall pn = RealBall::from_bigint(ps.value(), p);
    bool ok_qb = tri_and(less(a_nm1, q), less(q, a_n * 2)) == Tri::True;
    bool ok_qr = less(abs(q - coeff_q * a_n), two) == Tri::True;
    bool ok_pb = tri_and(less_eq(a_nm2, pn), less_eq(pn, a_nm1)) == Tri::True;
    bool ok_pr = less(abs(pn - g * a_n), half) == Tri::True;
    rep.q_bounds = rep.q_bounds && ok_qb;
    rep.q_residual = rep.q_residual && ok_qr;
    rep.p_bounds = rep.p_bounds && ok_pb;
    rep.p_residual = rep.p_residual && ok_pr;
    if (!(ok_qb && ok_qr && ok_pb && ok_pr)) rep.failures.push_back(n);
    a_nm2 = a_nm1;
    a_nm1 = a_n;
    qs.advance();
    ps.advance();
  }
  return rep;
}

}  // namespace pellpow
