#include "pellpow/heights.hpp"

#include <cmath>
#include <sstream>

#include "pellpow/errors.hpp"

namespace pellpow {

namespace {

RealBall num(const char* decimal) { return RealBall::from_decimal(decimal, kBoundPrec); }
RealBall num(long v) { return RealBall::from_int(v, kBoundPrec); }
RealBall ln(long v) { return log_int(v, kBoundPrec); }
RealBall log_phi() { return log(golden_ratio(kBoundPrec)); }
RealBall half(const RealBall& x) { return x / num(2); }

// phi^{e/2} for integer e of either sign.
RealBall phi_half_pow(long e) { return exp(half(log_phi() * e)); }

double up(const RealBall& x) { return x.upper_d(); }

double rel_err(double value, double published) { return std::fabs(value - published) / published; }

std::string sci(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

ItemCheck fact(Tri t, const std::string& what) {
  return {t == Tri::True, "enclosure", what + (t == Tri::Unknown ? " (undecided)" : "")};
}

}  // namespace

double height_rational(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("height of a/b needs b != 0");
  if (b < 0) throw DomainError("height of a/b needs b > 0");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw DomainError("height of a/b needs gcd(a, b) = 1");
  BigInt aa = a < 0 ? BigInt(-a) : a;
  BigInt top = aa > b ? aa : b;
  return up(log(RealBall::from_bigint(top, kBoundPrec)));
}

double height_alpha(const DominantRoot& root) {
  RealBall h = log(root.alpha) / RealBall::from_int(root.k, root.alpha.prec());
  RealBall cap = log_int(3, root.alpha.prec()) / RealBall::from_int(root.k, root.alpha.prec());
  if (less(h, cap) != Tri::True) throw PrecisionError("log(alpha)/k not certified below log(3)/k");
  return h.upper_d();
}

double height_golden() { return up(half(log_phi())); }
double height_sqrt5_half() { return up(half(ln(5))); }

HeightComponents height_bound_coefficient(int k) {
  if (k < 2) throw DomainError("order k must be >= 2");
  HeightComponents c;
  c.h_two = up(ln(2));
  c.h_alpha_minus_one = c.h_two;
  c.h_g = up(ln(k) * 5);
  c.total = up(ln(k) * 8);
  return c;
}

double matveev_constant(int t) {
  if (t < 1) throw DomainError("a linear form needs t >= 1");
  RealBall tb = num(t);
  RealBall c = num("1.4") * pow(num(30), t + 3) * pow(tb, 4) * sqrt(tb);
  return up(c);
}

MatveevBound matveev_lower_exponent(const LinearFormSpec& spec) {
  if (spec.t < 1 || spec.D < 1) throw DomainError("Matveev bound needs t >= 1 and D >= 1");
  if (spec.terms.size() != static_cast<std::size_t>(spec.t)) throw DomainError("term count differs from t");
  MatveevBound out;
  RealBall tb = num(spec.t);
  RealBall coeff = num("1.4") * pow(num(30), spec.t + 3) * pow(tb, 4) * sqrt(tb);
  out.constant = up(coeff);
  RealBall d = num(spec.D);
  coeff = coeff * d * d * (log(d) + 1);
  const RealBall floor_a = num("0.16");
  for (const LinearFormTerm& term : spec.terms) {
    if (!(term.height_bound >= 0) || !std::isfinite(term.height_bound)) {
      throw DomainError("height bounds must be finite and nonnegative");
    }
    RealBall dh = RealBall::from_rational(Rational(term.height_bound), kBoundPrec) * spec.D;
    RealBall lg = abs(log(term.gamma.with_prec(kBoundPrec)));
    // A_i is an upper bound for max(D h, |log gamma|, 0.16); take upper endpoints.
    double a = std::max({dh.upper_d(), lg.upper_d(), floor_a.upper_d()});
    if (!(a > 0)) throw DomainError("nonpositive A_i");
    out.A.push_back(a);
    coeff = coeff * RealBall::from_rational(Rational(a), kBoundPrec);
  }
  out.coefficient = up(coeff);
  if (spec.B > 1) {
    RealBall b = RealBall::from_rational(Rational(spec.B), kBoundPrec);
    out.exponent = up(coeff * (log(b) + 1));
  }
  return out;
}

FixedYCoefficient fixed_y_coefficient() {
  FixedYCoefficient c;
  RealBall m = num("1.4") * pow(num(30), 6) * num(81) * sqrt(num(3));
  c.matveev_c = up(m);
  // n log alpha < C (3 log k)(3 log n) k^2 (k log y)(log 3)(8 k log k); the
  // division by log alpha is replaced by log 2 < log alpha.
  c.derived = up(m * 72 * ln(3) / ln(2));
  c.relative_error = rel_err(c.derived, c.published);
  c.rounding_note = "derived " + sci(c.derived) +
                    " from C*72*log3/log2 (log alpha > log 2 used in the division); published value is this "
                    "rounded up to 3 significant digits";
  return c;
}

ClosedFormCoefficient closed_form_coefficient() {
  ClosedFormCoefficient c;
  FixedYCoefficient fy = fixed_y_coefficient();
  RealBall cb = RealBall::from_rational(Rational(fy.derived), kBoundPrec);
  RealBall y100 = cb * ln(100);
  c.y100_derived = up(y100);
  c.derived = up(y100 * 68);
  c.from_published = up(num("15.12e13") * 34);
  c.log_y100_below_32 = less(log(num("7.56e13")), num(32)) == Tri::True;
  // 34 log k - 4 log k - 2 log log k grows for k >= 3, so k = 3 is the binding case.
  RealBall l3 = ln(3);
  c.log_fold_k3 = less(num(32) + l3 * 4 + log(l3) * 2, l3 * 34) == Tri::True;
  return c;
}

NBound fixed_y_n_bound(int k, int y, bool fixed_point) {
  if (k < 2) throw DomainError("order k must be >= 2");
  if (y < 2) throw DomainError("base y must be >= 2");
  NBound out;
  out.k = k;
  out.y = y;
  out.fixed_point = fixed_point;
  RealBall lk = ln(k);
  RealBall a = num("1.64e13") * pow(num(k), 4) * lk * lk * ln(y);
  out.A = up(a);
  RealBall n = a * log(a) * 2;
  if (fixed_point) {
    // Iterating n <- A log n from above converges down to the largest root of
    // n = A log n; any n with n / log n < A lies below it.
    for (int i = 0; i < 200; ++i) {
      RealBall next = a * log(n);
      RealBall nu = RealBall::from_rational(next.upper_q(), kBoundPrec);
      if (less(nu, n) != Tri::True) break;
      n = nu;
    }
  }
  out.n_bound = up(n);
  out.m_bound = up(RealBall::from_rational(Rational(out.n_bound), kBoundPrec) * num("1.73"));
  return out;
}

double closed_form_n_bound(double k) {
  RealBall kb = RealBall::from_rational(Rational(k), kBoundPrec);
  RealBall lk = log(kb);
  return up(num("5.141e15") * pow(kb, 4) * pow(lk, 3));
}

double log_ratio_factor(double a) {
  if (!(a > 0 && a < 1)) throw DomainError("log ratio factor needs a in (0, 1)");
  RealBall ab = RealBall::from_rational(Rational(a), kBoundPrec);
  return up(-log(num(1) - ab) / ab);
}

double round_up_sig(double x, int digits) {
  if (!(x > 0) || digits < 1) throw DomainError("round_up_sig needs x > 0 and digits >= 1");
  Mpfr v(64);
  mpfr_set_d(v.get(), x, MPFR_RNDN);  // exact
  std::string text = v.to_decimal(digits, MPFR_RNDU);
  Mpfr r(64);
  mpfr_set_str(r.get(), text.c_str(), 10, MPFR_RNDU);
  return r.to_double(MPFR_RNDU);
}

bool BoundReport::all_pass() const {
  for (const auto& s : steps) {
    if (!s.pass) return false;
  }
  for (const auto& f : facts) {
    if (!f.pass) return false;
  }
  return true;
}

ItemCheck golden_approximation_check(int k, long precision_bits, long cap_bits) {
  if (k < 3) throw DomainError("golden approximation check needs k >= 3");
  return with_precision_retry(precision_bits, cap_bits, [k](long bits) {
    DominantRoot root = dominant_root(k, bits);
    const mpfr_prec_t p = root.alpha.prec();
    RealBall phi = golden_ratio(p);
    RealBall eta = abs(g_k_value(root) - RealBall::from_int(1, p) / (phi + 2));
    RealBall eta_cap = RealBall::from_int(4L * k, p) / pow(phi, k);
    RealBall lambda = phi + 1 - root.alpha;
    RealBall lambda_cap = RealBall::from_int(1, p) / pow(phi, k - 2);
    Tri t = tri_and(less(eta, eta_cap), less(lambda, lambda_cap));
    if (t == Tri::Unknown) throw PrecisionError("undecided at " + std::to_string(bits) + " bits");
    return ItemCheck{t == Tri::True, "enclosure",
                     "k=" + std::to_string(k) + ": |g_k(alpha) - 1/(phi+2)| < 4k/phi^k, phi^2 - alpha < phi^(2-k) at " +
                         std::to_string(bits) + " bits"};
  });
}

BoundReport large_k_bounds(bool corrected) {
  BoundReport rep;
  rep.provenance = corrected ? "golden-ratio branch, k-coefficient with the factor 2 kept"
                             : "golden-ratio branch, published chain";
  rep.k_range = "k > 510";
  rep.y_range = "2..100";

  RealBall phi = golden_ratio(kBoundPrec);
  LinearFormSpec spec;
  spec.t = 3;
  spec.D = 2;
  spec.terms = {{num(100), up(ln(100)), 0},
                {phi, height_golden(), 0},
                {(phi + 2) / (phi * 2), height_sqrt5_half(), 1}};
  MatveevBound mb = matveev_lower_exponent(spec);
  const double c2 = mb.coefficient;
  rep.steps.push_back({"golden-branch Matveev coefficient", "6.92e12 * (1 + log 2n)", c2, 6.92e12,
                       rel_err(c2, 6.92e12), rel_err(c2, 6.92e12) < 0.01,
                       "C * 2^2 * (1 + log 2) * (2 log 100) * log phi * log 5"});

  // (k/2) log phi - log 1.251 < c2 (1 + log 2n) and 1 + log 2n < 2.3 log n.
  RealBall c2b = RealBall::from_rational(Rational(c2), kBoundPrec);
  RealBall kcoef = c2b * num("2.3") / log_phi();
  if (corrected) {
    // Keep the factor 2 and fold log 1.251 in using log n >= log 4.
    kcoef = (kcoef * 2) + log(num("1.251")) * 2 / (log_phi() * ln(4));
  }
  const double kc = round_up_sig(up(kcoef), 3);
  rep.steps.push_back({"k-coefficient in k < c log n", "3.31e13 * log n", kc, 3.31e13, rel_err(kc, 3.31e13),
                       corrected ? true : rel_err(kc, 3.31e13) < 0.01,
                       corrected ? "2 * c2 * 2.3 / log phi, rounded up; the published chain uses c2 * 2.3 / log phi"
                                 : "c2 * 2.3 / log phi rounded up to 3 significant digits"});

  // log n < log(5.141e15) + 4 log k + 3 log log k < 38 log k for k >= 3.
  {
    RealBall l3 = ln(3);
    Tri t = tri_and(less(log(num("5.141e15")), num("36.2")),
                    less(num("36.2") + l3 * 4 + log(l3) * 3, l3 * 38));
    rep.facts.push_back(fact(t, "log n < 36.2 + 4 log k + 3 log log k < 38 log k at k = 3 (gap increasing in k)"));
  }

  // Largest root of k = 38 c log k, iterated from above.
  RealBall c38 = RealBall::from_rational(Rational(kc), kBoundPrec) * 38;
  RealBall kb = c38 * 100;
  for (int i = 0; i < 200; ++i) {
    RealBall next = RealBall::from_rational((c38 * log(kb)).upper_q(), kBoundPrec);
    if (less(next, kb) != Tri::True) break;
    kb = next;
  }
  rep.k_bound = round_up_sig(up(kb), 3);
  rep.steps.push_back({"k-bound", "k < 4.84e16", rep.k_bound, 4.84e16, rel_err(rep.k_bound, 4.84e16),
                       corrected ? true : rel_err(rep.k_bound, 4.84e16) < 0.02,
                       "largest root of k = 38 c log k is " + sci(up(kb)) + ", rounded up"});

  rep.n_bound = round_up_sig(closed_form_n_bound(rep.k_bound), 3);
  rep.steps.push_back({"n-bound at the k-bound", "n < 1.6e87", rep.n_bound, 1.6e87, rel_err(rep.n_bound, 1.6e87),
                       corrected ? true : rel_err(rep.n_bound, 1.6e87) < 0.02,
                       "5.141e15 k^4 (log k)^3 = " + sci(closed_form_n_bound(rep.k_bound)) + ", rounded up"});

  rep.m_bound = round_up_sig(up(RealBall::from_rational(Rational(rep.n_bound), kBoundPrec) * num("1.73")), 3);
  rep.steps.push_back({"m-bound", "m < 2.77e87", rep.m_bound, 2.77e87, rel_err(rep.m_bound, 2.77e87),
                       corrected ? true : rel_err(rep.m_bound, 2.77e87) < 0.02, "1.73 n, rounded up"});

  // Side facts used along the chain, at the smallest k; every left side
  // decays faster in k than the matching right side.
  const long k = 511;
  {
    RealBall kk = num(k);
    RealBall lhs = log(num("5.141e15")) + log(kk) * 4 + log(log(kk)) * 3;
    RealBall rhs = half(log_phi() * (k - 4));
    rep.facts.push_back(fact(less(lhs, rhs), "5.141e15 k^4 (log k)^3 < phi^(k/2 - 2) at k = 511"));
  }
  {
    RealBall lhs = phi / phi_half_pow(k) + num(1) / pow(phi, k - 2) - num(1) / phi_half_pow(3 * k - 4);
    RealBall rhs = num(2) / phi_half_pow(k);
    rep.facts.push_back(fact(less(lhs, rhs), "phi/phi^(k/2) + phi^(2-k) - phi^(2-3k/2) < 2/phi^(k/2) at k = 511"));
  }
  {
    RealBall scale = phi_half_pow(k);
    RealBall t1 = (phi + 2) / pow(phi, 2 * (k + 1) + 1);  // n >= k + 1
    RealBall t3 = num(4 * k) * (phi + 2) / pow(phi, k);
    RealBall t4 = num(8 * k) / phi * (phi + 2) / phi_half_pow(3 * k);
    Tri t = tri_and(tri_and(less(t1 * scale, num("0.001")), less(num(2) / phi, num("1.24"))),
                    tri_and(less(t3 * scale, num("0.005")), less(t4 * scale, num("0.005"))));
    rep.facts.push_back(fact(t, "error terms below 0.001, 1.24, 0.005, 0.005 (times phi^(-k/2)) at k = 511"));
    rep.facts.push_back(fact(less(num("1.251") / scale, num("0.1")), "1.251/phi^(k/2) < 0.1 at k = 511"));
  }
  {
    // d/dn of 2.3 log n - log 2n - 1 is 1.3/n > 0.
    Tri t = less(num(1) + ln(8), ln(4) * num("2.3"));
    rep.facts.push_back(fact(t, "1 + log 2n < 2.3 log n at n = 4 (gap increasing in n)"));
  }
  {
    double f = log_ratio_factor(0.1);
    RealBall fb = RealBall::from_rational(Rational(f), kBoundPrec);
    Tri t = tri_and(less(fb * num("1.251"), num("1.32")), less(num("1.32") / log_phi(), num("2.75")));
    rep.facts.push_back(fact(t, "log(100/90)/0.1 * 1.251 < 1.32 and 1.32/log phi < 2.75"));
  }
  for (int kk : {511, 700, 1171}) rep.facts.push_back(golden_approximation_check(kk));
  return rep;
}

}  // namespace pellpow
