#include <mpfr.h>

#include <cmath>
#include <complex>

#include "doctest.h"
#include "pellpow/algebraic.hpp"
#include "pellpow/sequences.hpp"

using namespace pellpow;

namespace {

// Bisection on Psi_k evaluated term by term in plain MPFR.
double oracle_root_error(int k, const RealBall& alpha) {
  const mpfr_prec_t prec = 320;
  mpfr_t lo, hi, mid, acc, term;
  mpfr_inits2(prec, lo, hi, mid, acc, term, (mpfr_ptr)0);
  mpfr_set_ui(lo, 2, MPFR_RNDN);
  mpfr_set_ui(hi, 3, MPFR_RNDN);
  for (int it = 0; it < 280; ++it) {
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    mpfr_pow_ui(acc, mid, static_cast<unsigned long>(k), MPFR_RNDN);
    for (int j = 0; j < k; ++j) {
      mpfr_pow_ui(term, mid, static_cast<unsigned long>(j), MPFR_RNDN);
      if (j == k - 1) mpfr_mul_ui(term, term, 2, MPFR_RNDN);
      mpfr_sub(acc, acc, term, MPFR_RNDN);
    }
    if (mpfr_sgn(acc) < 0) mpfr_set(lo, mid, MPFR_RNDN);
    else mpfr_set(hi, mid, MPFR_RNDN);
  }
  mpfr_sub(acc, lo, alpha.mid().get(), MPFR_RNDN);
  const double err = std::fabs(mpfr_get_d(acc, MPFR_RNDN));
  mpfr_clears(lo, hi, mid, acc, term, (mpfr_ptr)0);
  return err;
}

}  // namespace

TEST_CASE("psi sign agrees with direct evaluation") {
  for (int k = 2; k <= 12; ++k) {
    for (int num = 201; num <= 299; num += 7) {
      Rational x(num, 100);
      x.canonicalize();
      Rational direct = 0, p = 1;
      for (int j = 0; j < k; ++j) {
        direct -= (j == k - 1 ? 2 : 1) * p;
        p *= x;
      }
      direct += p;
      CHECK(psi_eval(k, x) == direct);
      CHECK(psi_sign(k, x) == sgn(direct));
    }
  }
}

TEST_CASE("dominant root against bisection") {
  for (int k : {2, 3, 4, 7, 20, 64}) {
    DominantRoot r = dominant_root(k, 256);
    CHECK(oracle_root_error(k, r.alpha) < 1e-70);
    CHECK(r.alpha.rad().to_double(MPFR_RNDU) <= std::ldexp(1.0, -256));
    CHECK(psi_sign(k, r.bracket_lo) < 0);
    CHECK(psi_sign(k, r.bracket_hi) > 0);
  }
  // k = 2: alpha = 1 + sqrt 2
  DominantRoot r2 = dominant_root(2, 128);
  CHECK(std::fabs(r2.alpha.mid_d() - (1 + std::sqrt(2.0))) < 1e-15);
  CHECK_THROWS_AS(dominant_root(1, 64), DomainError);
}

TEST_CASE("golden integers") {
  GoldenInt phi{0, 1};
  GoldenInt p5 = pow(phi, 5);  // phi^5 = 3 + 5 phi
  CHECK(p5.a == 3);
  CHECK(p5.b == 5);
  for (unsigned long n : {1ul, 2ul, 9ul, 40ul}) {
    GoldenInt one = pow(phi, n) * golden_inverse_power(n);
    CHECK(one.a == 1);
    CHECK(one.b == 0);
  }
  const double phid = (1 + std::sqrt(5.0)) / 2;
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      const double v = static_cast<double>(a) + static_cast<double>(b) * phid;
      CHECK(GoldenInt{a, b}.sign() == (v > 0) - (v < 0));
    }
  }
  // phi^2 lies above every dominant root
  for (int k : {3, 10, 600}) CHECK(psi_sign_golden(k, GoldenInt{1, 1}) > 0);
}

TEST_CASE("root inequality report") {
  for (int k : {2, 3, 5, 17, 200}) {
    RootInequalityReport r = root_inequality_report(k, 256);
    CHECK(r.all_pass());
  }
  // alpha and phi^2 agree to about 0.7 k bits, so k = 900 needs the exact branch at 256 bits
  RootInequalityReport r = root_inequality_report(900, 256);
  CHECK(r.precision_bits == 256);
  CHECK(r.golden_bounds.pass);
  CHECK(r.golden_bounds.method == "exact-golden");
  CHECK(r.g_bounds.pass);
}

TEST_CASE("g_k and c_k") {
  DominantRoot r = dominant_root(3, 128);
  const double a = r.alpha.mid_d();
  const double g = (a - 1) / (4 * a * a - 9 * a + 2);
  CHECK(std::fabs(g_k_value(r).mid_d() - g) < 1e-14);
  CHECK(std::fabs(c_k_value(3, 128).mid_d() - (9 + std::sqrt(49.0)) / 8) < 1e-15);
}

TEST_CASE("spectrum and Binet sum") {
  for (int k = 2; k <= 8; ++k) {
    RootSpectrum s = root_spectrum(k, 192);
    REQUIRE(s.roots.size() == static_cast<std::size_t>(k));
    // sum of the roots is 2, their product is (-1)^{k+1}
    std::complex<double> sum = 0, prod = 1;
    for (const auto& z : s.roots) {
      std::complex<double> c(z.re().mid_d(), z.im().mid_d());
      sum += c;
      prod *= c;
    }
    CHECK(std::abs(sum - 2.0) < 1e-12);
    CHECK(std::abs(prod - std::complex<double>(k % 2 ? 1 : -1, 0)) < 1e-12);
    for (std::size_t i = 1; i < s.roots.size(); ++i) CHECK(s.roots[i].abs_upper().to_double(MPFR_RNDU) < 1);
    for (long n : {0L, 1L, 10L, 45L}) CHECK(binet_reconstruct(k, n, s).contains(term(SeqParams{k, Family::PellLucas}, n)));
  }
  CHECK_THROWS_AS(root_spectrum(kMaxSpectrumOrder + 1, 128), DomainError);
}

TEST_CASE("growth bounds") {
  for (int k : {2, 3, 9, 50}) {
    GrowthReport g = growth_report(dominant_root(k, 256), 100);
    CHECK(g.all_pass());
    CHECK(g.failures.empty());
  }
  CHECK(abs(dominant_residual(dominant_root(4, 256), 10)).upper_d() < 2);
}

TEST_CASE("precision retry doubles until success") {
  int calls = 0;
  long used = with_precision_retry(64, 1024, [&](long bits) {
    ++calls;
    if (bits < 512) throw PrecisionError("more");
    return bits;
  });
  CHECK(used == 512);
  CHECK(calls == 4);
  CHECK_THROWS_AS(with_precision_retry(64, 256, [](long) -> int { throw PrecisionError("never"); }), PrecisionError);
}
