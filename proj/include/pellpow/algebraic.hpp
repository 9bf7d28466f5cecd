#pragma once

// Certified numerics for the characteristic polynomial
//   Psi_k(x) = x^k - 2x^{k-1} - x^{k-2} - ... - x - 1
// of the order-k Pell recurrences: the dominant root alpha(k) in (2, 3),
// the Binet coefficient function g_k, the full root spectrum for small k and
// checks of the classical inequalities relating these quantities.

#include <functional>
#include <string>
#include <vector>

#include "pellpow/ball.hpp"
#include "pellpow/bigint.hpp"
#include "pellpow/errors.hpp"

namespace pellpow {

constexpr long kDefaultPrecisionCap = 4096;

/// Runs `fn(bits)` and, on PrecisionError, retries with doubled precision up
/// to `cap` bits before rethrowing.
template <class Fn>
auto with_precision_retry(long start_bits, long cap_bits, Fn&& fn) -> decltype(fn(start_bits)) {
  long bits = start_bits;
  for (;;) {
    try {
      return fn(bits);
    } catch (const PrecisionError&) {
      if (bits * 2 > cap_bits) throw;
      bits *= 2;
    }
  }
}

/// Exact value of Psi_k at a rational point (Horner).
Rational psi_eval(int k, const Rational& x);

/// Sign of Psi_k(x) for rational x > 1, via the identity
/// (x - 1) Psi_k(x) = x^{k-1} (x^2 - 3x + 1) + 1.
int psi_sign(int k, const Rational& x);

struct DominantRoot {
  int k = 0;
  RealBall alpha;
  /// Exact certificate: Psi_k(bracket_lo) < 0 < Psi_k(bracket_hi), 2 < lo < hi < 3.
  Rational bracket_lo;
  Rational bracket_hi;
  long precision_bits = 0;
};

/// Encloses alpha(k) with radius <= 2^-precision_bits. Newton iteration on
/// x^2 - 3x + 1 + x^{1-k} proposes a dyadic bracket which is then certified
/// by exact sign evaluation; exact bisection takes over if certification
/// of the Newton bracket fails.
DominantRoot dominant_root(int k, long precision_bits);

/// g_k(z) = (z - 1) / ((k+1) z^2 - 3k z + k - 1) on an enclosure.
RealBall g_k(int k, const RealBall& z);
RealBall g_k_value(const DominantRoot& root);

/// The Binet coefficient (2z - 2) g_k(z) of the Pell-Lucas sequence.
RealBall pell_lucas_coefficient(int k, const RealBall& z);
ComplexBall pell_lucas_coefficient(int k, const ComplexBall& z);

/// Lower bound c_k = (3k + sqrt(5k^2 + 4)) / (2k + 2).
RealBall c_k_value(int k, mpfr_prec_t prec);

/// a + b*phi with phi^2 = phi + 1; exact arithmetic in Z[phi].
struct GoldenInt {
  BigInt a;
  BigInt b;

  friend GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y);
  /// Exact sign of a + b*phi.
  int sign() const;
};
GoldenInt pow(const GoldenInt& x, unsigned long n);
/// phi^{-n} = (-1)^n (F_{n+1} - F_n phi).
GoldenInt golden_inverse_power(unsigned long n);
/// Exact sign of Psi_k at an element of Z[phi] that is > 1.
int psi_sign_golden(int k, const GoldenInt& x);

struct ItemCheck {
  bool pass = false;
  std::string method;  // "enclosure", "exact-golden", "bracket", ...
  std::string detail;
};

struct RootInequalityReport {
  int k = 0;
  long precision_bits = 0;  // precision at which every item was decided
  ItemCheck monotone;       // alpha(k) > alpha(k-1), k >= 3
  ItemCheck golden_bounds;  // phi^2 (1 - phi^-k) < alpha < phi^2
  ItemCheck g_bounds;       // 0.276 < g_k(alpha) < 0.5
  ItemCheck c_k_bound;      // c_k < alpha
  ItemCheck quadratic;      // (k+1)t^2 - 3kt + k - 1 > 2 for t in (alpha, phi^2)
  RealBall alpha;
  RealBall g;

  bool all_pass() const {
    return monotone.pass && golden_bounds.pass && g_bounds.pass && c_k_bound.pass && quadratic.pass;
  }
};

/// Checks the root inequalities on certified enclosures, retrying with
/// doubled precision (up to `cap_bits`) while any comparison is inconclusive.
/// The phi^2 comparisons fall back to exact arithmetic in Z[phi] when the
/// enclosure cannot separate alpha from phi^2.
RootInequalityReport root_inequality_report(int k, long precision_bits, long cap_bits = kDefaultPrecisionCap);

struct RootSpectrum {
  int k = 0;
  long precision_bits = 0;
  /// roots[0] is the dominant real root; the rest are complex enclosures.
  std::vector<ComplexBall> roots;
  /// Inclusion disc radii (upper bounds) matching `roots`.
  std::vector<double> radii;
};

constexpr int kMaxSpectrumOrder = 16;

/// All k roots of Psi_k with certified inclusion discs (k <= 16). Fails with
/// PrecisionError if the discs are not pairwise disjoint or a non-dominant
/// root is not certified inside the unit circle.
RootSpectrum root_spectrum(int k, long precision_bits);

/// Modulus upper bound of (z - 1) / (z^2 - 1 + k (z^2 - 3z + 1)) on an enclosure.
double binet_coefficient_magnitude(int k, const ComplexBall& z);

/// Enclosure of sum_j (2 a_j - 2) g_k(a_j) a_j^n over the spectrum.
/// Throws PrecisionError if the enclosure cannot pin down a unique integer.
RealBall binet_reconstruct(int k, long n, const RootSpectrum& spectrum);

/// Enclosure of Q_n - (2 alpha - 2) g_k(alpha) alpha^n.
RealBall dominant_residual(const DominantRoot& root, long n);

struct GrowthReport {
  int k = 0;
  long n_max = 0;
  bool q_bounds = true;     // alpha^{n-1} < Q_n < 2 alpha^n, 1 <= n <= n_max
  bool q_residual = true;   // |Q_n - (2 alpha - 2) g_k(alpha) alpha^n| < 2
  bool p_bounds = true;     // alpha^{n-2} <= P_n <= alpha^{n-1}
  bool p_residual = true;   // |P_n - g_k(alpha) alpha^n| < 1/2
  std::vector<long> failures;  // indices n where any check failed or was undecided
  bool all_pass() const { return q_bounds && q_residual && p_bounds && p_residual; }
};

GrowthReport growth_report(const DominantRoot& root, long n_max);

}  // namespace pellpow
