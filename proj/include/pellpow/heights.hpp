#pragma once

// Logarithmic heights of the algebraic numbers entering the two linear forms,
// Matveev's lower bound as an evaluator, and the explicit upper bounds on n,
// m and k that follow from it.
//
// Every bound is computed on RealBalls and reported as the upper endpoint
// rounded toward +infinity, so a reported bound is never smaller than the
// mathematical value it stands for.

#include <string>
#include <vector>

#include "pellpow/algebraic.hpp"
#include "pellpow/ball.hpp"

namespace pellpow {

constexpr mpfr_prec_t kBoundPrec = 256;

/// h(a/b) = log max(|a|, b) for coprime a, b with b >= 1.
double height_rational(const BigInt& a, const BigInt& b);

/// (log alpha) / k; throws PrecisionError unless it is certified below (log 3) / k.
double height_alpha(const DominantRoot& root);

/// h(phi) = (log phi) / 2 and h(sqrt(5)/2) = (log 5) / 2 from their minimal polynomials.
double height_golden();
double height_sqrt5_half();

struct HeightComponents {
  double h_two = 0;              // h(2) = log 2
  double h_alpha_minus_one = 0;  // h(alpha - 1) <= log 2
  double h_g = 0;                // h(g_k(alpha)) < 5 log k
  double total = 0;              // h((2 alpha - 2) g_k(alpha)) < 8 log k
};
HeightComponents height_bound_coefficient(int k);

struct LinearFormTerm {
  RealBall gamma;
  double height_bound = 0;  // upper bound on h(gamma)
  long exponent = 0;
};

struct LinearFormSpec {
  int t = 0;
  int D = 1;
  std::vector<LinearFormTerm> terms;
  double B = 1;  // B >= max |b_i|; pass B <= 1 to leave it symbolic
};

struct MatveevBound {
  double constant = 0;     // 1.4 * 30^{t+3} * t^{4.5}
  std::vector<double> A;   // max(D h_i, |log gamma_i|, 0.16)
  double coefficient = 0;  // constant * D^2 (1 + log D) * prod A_i
  double exponent = 0;     // coefficient * (1 + log B); 0 when B is symbolic
};

double matveev_constant(int t);
/// |Lambda| > exp(-exponent) whenever Lambda != 0.
MatveevBound matveev_lower_exponent(const LinearFormSpec& spec);

/// Recomputes the constant in n < c k^4 (log k)^2 log y log n from
/// C * (3 log k) * (3 log n) * (log 3) * 8 / log 2.
struct FixedYCoefficient {
  double matveev_c = 0;
  double derived = 0;
  double published = 1.64e13;
  double relative_error = 0;
  std::string rounding_note;
};
FixedYCoefficient fixed_y_coefficient();

/// Coefficients of the closed form n < c k^4 (log k)^3 at y = 100.
struct ClosedFormCoefficient {
  double y100_derived = 0;            // fixed-y coefficient * log 100, recomputed
  double y100_published = 7.56e13;
  double doubled_published = 15.12e13;
  double derived = 0;                 // 2 * 34 * y100_derived
  double from_published = 0;          // 15.12e13 * 34
  double published = 5.141e15;
  bool log_y100_below_32 = false;     // log(7.56e13) < 32
  bool log_fold_k3 = false;           // 32 + 4 log k + 2 log log k < 34 log k at k = 3 (and increasing gap)
};
ClosedFormCoefficient closed_form_coefficient();

/// n-bound for fixed (k, y): A = 1.64e13 k^4 (log k)^2 log y and n < 2A log A.
/// With `fixed_point` set the tighter largest root of n = A log n is used.
struct NBound {
  int k = 0;
  int y = 0;
  double A = 0;
  double n_bound = 0;
  double m_bound = 0;  // 1.73 * n_bound
  bool fixed_point = false;
};
NBound fixed_y_n_bound(int k, int y, bool fixed_point = false);

/// 5.141e15 k^4 (log k)^3 rounded up.
double closed_form_n_bound(double k);

/// -log(1 - a) / a for a in (0, 1).
double log_ratio_factor(double a);

/// Rounds x > 0 up to `digits` significant decimal digits.
double round_up_sig(double x, int digits = 3);

struct BoundStep {
  std::string name;
  std::string anchor;
  double value = 0;
  double published = 0;
  double relative_error = 0;
  bool pass = false;
  std::string note;
};

struct BoundReport {
  std::string provenance;
  std::string k_range;
  std::string y_range;
  std::vector<BoundStep> steps;
  std::vector<ItemCheck> facts;
  double k_bound = 0;
  double n_bound = 0;
  double m_bound = 0;
  bool all_pass() const;
};

/// |g_k(alpha) - 1/(phi + 2)| < 4k / phi^k and phi^2 - alpha < phi^{2-k},
/// certified with precision retry.
ItemCheck golden_approximation_check(int k, long precision_bits = 512, long cap_bits = kDefaultPrecisionCap);

/// The k > 510 chain: Matveev coefficient of the golden-ratio form, the
/// linear k-bound in log n, log n < 38 log k, the k-bound, and the induced
/// n- and m-bounds. The default follows the published chain, whose linear
/// coefficient is c * 2.3 / log phi. With `corrected` the factor 2 from
/// solving (k/2) log phi < c (1 + log 2n) for k is kept and the rest of the
/// chain is recomputed from there.
BoundReport large_k_bounds(bool corrected = false);

}  // namespace pellpow
