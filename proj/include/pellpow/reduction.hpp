#pragma once

// Continued fractions of certified enclosures and the Baker-Davenport
// reduction in the Dujella-Petho form:
//
//   if q > 6M is a convergent denominator of gamma and
//   eps = ||mu q|| - M ||gamma q|| > 0, then 0 < |u gamma - v + mu| < A B^{-w}
//   has no solution with u <= M and w >= log(A q / eps) / log B.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pellpow/ball.hpp"
#include "pellpow/bigint.hpp"

namespace pellpow {

struct Convergent {
  BigInt p;
  BigInt q;
};

struct ContinuedFraction {
  RealBall x;
  std::vector<BigInt> partial_quotients;
  std::vector<Convergent> convergents;
  /// Number of leading quotients that hold for every point of the enclosure.
  std::size_t certified_count = 0;
};

/// Expands x until a convergent denominator exceeds min_q, then continues
/// for up to `extra` further certified quotients. Throws PrecisionError if
/// the enclosure runs out before a denominator exceeds min_q.
ContinuedFraction cf_expand(const RealBall& x, const BigInt& min_q, std::size_t extra = 0);

/// Produces an enclosure of a fixed real number at the requested precision.
using BallSource = std::function<RealBall(long bits)>;

/// As above, doubling precision from start_bits up to cap_bits on failure.
ContinuedFraction cf_expand(const BallSource& x, const BigInt& min_q, long start_bits, long cap_bits,
                            std::size_t extra = 0);

/// Enclosure of the distance from x to the nearest integer, clipped to
/// [0, 1/2]. With `tolerance` set, throws PrecisionError if the result is
/// wider than that.
RealBall nearest_int_dist(const RealBall& x, std::optional<double> tolerance = std::nullopt);

struct ReductionProblem {
  std::string label;
  BallSource gamma;
  BallSource mu;
  BallSource log_base;  // log B
  Rational A;
  BigInt M;
  long start_bits = 128;
  long cap_bits = 4096;
  int max_attempts = 20;
};

struct ReductionResult {
  std::string label;
  std::size_t convergent_index = 0;    // index of the convergent that succeeded
  std::size_t first_index_over_6m = 0; // first index with q > 6M
  BigInt q;
  RealBall epsilon;
  double w_bound = 0;  // rounded up
  int attempts = 0;    // convergents tried
  long bits_used = 0;
};

/// Runs the reduction starting from the first convergent with q > 6M,
/// moving to the next one while eps is not certified positive. Throws
/// ReductionFailure after max_attempts convergents.
ReductionResult bd_reduce(const ReductionProblem& problem);

/// log(A q_index / eps) / log B at a fixed convergent index, or nullopt when
/// eps is not positive there.
std::optional<double> w_at_index(const ReductionProblem& problem, std::size_t index);

/// Default bound on m for the per-k form.
inline constexpr const char* kBranch1M = "4.9e28";

/// The form |m gamma - n + mu| < 1.94 alpha^{-n} with gamma = log y / log alpha
/// and mu = -log((2 alpha - 2) g_k(alpha)) / log alpha. Requires 3 <= k <= 510 and
/// 2 <= y <= 100.
ReductionProblem build_branch1_problem(int k, int y, std::optional<BigInt> M = std::nullopt);

/// The form |m gamma - (2n + 1) + mu| < 2.75 phi^{-k/2} with gamma = log y / log phi
/// and mu = log((phi + 2) / 2) / log phi. Requires 2 <= y <= 100, M >= 1.
ReductionProblem build_branch2_problem(int y, const BigInt& M);

}  // namespace pellpow
