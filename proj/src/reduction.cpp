#include "pellpow/reduction.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "pellpow/algebraic.hpp"
#include "pellpow/errors.hpp"

namespace pellpow {

namespace {

BigInt floor_of(const Rational& x) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f;
}

}  // namespace

ContinuedFraction cf_expand(const RealBall& x, const BigInt& min_q, std::size_t extra) {
  ContinuedFraction cf;
  cf.x = x;
  Rational u = x.lower_q();
  Rational v = x.upper_q();
  BigInt p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  bool reached = false;
  std::size_t after = 0;
  for (;;) {
    BigInt a = floor_of(u);
    if (floor_of(v) != a) break;
    Rational fu = u - a;
    Rational fv = v - a;
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    cf.partial_quotients.push_back(a);
    cf.convergents.push_back({p, q});
    cf.certified_count = cf.partial_quotients.size();
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = std::move(p);
    q_prev = std::move(q);
    if (reached) {
      if (++after >= extra) break;
    } else if (q_prev > min_q) {
      reached = true;
      if (extra == 0) break;
    }
    // Both endpoints must stay off the integer a, else the next quotient is
    // not determined by the enclosure.
    if (sgn(fu) <= 0 || sgn(fv) <= 0) break;
    u = 1 / fu;
    v = 1 / fv;
  }
  if (!reached) {
    throw PrecisionError("enclosure exhausted after " + std::to_string(cf.certified_count) +
                         " partial quotients, below the requested denominator");
  }
  return cf;
}

ContinuedFraction cf_expand(const BallSource& x, const BigInt& min_q, long start_bits, long cap_bits,
                            std::size_t extra) {
  return with_precision_retry(start_bits, cap_bits, [&](long bits) { return cf_expand(x(bits), min_q, extra); });
}

RealBall nearest_int_dist(const RealBall& x, std::optional<double> tolerance) {
  const Rational mid = x.mid().to_rational();
  const Rational rad = x.rad().to_rational();
  // nearest integer to the midpoint; ||.|| is 1-Lipschitz
  BigInt n = floor_of(mid + Rational(1, 2));
  Rational d = mid - n;
  if (d < 0) d = -d;
  Rational lo = d - rad;
  Rational hi = d + rad;
  if (lo < 0) lo = 0;
  if (hi > Rational(1, 2)) hi = Rational(1, 2);
  if (tolerance && hi - lo > Rational(*tolerance)) {
    throw PrecisionError("distance to the nearest integer not resolved to the requested tolerance");
  }
  return RealBall::from_endpoints(lo, hi, x.prec());
}

namespace {

enum class EpsState { Positive, NotPositive, Undecided };

struct EpsEval {
  EpsState state;
  RealBall eps;
};

EpsEval evaluate_eps(const ReductionProblem& problem, const RealBall& gamma, long bits, const BigInt& q) {
  const mpfr_prec_t prec = gamma.prec();
  RealBall qb = RealBall::from_bigint(q, prec);
  RealBall mu = problem.mu(bits);
  RealBall eps = nearest_int_dist(mu * qb) - RealBall::from_bigint(problem.M, prec) * nearest_int_dist(gamma * qb);
  Tri pos = eps.is_positive();
  if (pos == Tri::True) return {EpsState::Positive, eps};
  if (pos == Tri::False) return {EpsState::NotPositive, eps};
  return {EpsState::Undecided, eps};
}

double w_from(const ReductionProblem& problem, long bits, const BigInt& q, const RealBall& eps) {
  const mpfr_prec_t prec = eps.prec();
  RealBall eps_lo = RealBall::from_rational(eps.lower_q(), prec);
  RealBall num = RealBall::from_rational(problem.A, prec) * RealBall::from_bigint(q, prec) / eps_lo;
  RealBall w = log(num) / problem.log_base(bits);
  return w.upper_d();
}

void check_problem(const ReductionProblem& p) {
  if (!p.gamma || !p.mu || !p.log_base) throw DomainError("reduction problem is missing an enclosure source");
  if (p.A <= 0) throw DomainError("A must be positive");
  if (p.M < 1) throw DomainError("M must be >= 1");
  if (p.max_attempts < 1) throw DomainError("max_attempts must be >= 1");
}

}  // namespace

ReductionResult bd_reduce(const ReductionProblem& problem) {
  check_problem(problem);
  const BigInt six_m = 6 * problem.M;
  long bits = problem.start_bits;
  int attempt = 0;
  for (;;) {
    RealBall gamma = problem.gamma(bits);
    ContinuedFraction cf;
    try {
      cf = cf_expand(gamma, six_m, static_cast<std::size_t>(problem.max_attempts));
    } catch (const PrecisionError&) {
      if (bits * 2 > problem.cap_bits) throw;
      bits *= 2;
      continue;
    }
    std::size_t first = 0;
    while (cf.convergents[first].q <= six_m) ++first;

    bool escalate = false;
    while (attempt < problem.max_attempts) {
      const std::size_t idx = first + static_cast<std::size_t>(attempt);
      if (idx >= cf.convergents.size()) {
        escalate = true;
        break;
      }
      const BigInt& q = cf.convergents[idx].q;
      EpsEval ev = evaluate_eps(problem, gamma, bits, q);
      if (ev.state == EpsState::Positive) {
        ReductionResult r;
        r.label = problem.label;
        r.convergent_index = idx;
        r.first_index_over_6m = first;
        r.q = q;
        r.epsilon = ev.eps;
        r.w_bound = w_from(problem, bits, q, ev.eps);
        r.attempts = attempt + 1;
        r.bits_used = bits;
        return r;
      }
      if (ev.state == EpsState::Undecided && bits * 2 <= problem.cap_bits) {
        escalate = true;
        break;
      }
      ++attempt;
    }
    if (!escalate) break;
    if (bits * 2 > problem.cap_bits) {
      throw PrecisionError(problem.label + ": precision cap reached during reduction");
    }
    bits *= 2;
  }
  throw ReductionFailure(problem.label + ": no convergent with positive epsilon within " +
                         std::to_string(problem.max_attempts) + " attempts");
}

std::optional<double> w_at_index(const ReductionProblem& problem, std::size_t index) {
  check_problem(problem);
  return with_precision_retry(problem.start_bits, problem.cap_bits, [&](long bits) -> std::optional<double> {
    RealBall gamma = problem.gamma(bits);
    ContinuedFraction cf = cf_expand(gamma, BigInt(0), index + 1);
    if (cf.convergents.size() <= index) throw PrecisionError("convergent index not reachable");
    const BigInt& q = cf.convergents[index].q;
    EpsEval ev = evaluate_eps(problem, gamma, bits, q);
    if (ev.state == EpsState::Undecided) throw PrecisionError("epsilon undecided");
    if (ev.state == EpsState::NotPositive) return std::nullopt;
    return w_from(problem, bits, q, ev.eps);
  });
}

namespace {

// Dominant roots are shared by the 99 problems of one k.
const DominantRoot& cached_root(int k, long bits) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, DominantRoot> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, bits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, dominant_root(k, bits)).first;
  return it->second;
}

long start_bits_for(const BigInt& M) { return std::max<long>(128, 4 * static_cast<long>(decimal_digits(M))); }

}  // namespace

ReductionProblem build_branch1_problem(int k, int y, std::optional<BigInt> M) {
  if (k < 3 || k > 510) throw DomainError("per-k form needs 3 <= k <= 510");
  if (y < 2 || y > 100) throw DomainError("base y must lie in [2, 100]");
  ReductionProblem p;
  p.label = "k=" + std::to_string(k) + " y=" + std::to_string(y);
  p.M = M ? *M : parse_decimal_integer(kBranch1M);
  if (p.M < 1) throw DomainError("M must be >= 1");
  p.A = Rational(97, 50);
  p.start_bits = start_bits_for(p.M);
  p.log_base = [k](long bits) { return log(cached_root(k, bits).alpha); };
  p.gamma = [k, y](long bits) {
    const RealBall& a = cached_root(k, bits).alpha;
    return log_int(y, a.prec()) / log(a);
  };
  p.mu = [k](long bits) {
    const DominantRoot& root = cached_root(k, bits);
    return -log(pell_lucas_coefficient(k, root.alpha)) / log(root.alpha);
  };
  return p;
}

ReductionProblem build_branch2_problem(int y, const BigInt& M) {
  if (y < 2 || y > 100) throw DomainError("base y must lie in [2, 100]");
  if (M < 1) throw DomainError("M must be >= 1");
  ReductionProblem p;
  p.label = "golden y=" + std::to_string(y);
  p.M = M;
  p.A = Rational(11, 4);
  p.start_bits = start_bits_for(M);
  p.log_base = [](long bits) { return log(golden_ratio(bits + 32)); };
  p.gamma = [y](long bits) {
    RealBall phi = golden_ratio(bits + 32);
    return log_int(y, phi.prec()) / log(phi);
  };
  p.mu = [](long bits) {
    RealBall phi = golden_ratio(bits + 32);
    return log((phi + 2) / RealBall::from_int(2, phi.prec())) / log(phi);
  };
  return p;
}

}  // namespace pellpow
