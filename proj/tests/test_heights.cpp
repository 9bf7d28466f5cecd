#include <cmath>

#include "doctest.h"
#include "pellpow/heights.hpp"

using namespace pellpow;

TEST_CASE("heights of simple numbers") {
  CHECK(height_rational(1, 2) == doctest::Approx(std::log(2.0)));
  CHECK(height_rational(-7, 3) == doctest::Approx(std::log(7.0)));
  CHECK(height_golden() == doctest::Approx(std::log((1 + std::sqrt(5.0)) / 2) / 2));
  CHECK(height_sqrt5_half() == doctest::Approx(std::log(5.0) / 2));
  DominantRoot r = dominant_root(5, 128);
  CHECK(height_alpha(r) == doctest::Approx(std::log(r.alpha.mid_d()) / 5));
  CHECK(height_alpha(r) < std::log(3.0) / 5);
}

TEST_CASE("coefficient height decomposition") {
  for (int k : {3, 10, 510}) {
    HeightComponents h = height_bound_coefficient(k);
    CHECK(h.h_two == doctest::Approx(std::log(2.0)));
    CHECK(h.h_alpha_minus_one <= std::log(2.0) + 1e-12);
    CHECK(h.total >= 8 * std::log(static_cast<double>(k)));
    CHECK(h.total == doctest::Approx(8 * std::log(static_cast<double>(k))));
    CHECK(h.total >= h.h_g);
  }
}

TEST_CASE("Matveev constant") {
  for (int t : {2, 3, 4}) {
    const double want = 1.4 * std::pow(30.0, t + 3) * std::pow(t, 4.5);
    CHECK(matveev_constant(t) == doctest::Approx(want).epsilon(1e-12));
    CHECK(matveev_constant(t) >= want * (1 - 1e-15));
  }
}

TEST_CASE("Matveev evaluator on a hand computation") {
  LinearFormSpec s;
  s.t = 2;
  s.D = 1;
  s.terms = {{RealBall::from_int(2, kBoundPrec), std::log(2.0), 1}, {RealBall::from_int(3, kBoundPrec), std::log(3.0), 1}};
  s.B = 10;
  MatveevBound b = matveev_lower_exponent(s);
  const double c = 1.4 * std::pow(30.0, 5) * std::pow(2.0, 4.5);
  REQUIRE(b.A.size() == 2);
  CHECK(b.A[0] == doctest::Approx(std::log(2.0)));
  CHECK(b.coefficient == doctest::Approx(c * std::log(2.0) * std::log(3.0)).epsilon(1e-9));
  CHECK(b.exponent == doctest::Approx(b.coefficient * (1 + std::log(10.0))).epsilon(1e-9));
  s.t = 3;
  CHECK_THROWS_AS(matveev_lower_exponent(s), DomainError);
}

TEST_CASE("published constants are recomputed") {
  FixedYCoefficient fy = fixed_y_coefficient();
  CHECK(fy.derived == doctest::Approx(1.64e13).epsilon(0.01));
  CHECK(fy.derived <= fy.published);
  ClosedFormCoefficient cf = closed_form_coefficient();
  CHECK(cf.derived == doctest::Approx(5.141e15).epsilon(0.01));
  CHECK(cf.from_published == doctest::Approx(15.12e13 * 34));
  CHECK(cf.log_y100_below_32);
  CHECK(cf.log_fold_k3);
}

TEST_CASE("n bounds") {
  NBound b = fixed_y_n_bound(510, 100);
  const double lk = std::log(510.0);
  const double A = 1.64e13 * std::pow(510.0, 4) * lk * lk * std::log(100.0);
  CHECK(b.A == doctest::Approx(A).epsilon(1e-9));
  CHECK(b.n_bound == doctest::Approx(2 * A * std::log(A)).epsilon(1e-2));
  CHECK(b.n_bound >= 2 * A * std::log(A) * (1 - 1e-12));
  CHECK(b.m_bound == doctest::Approx(1.73 * b.n_bound).epsilon(1e-2));
  NBound f = fixed_y_n_bound(510, 100, true);
  CHECK(f.n_bound < b.n_bound);
  // the fixed point satisfies n >= A log n
  CHECK(f.n_bound >= A * std::log(f.n_bound) * (1 - 1e-9));
  const double k = 1171;
  CHECK(closed_form_n_bound(k) == doctest::Approx(5.141e15 * std::pow(k, 4) * std::pow(std::log(k), 3)).epsilon(1e-9));
}

TEST_CASE("rounding helpers") {
  CHECK(round_up_sig(2.7612e87, 3) == doctest::Approx(2.77e87));
  CHECK(round_up_sig(1.5, 3) == 1.5);
  CHECK(round_up_sig(4.8320001e16, 3) == doctest::Approx(4.84e16));
  CHECK(round_up_sig(4.83204e16, 3) >= 4.83204e16);
  CHECK(log_ratio_factor(0.12) == doctest::Approx(-std::log1p(-0.12) / 0.12));
  CHECK_THROWS_AS(log_ratio_factor(1.0), DomainError);
}

TEST_CASE("large-k chain") {
  BoundReport r = large_k_bounds();
  CHECK(r.all_pass());
  CHECK(r.k_bound == doctest::Approx(4.84e16).epsilon(0.02));
  CHECK(r.n_bound == doctest::Approx(1.6e87).epsilon(0.02));
  CHECK(r.m_bound == doctest::Approx(2.77e87).epsilon(0.02));
  // keeping the factor 2 roughly doubles the k-bound and raises the rest
  BoundReport c = large_k_bounds(true);
  CHECK(c.k_bound > 1.9 * r.k_bound);
  CHECK(c.m_bound > r.m_bound);
  CHECK(golden_approximation_check(600).pass);
}
