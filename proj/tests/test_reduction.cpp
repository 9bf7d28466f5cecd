#include <cmath>

#include "doctest.h"
#include "pellpow/errors.hpp"
#include "pellpow/reduction.hpp"

using namespace pellpow;

TEST_CASE("continued fraction of sqrt 2 and phi") {
  RealBall s2 = sqrt(RealBall::from_int(2, 256));
  ContinuedFraction cf = cf_expand(s2, BigInt(1000000), 5);
  REQUIRE(cf.partial_quotients.size() >= 10);
  CHECK(cf.partial_quotients[0] == 1);
  for (std::size_t i = 1; i < cf.partial_quotients.size(); ++i) CHECK(cf.partial_quotients[i] == 2);
  CHECK(cf.certified_count == cf.partial_quotients.size());
  // p^2 - 2 q^2 = +-1 for every convergent
  for (const auto& c : cf.convergents) CHECK(abs(BigInt(c.p * c.p - 2 * c.q * c.q)) == 1);

  ContinuedFraction g = cf_expand(golden_ratio(256), BigInt(1000000));
  for (const auto& a : g.partial_quotients) CHECK(a == 1);
  CHECK(g.convergents.back().q > 1000000);
}

TEST_CASE("convergents approximate within 1/q^2") {
  RealBall x = log(RealBall::from_int(3, 384)) / log(RealBall::from_int(2, 384));
  ContinuedFraction cf = cf_expand(x, BigInt("1000000000000000000000000"));
  for (const auto& c : cf.convergents) {
    RealBall err = abs(x - RealBall::from_rational(Rational(c.p, c.q), 384));
    RealBall bound = RealBall::from_rational(Rational(1, c.q * c.q), 384);
    CHECK(less(err, bound) == Tri::True);
  }
}

TEST_CASE("cf_expand runs out on a wide ball") {
  RealBall wide = RealBall::from_endpoints(Rational(14142, 10000), Rational(14143, 10000), 64);
  CHECK_THROWS_AS(cf_expand(wide, BigInt(1000000000)), PrecisionError);
  // the retrying overload gets there
  BallSource src = [](long bits) { return sqrt(RealBall::from_int(2, bits)); };
  ContinuedFraction cf = cf_expand(src, BigInt("1000000000000000000000000000000"), 64, 1024);
  CHECK(cf.convergents.back().q > BigInt("1000000000000000000000000000000"));
}

TEST_CASE("nearest integer distance") {
  CHECK(nearest_int_dist(RealBall::from_rational(Rational(13, 4), 64)).mid_d() == doctest::Approx(0.25));
  CHECK(nearest_int_dist(RealBall::from_rational(Rational(-13, 4), 64)).mid_d() == doctest::Approx(0.25));
  CHECK(nearest_int_dist(RealBall::from_rational(Rational(7, 2), 64)).mid_d() == doctest::Approx(0.5));
  RealBall wide = RealBall::from_endpoints(Rational(1, 10), Rational(9, 10), 64);
  CHECK_THROWS_AS(nearest_int_dist(wide, 0.01), PrecisionError);
}

TEST_CASE("reduction matches a recomputation from its own convergent") {
  ReductionProblem p;
  p.label = "log3/log2";
  p.gamma = [](long bits) { return log(RealBall::from_int(3, bits)) / log(RealBall::from_int(2, bits)); };
  p.mu = [](long bits) { return log(RealBall::from_int(5, bits)) / log(RealBall::from_int(2, bits)); };
  p.log_base = [](long bits) { return log(RealBall::from_int(2, bits)); };
  p.A = 3;
  p.M = BigInt("1000000000000");
  ReductionResult r = bd_reduce(p);
  CHECK(r.q > 6 * p.M);
  CHECK(r.convergent_index >= r.first_index_over_6m);

  // recompute eps and w from the reported q
  const long bits = 512;
  RealBall q = RealBall::from_bigint(r.q, bits);
  RealBall eps = nearest_int_dist(p.mu(bits) * q) - RealBall::from_bigint(p.M, bits) * nearest_int_dist(p.gamma(bits) * q);
  CHECK(eps.lower_d() > 0);
  const double w = std::log(3 * r.q.get_d() / eps.mid_d()) / std::log(2.0);
  CHECK(r.w_bound >= w - 1e-9);
  CHECK(r.w_bound == doctest::Approx(w).epsilon(1e-6));
  auto again = w_at_index(p, r.convergent_index);
  REQUIRE(again.has_value());
  CHECK(*again == doctest::Approx(r.w_bound).epsilon(1e-9));
}

TEST_CASE("rational gamma exhausts the attempts") {
  ReductionProblem p;
  p.gamma = [](long bits) { return RealBall::from_rational(Rational(1, 3), bits); };
  p.mu = [](long bits) { return RealBall::from_rational(Rational(1, 7), bits); };
  p.log_base = [](long bits) { return log(RealBall::from_int(2, bits)); };
  p.A = 1;
  p.M = 10;
  CHECK_THROWS(bd_reduce(p));
}

TEST_CASE("branch builders") {
  ReductionResult a = bd_reduce(build_branch1_problem(3, 2));
  CHECK(a.w_bound < 145.6);
  ReductionResult b = bd_reduce(build_branch2_problem(2, parse_decimal_integer("5.9e30")));
  CHECK(b.first_index_over_6m == 69);
  CHECK(b.w_bound < 255);
  CHECK_THROWS_AS(build_branch1_problem(2, 2), DomainError);
  CHECK_THROWS_AS(build_branch2_problem(101, BigInt(10)), DomainError);
}
