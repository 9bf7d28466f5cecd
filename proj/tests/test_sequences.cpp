#include <vector>

#include "doctest.h"
#include "pellpow/errors.hpp"
#include "pellpow/sequences.hpp"

using namespace pellpow;

namespace {

// Plain recurrence over a vector holding the k-2 leading zeros.
std::vector<BigInt> naive(int k, bool lucas, long n_max) {
  std::vector<BigInt> v(static_cast<std::size_t>(k - 2), 0);
  v.push_back(lucas ? 2 : 0);
  v.push_back(lucas ? 2 : 1);
  while (static_cast<long>(v.size()) - (k - 2) <= n_max) {
    BigInt next = 0;
    const std::size_t i = v.size();
    next = v[i - 1];  // coefficient 2 on the previous term
    for (int j = 1; j <= k; ++j) next += v[i - j];
    v.push_back(next);
  }
  return v;  // v[n + k - 2] = G_n
}

}  // namespace

TEST_CASE("terms match the plain recurrence") {
  for (int k = 2; k <= 12; ++k) {
    for (bool lucas : {false, true}) {
      auto v = naive(k, lucas, 80);
      SeqParams p{k, lucas ? Family::PellLucas : Family::Pell};
      for (long n = 2 - k; n <= 80; ++n) CHECK(term(p, n) == v[static_cast<std::size_t>(n + k - 2)]);
      auto r = term_range(p, 5, 40);
      REQUIRE(r.size() == 36);
      CHECK(r.front() == v[static_cast<std::size_t>(5 + k - 2)]);
      CHECK(r.back() == v[static_cast<std::size_t>(40 + k - 2)]);
    }
  }
}

TEST_CASE("small values") {
  auto q3 = term_range(SeqParams{3, Family::PellLucas}, 0, 6);
  CHECK(q3 == std::vector<BigInt>{2, 2, 6, 16, 40, 102, 260});
  auto p2 = term_range(SeqParams{2, Family::Pell}, 0, 6);
  CHECK(p2 == std::vector<BigInt>{0, 1, 2, 5, 12, 29, 70});
  CHECK(fibonacci(7) == 13);
  CHECK(fibonacci(100) == BigInt("354224848179261915075"));
}

TEST_CASE("term stream seeks and advances") {
  TermStream s(SeqParams{5, Family::PellLucas});
  CHECK(s.index() == -3);
  s.seek(30);
  CHECK(s.value() == term(SeqParams{5, Family::PellLucas}, 30));
  s.advance();
  CHECK(s.value() == term(SeqParams{5, Family::PellLucas}, 31));
}

TEST_CASE("identities") {
  for (int k = 2; k <= 8; ++k) {
    for (long n = 2 - k; n <= 60; ++n) CHECK(check_pell_lucas_identity(k, n));
    for (long n = 1; n <= k + 1; ++n) CHECK(check_fibonacci_links(k, n));
  }
  // the links stop holding past n = k+1 (P) and n = k (Q)
  CHECK(term(SeqParams{3, Family::Pell}, 5) != fibonacci(9));
  CHECK(term(SeqParams{3, Family::PellLucas}, 4) != 2 * fibonacci(8));
}

TEST_CASE("generating function") {
  for (int k = 2; k <= 6; ++k) {
    CHECK(genfun_coeffs(Family::PellLucas, k, 40) == term_range(SeqParams{k, Family::PellLucas}, 0, 39));
    CHECK(genfun_coeffs(Family::Pell, k, 40) == term_range(SeqParams{k, Family::Pell}, 0, 39));
  }
  // 1 / (1 - x)^2 = 1 + 2x + 3x^2 + ...
  auto c = series_divide({1}, {1, -2, 1}, 5);
  CHECK(c == std::vector<BigInt>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(series_divide({1}, {2, 1}, 3), DomainError);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(term(SeqParams{1, Family::Pell}, 3), DomainError);
  CHECK_THROWS_AS(parse_family("tribonacci"), DomainError);
  CHECK(parse_family("Pell-Lucas") == Family::PellLucas);
  CHECK(to_string(Family::Fibonacci) == "fibonacci");
}
