#pragma once

// Exact terms of the order-k Pell, Pell-Lucas and (ordinary) Fibonacci
// sequences.
//
// Pell and Pell-Lucas follow G_n = 2 G_{n-1} + G_{n-2} + ... + G_{n-k} for
// n >= 2, with G_{2-k} = ... = G_{-1} = 0 and (G_0, G_1) = (0, 1) for Pell,
// (2, 2) for Pell-Lucas. Fibonacci is the classical F_0 = 0, F_1 = 1 sequence
// and ignores k.

#include <cstddef>
#include <string>
#include <vector>

#include "pellpow/bigint.hpp"

namespace pellpow {

enum class Family { Pell, PellLucas, Fibonacci };

std::string to_string(Family f);
/// Accepts "pell", "pell-lucas", "fibonacci" (case-insensitive).
Family parse_family(const std::string& name);

struct SeqParams {
  int k = 2;
  Family family = Family::PellLucas;

  /// Throws DomainError if k < 2 for the order-k families.
  void validate() const;
  /// Smallest valid index: 2 - k for Pell/Pell-Lucas, 0 for Fibonacci.
  long first_index() const;
};

/// Streams consecutive terms with an O(k) ring buffer and a running window
/// sum, so each step costs two big-integer additions.
class TermStream {
 public:
  explicit TermStream(SeqParams params);

  long index() const { return index_; }
  const BigInt& value() const { return current_; }
  /// Advances to index()+1.
  void advance();
  /// Advances until index() == n (n >= index()).
  void seek(long n);

 private:
  SeqParams params_;
  long index_;
  BigInt current_;
  std::vector<BigInt> window_;  // last k terms, ring-indexed
  std::size_t head_ = 0;        // slot of the oldest term
  BigInt window_sum_;
  BigInt fib_prev_;
};

BigInt term(const SeqParams& params, long n);
std::vector<BigInt> term_range(const SeqParams& params, long n_lo, long n_hi);

BigInt fibonacci(long n);

/// Q_n^(k) == 2 (P_{n+1}^(k) - P_n^(k)).
bool check_pell_lucas_identity(int k, long n);

/// P_n^(k) == F_{2n-1} for 1 <= n <= k+1 and Q_n^(k) == 2 F_{2n} for 1 <= n <= k,
/// each checked where it applies.
bool check_fibonacci_links(int k, long n);

/// First N power-series coefficients of num(x) / den(x) by exact series
/// division; den[0] must be +1 or -1.
std::vector<BigInt> series_divide(const std::vector<BigInt>& num, const std::vector<BigInt>& den,
                                  std::size_t N);

/// Coefficients of the rational generating function of Pell (x / D(x)) or
/// Pell-Lucas ((2 - 2x) / D(x)), D(x) = 1 - 2x - x^2 - ... - x^k.
std::vector<BigInt> genfun_coeffs(Family family, int k, std::size_t N);

}  // namespace pellpow
