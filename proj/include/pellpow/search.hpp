#pragma once

// Exact search for perfect powers y^m among Pell-Lucas terms over finite
// windows, with a deliberately naive oracle for cross-checking.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pellpow/bigint.hpp"

namespace pellpow {

struct IntRange {
  long lo = 0;
  long hi = 0;
  std::int64_t size() const { return hi < lo ? 0 : static_cast<std::int64_t>(hi - lo + 1); }
  bool contains(long v) const { return v >= lo && v <= hi; }
};

/// Parses "lo..hi" or a single integer "v".
IntRange parse_range(const std::string& text);
std::string to_string(const IntRange& r);

struct SearchWindow {
  IntRange k{3, 3};
  IntRange n{1, 1};
  IntRange m{2, 2};
  IntRange y{2, 2};

  /// Throws DomainError unless k >= 2, y >= 2, m >= 2 and every range is nonempty.
  void validate() const;
  /// Number of (k, n, m, y) cells.
  std::int64_t cells() const;
};

struct SolutionRecord {
  int k = 0;
  long n = 0;
  long m = 0;
  long y = 0;
  BigInt q_value;

  friend bool operator<(const SolutionRecord& a, const SolutionRecord& b);
  friend bool operator==(const SolutionRecord& a, const SolutionRecord& b);
};

/// All (y, m) with y in y_range, m in [m_min, m_max], y^m == v. The exponent
/// for each y is seeded from a double-precision log ratio and m-1, m, m+1 are
/// tested exactly. Sorted by y.
std::vector<std::pair<long, long>> perfect_power_reps(const BigInt& v, IntRange y_range, long m_min = 2,
                                                      long m_max = -1);

/// Every solution of Q_n^(k) = y^m in the window, ordered by (k, n, y, m).
/// n is clamped to n >= 1 per k. threads = 0 uses the hardware concurrency.
std::vector<SolutionRecord> enumerate(const SearchWindow& window, unsigned threads = 0);

/// Solutions of 2 F_{2n} = y^m for 1 <= n <= n_max, which equal Q_n^(k) for
/// every k >= n; one record per k in [max(2, n), k_max].
std::vector<SolutionRecord> small_n_classify(int k_max, long n_max = 50, IntRange y_range = {2, 100});

/// The naive result: each term by summing the previous k terms directly, each
/// power found in a precomputed table of all y^m up to the largest term.
std::vector<SolutionRecord> oracle_enumerate(const SearchWindow& window);

/// A random window with at most max_cells cells; about a third of them
/// include the known solutions at n = 3.
SearchWindow random_window(std::mt19937_64& rng, std::int64_t max_cells = 1000000);

/// enumerate(window) == oracle_enumerate(window).
bool oracle_crosscheck(const SearchWindow& window, unsigned threads = 0);

}  // namespace pellpow
