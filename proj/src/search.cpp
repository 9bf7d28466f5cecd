#include "pellpow/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>

#include "pellpow/errors.hpp"
#include "pellpow/sequences.hpp"

namespace pellpow {

IntRange parse_range(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw DomainError("bad range '" + text + "'");
    }
    if (used != s.size()) throw DomainError("bad range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = to_long(text);
    return {v, v};
  }
  IntRange r{to_long(text.substr(0, dots)), to_long(text.substr(dots + 2))};
  if (r.lo > r.hi) throw DomainError("empty range '" + text + "'");
  return r;
}

std::string to_string(const IntRange& r) {
  if (r.lo == r.hi) return std::to_string(r.lo);
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

void SearchWindow::validate() const {
  if (k.size() == 0 || n.size() == 0 || m.size() == 0 || y.size() == 0) throw DomainError("empty search range");
  if (k.lo < 2) throw DomainError("search needs k >= 2");
  if (y.lo < 2) throw DomainError("search needs y >= 2");
  if (m.lo < 2) throw DomainError("search needs m >= 2");
  if (n.lo < 2 - k.hi) throw DomainError("search index below the first defined term");
}

std::int64_t SearchWindow::cells() const { return k.size() * n.size() * m.size() * y.size(); }

bool operator<(const SolutionRecord& a, const SolutionRecord& b) {
  return std::tie(a.k, a.n, a.y, a.m) < std::tie(b.k, b.n, b.y, b.m);
}

bool operator==(const SolutionRecord& a, const SolutionRecord& b) {
  return a.k == b.k && a.n == b.n && a.m == b.m && a.y == b.y && a.q_value == b.q_value;
}

namespace {

double log2_of(const BigInt& v) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log2(d) + static_cast<double>(e);
}

// Candidate exponents around log v / log y; exact checks decide.
template <class IsPower>
void scan_bases(double lg, IntRange y_range, long m_min, long m_max, IsPower&& is_power,
                std::vector<std::pair<long, long>>& out) {
  for (long y = y_range.lo; y <= y_range.hi; ++y) {
    double est = lg / std::log2(static_cast<double>(y));
    auto centre = static_cast<long>(std::llround(est));
    for (long m = centre - 1; m <= centre + 1; ++m) {
      if (m < m_min || (m_max >= 0 && m > m_max)) continue;
      if (is_power(y, m)) {
        out.emplace_back(y, m);
        break;
      }
    }
  }
}

}  // namespace

std::vector<std::pair<long, long>> perfect_power_reps(const BigInt& v, IntRange y_range, long m_min, long m_max) {
  if (v < 1) throw DomainError("perfect_power_reps needs v >= 1");
  std::vector<std::pair<long, long>> out;
  if (v == 1) return out;
  const double lg = log2_of(v);
  scan_bases(lg, y_range, std::max(m_min, 1L), m_max,
             [&](long y, long m) {
               BigInt p;
               mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(y), static_cast<unsigned long>(m));
               return p == v;
             },
             out);
  return out;
}

namespace {

class PowerTable {
 public:
  PowerTable(IntRange y, long m_hi, double max_bits) : y_(y) {
    for (long b = y.lo; b <= y.hi; ++b) {
      std::vector<BigInt> row{BigInt(1)};
      const double step = std::log2(static_cast<double>(b));
      for (long m = 1; m <= m_hi && (m - 1) * step <= max_bits + 2; ++m) row.push_back(row.back() * b);
      rows_.push_back(std::move(row));
    }
  }
  // Exact test y^m == v; false when m is beyond the tabulated size (too large anyway).
  bool equals(long y, long m, const BigInt& v) const {
    const auto& row = rows_[static_cast<std::size_t>(y - y_.lo)];
    if (m < 0 || static_cast<std::size_t>(m) >= row.size()) return false;
    return row[static_cast<std::size_t>(m)] == v;
  }

 private:
  IntRange y_;
  std::vector<std::vector<BigInt>> rows_;
};

std::vector<SolutionRecord> scan_k(int k, const SearchWindow& w, const PowerTable& table) {
  std::vector<SolutionRecord> out;
  const long n_lo = std::max(w.n.lo, 1L);
  if (n_lo > w.n.hi) return out;
  TermStream s({k, Family::PellLucas});
  s.seek(n_lo);
  std::vector<std::pair<long, long>> reps;
  for (;;) {
    const BigInt& v = s.value();
    reps.clear();
    scan_bases(log2_of(v), w.y, w.m.lo, w.m.hi, [&](long y, long m) { return table.equals(y, m, v); }, reps);
    for (const auto& [y, m] : reps) out.push_back({k, s.index(), m, y, v});
    if (s.index() >= w.n.hi) break;
    s.advance();
  }
  return out;
}

}  // namespace

std::vector<SolutionRecord> enumerate(const SearchWindow& window, unsigned threads) {
  window.validate();
  // Q_n < 2 alpha^n < 2 phi^{2n}
  const double max_bits = 2.0 + 2.0 * static_cast<double>(std::max(window.n.hi, 1L)) * std::log2((1 + std::sqrt(5.0)) / 2);
  const PowerTable table(window.y, window.m.hi, max_bits);

  const auto lanes = static_cast<std::size_t>(window.k.size());
  std::vector<std::vector<SolutionRecord>> per_k(lanes);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, lanes));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lanes; i = next++) {
      per_k[i] = scan_k(static_cast<int>(window.k.lo + static_cast<long>(i)), window, table);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<SolutionRecord> out;
  for (auto& v : per_k) std::move(v.begin(), v.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SolutionRecord> small_n_classify(int k_max, long n_max, IntRange y_range) {
  if (n_max < 1) throw DomainError("small_n_classify needs n_max >= 1");
  if (y_range.lo < 2) throw DomainError("search needs y >= 2");
  std::vector<SolutionRecord> out;
  for (long n = 1; n <= n_max; ++n) {
    BigInt v = 2 * fibonacci(2 * n);
    for (const auto& [y, m] : perfect_power_reps(v, y_range, 2)) {
      for (long k = std::max(2L, n); k <= k_max; ++k) out.push_back({static_cast<int>(k), n, m, y, v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SolutionRecord> oracle_enumerate(const SearchWindow& window) {
  window.validate();
  const long n_lo = std::max(window.n.lo, 1L);
  std::vector<std::pair<int, std::vector<BigInt>>> terms;  // (k, Q_{n_lo..n_hi})
  BigInt largest = 0;
  for (long k = window.k.lo; k <= window.k.hi; ++k) {
    // seq[i] holds Q_{i + 2 - k}
    std::vector<BigInt> seq(static_cast<std::size_t>(k - 2), BigInt(0));
    seq.push_back(2);
    seq.push_back(2);
    const auto base = static_cast<long>(2 - k);
    while (static_cast<long>(seq.size()) + base <= window.n.hi) {
      const std::size_t i = seq.size();
      BigInt next = 2 * seq[i - 1];
      for (long j = 2; j <= k; ++j) next += seq[i - static_cast<std::size_t>(j)];
      seq.push_back(next);
    }
    std::vector<BigInt> slice;
    for (long n = n_lo; n <= window.n.hi; ++n) {
      slice.push_back(seq[static_cast<std::size_t>(n - base)]);
      if (slice.back() > largest) largest = slice.back();
    }
    terms.emplace_back(static_cast<int>(k), std::move(slice));
  }

  std::map<BigInt, std::vector<std::pair<long, long>>> powers;
  for (long y = window.y.lo; y <= window.y.hi; ++y) {
    BigInt p = 1;
    for (long m = 1; m <= window.m.hi; ++m) {
      p *= y;
      if (p > largest) break;
      if (m >= window.m.lo) powers[p].emplace_back(y, m);
    }
  }

  std::vector<SolutionRecord> out;
  for (const auto& [k, slice] : terms) {
    for (std::size_t i = 0; i < slice.size(); ++i) {
      auto it = powers.find(slice[i]);
      if (it == powers.end()) continue;
      for (const auto& [y, m] : it->second) out.push_back({k, n_lo + static_cast<long>(i), m, y, slice[i]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SearchWindow random_window(std::mt19937_64& rng, std::int64_t max_cells) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  SearchWindow w;
  const bool anchored = pick(0, 2) == 0;
  w.k.lo = pick(2, 30);
  w.k.hi = w.k.lo + pick(0, 6);
  w.n.lo = anchored ? pick(0, 3) : pick(0, 60);
  w.n.hi = w.n.lo + pick(0, 80);
  w.y.lo = anchored ? 2 : pick(2, 100);
  w.y.hi = std::min(100L, w.y.lo + pick(0, 40));
  w.m.lo = anchored ? 2 : pick(2, 10);
  w.m.hi = w.m.lo + pick(0, 60);
  while (w.cells() > max_cells) {
    if (w.m.size() >= w.n.size() && w.m.size() > 1) {
      w.m.hi = w.m.lo + (w.m.size() - 1) / 2;
    } else if (w.n.size() > 1) {
      w.n.hi = w.n.lo + (w.n.size() - 1) / 2;
    } else if (w.y.size() > 1) {
      w.y.hi = w.y.lo + (w.y.size() - 1) / 2;
    } else {
      w.k.hi = w.k.lo;
    }
  }
  return w;
}

bool oracle_crosscheck(const SearchWindow& window, unsigned threads) {
  return enumerate(window, threads) == oracle_enumerate(window);
}

}  // namespace pellpow
