#include "pellpow/sequences.hpp"

#include <algorithm>
#include <cctype>

#include "pellpow/errors.hpp"

namespace pellpow {

std::string to_string(Family f) {
  switch (f) {
    case Family::Pell: return "pell";
    case Family::PellLucas: return "pell-lucas";
    case Family::Fibonacci: return "fibonacci";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (c == '_') c = '-';
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "pell") return Family::Pell;
  if (s == "pell-lucas" || s == "pelllucas" || s == "lucas") return Family::PellLucas;
  if (s == "fibonacci" || s == "fib") return Family::Fibonacci;
  throw DomainError("unknown sequence family '" + name + "'");
}

void SeqParams::validate() const {
  if (family != Family::Fibonacci && k < 2) throw DomainError("order k must be >= 2");
}

long SeqParams::first_index() const {
  return family == Family::Fibonacci ? 0 : 2 - static_cast<long>(k);
}

TermStream::TermStream(SeqParams params) : params_(params) {
  params_.validate();
  index_ = params_.first_index();
  if (params_.family == Family::Fibonacci) {
    current_ = 0;
    fib_prev_ = 1;  // F_{-1}
    return;
  }
  const BigInt a = params_.family == Family::Pell ? 0 : 2;
  const BigInt b = params_.family == Family::Pell ? 1 : 2;
  // Window slots hold G_{2-k}, ..., G_{-1}, G_0, G_1; we start positioned
  // at index 2-k and only step into the recurrence once past index 1.
  const auto k = static_cast<std::size_t>(params_.k);
  window_.assign(k, BigInt(0));
  window_[k - 2] = a;
  window_[k - 1] = b;
  window_sum_ = a + b;
  head_ = 0;
  current_ = window_[0];
}

void TermStream::advance() {
  if (params_.family == Family::Fibonacci) {
    BigInt next = current_ + fib_prev_;
    fib_prev_ = current_;
    current_ = std::move(next);
    ++index_;
    return;
  }
  ++index_;
  if (index_ <= 1) {
    // still inside the initial conditions
    current_ = window_[static_cast<std::size_t>(index_ - params_.first_index())];
    return;
  }
  // G_n = G_{n-1} + (G_{n-1} + ... + G_{n-k})
  const BigInt& last = window_[(head_ + window_.size() - 1) % window_.size()];
  BigInt next = last + window_sum_;
  window_sum_ += next;
  window_sum_ -= window_[head_];
  window_[head_] = next;
  head_ = (head_ + 1) % window_.size();
  current_ = std::move(next);
}

void TermStream::seek(long n) {
  if (n < index_) throw DomainError("TermStream cannot seek backwards");
  while (index_ < n) advance();
}

BigInt term(const SeqParams& params, long n) {
  params.validate();
  if (n < params.first_index()) throw DomainError("index below the first defined term");
  if (params.family == Family::Fibonacci) return fibonacci(n);
  TermStream s(params);
  s.seek(n);
  return s.value();
}

std::vector<BigInt> term_range(const SeqParams& params, long n_lo, long n_hi) {
  params.validate();
  if (n_lo > n_hi) throw DomainError("empty index range");
  if (n_lo < params.first_index()) throw DomainError("index below the first defined term");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  TermStream s(params);
  s.seek(n_lo);
  out.push_back(s.value());
  while (s.index() < n_hi) {
    s.advance();
    out.push_back(s.value());
  }
  return out;
}

BigInt fibonacci(long n) {
  if (n < 0) throw DomainError("Fibonacci index must be >= 0");
  BigInt f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

bool check_pell_lucas_identity(int k, long n) {
  const SeqParams q{k, Family::PellLucas};
  const SeqParams p{k, Family::Pell};
  q.validate();
  if (n < q.first_index()) throw DomainError("index below the first defined term");
  std::vector<BigInt> pell = term_range(p, n, n + 1);
  return term(q, n) == 2 * (pell[1] - pell[0]);
}

bool check_fibonacci_links(int k, long n) {
  const bool p_link = n >= 1 && n <= static_cast<long>(k) + 1;
  const bool q_link = n >= 1 && n <= static_cast<long>(k);
  if (!p_link && !q_link) throw DomainError("n outside the range of both Fibonacci links");
  bool ok = true;
  if (p_link) ok = ok && term({k, Family::Pell}, n) == fibonacci(2 * n - 1);
  if (q_link) ok = ok && term({k, Family::PellLucas}, n) == 2 * fibonacci(2 * n);
  return ok;
}

std::vector<BigInt> series_divide(const std::vector<BigInt>& num, const std::vector<BigInt>& den,
                                  std::size_t N) {
  if (den.empty() || (den[0] != 1 && den[0] != -1)) {
    throw DomainError("series_divide needs a unit constant term in the denominator");
  }
  std::vector<BigInt> c(N);
  for (std::size_t j = 0; j < N; ++j) {
    BigInt acc = j < num.size() ? num[j] : BigInt(0);
    const std::size_t top = std::min(j, den.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) acc -= den[i] * c[j - i];
    c[j] = den[0] == 1 ? acc : BigInt(-acc);
  }
  return c;
}

std::vector<BigInt> genfun_coeffs(Family family, int k, std::size_t N) {
  SeqParams{k, family}.validate();
  std::vector<BigInt> den(static_cast<std::size_t>(k) + 1, BigInt(-1));
  den[0] = 1;
  den[1] = -2;
  std::vector<BigInt> num;
  switch (family) {
    case Family::Pell: num = {0, 1}; break;
    case Family::PellLucas: num = {2, -2}; break;
    default: throw DomainError("generating functions are defined for Pell and Pell-Lucas only");
  }
  return series_divide(num, den, N);
}

}  // namespace pellpow
