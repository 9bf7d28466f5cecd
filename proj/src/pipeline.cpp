#include "pellpow/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "pellpow/algebraic.hpp"
#include "pellpow/errors.hpp"
#include "pellpow/heights.hpp"
#include "pellpow/reduction.hpp"

namespace pellpow {

using json = nlohmann::ordered_json;

namespace {

const std::vector<int> kDefaultSample{3, 4, 5, 10, 50, 100, 250, 510};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw DomainError("not a boolean: '" + v + "'");
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long out = std::stol(v, &used);
    if (used == v.size()) return out;
  } catch (const std::exception&) {
  }
  throw DomainError("config key '" + key + "' needs an integer, got '" + v + "'");
}

std::vector<int> parse_k_list(const std::string& v) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    IntRange r = parse_range(item);
    for (long k = r.lo; k <= r.hi; ++k) out.push_back(static_cast<int>(k));
  }
  if (out.empty()) throw DomainError("empty k sample");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int k : out) {
    if (k < 3 || k > 510) throw DomainError("k sample values must lie in [3, 510]");
  }
  return out;
}

// Deterministic parallel map over [0, count).
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::string sig(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

// Outcome of one reduction inside a sweep; failures are kept, not thrown.
struct SweepItem {
  bool ok = false;
  std::string error;
  ReductionResult result;
};

SweepItem run_one(const ReductionProblem& p) {
  SweepItem item;
  try {
    item.result = bd_reduce(p);
    item.ok = true;
  } catch (const std::exception& e) {
    item.error = e.what();
  }
  return item;
}

json result_json(const ReductionResult& r) {
  return json{{"convergent_index", r.convergent_index},
              {"first_index_over_6M", r.first_index_over_6m},
              {"q_digits", decimal_digits(r.q)},
              {"epsilon_lower", decimal_of(r.epsilon.lower_d(), "down", 6).value},
              {"w_bound", decimal_of(r.w_bound, "up", 8).value},
              {"attempts", r.attempts},
              {"bits", r.bits_used}};
}

struct GoldenPass {
  double w_max = 0;
  int y_at_max = 0;
  std::size_t first_index_max = 0;  // first index with q > 6M for every y
  std::size_t first_index_min = 0;
  double uniform_w_max = 0;  // w at first_index_max, over all y
  bool uniform_ok = true;
  std::vector<std::string> errors;
  json per_y = json::array();
};

GoldenPass golden_pass(const BigInt& M, const PipelineConfig& cfg) {
  GoldenPass gp;
  auto items = parallel_map<SweepItem>(99, cfg.threads, [&](std::size_t i) {
    ReductionProblem p = build_branch2_problem(static_cast<int>(i) + 2, M);
    p.cap_bits = cfg.prec_cap;
    return run_one(p);
  });
  gp.first_index_min = SIZE_MAX;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int y = static_cast<int>(i) + 2;
    if (!items[i].ok) {
      gp.errors.push_back("y=" + std::to_string(y) + ": " + items[i].error);
      continue;
    }
    const auto& r = items[i].result;
    if (r.w_bound > gp.w_max) {
      gp.w_max = r.w_bound;
      gp.y_at_max = y;
    }
    gp.first_index_max = std::max(gp.first_index_max, r.first_index_over_6m);
    gp.first_index_min = std::min(gp.first_index_min, r.first_index_over_6m);
    json j = result_json(r);
    j["y"] = y;
    gp.per_y.push_back(j);
  }
  if (!gp.errors.empty()) return gp;
  auto uniform = parallel_map<std::optional<double>>(99, cfg.threads, [&](std::size_t i) -> std::optional<double> {
    ReductionProblem p = build_branch2_problem(static_cast<int>(i) + 2, M);
    p.cap_bits = cfg.prec_cap;
    try {
      return w_at_index(p, gp.first_index_max);
    } catch (const PrecisionError&) {
      return std::nullopt;
    }
  });
  for (const auto& u : uniform) {
    if (!u) {
      gp.uniform_ok = false;
      continue;
    }
    gp.uniform_w_max = std::max(gp.uniform_w_max, *u);
  }
  return gp;
}

// Largest integer k with k/2 < w.
long k_below_twice(double w) { return static_cast<long>(std::ceil(2 * w)) - 1; }

BigInt integer_of(const Decimal& d) { return parse_decimal_integer(d.value); }

// For values already rounded up to `digits` significant digits: print them
// back without a second upward step.
Decimal rounded_form(double v, int digits) {
  Decimal d = decimal_of(v, "nearest", digits);
  d.rounding = "up";
  return d;
}

}  // namespace

void PipelineConfig::apply(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, raw] : kv) {
    const std::string v = trim(raw);
    if (key == "k_sample") {
      k_sample = parse_k_list(v);
    } else if (key == "full_sweep") {
      full_sweep = parse_bool(v);
    } else if (key == "prec_bits") {
      prec_bits = parse_long(key, v);
    } else if (key == "prec_cap") {
      prec_cap = parse_long(key, v);
    } else if (key == "small_n_max") {
      small_n_max = parse_long(key, v);
    } else if (key == "threads") {
      threads = static_cast<unsigned>(parse_long(key, v));
    } else if (key == "out") {
      out = v;
    } else {
      throw DomainError("unknown config key '" + key + "'");
    }
  }
  if (prec_bits < 64 || prec_cap < prec_bits || prec_cap > kDefaultPrecisionCap) {
    throw DomainError("precision must satisfy 64 <= prec_bits <= prec_cap <= 4096");
  }
  if (small_n_max < 1) throw DomainError("small_n_max must be >= 1");
}

bool PipelineConfig::is_default_sample() const {
  return std::includes(k_sample.begin(), k_sample.end(), kDefaultSample.begin(), kDefaultSample.end());
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

Decimal decimal_of(double v, const std::string& rounding, int digits) {
  Mpfr x(64);
  mpfr_set_d(x.get(), v, MPFR_RNDN);  // exact
  mpfr_rnd_t rnd = rounding == "up" ? MPFR_RNDU : rounding == "down" ? MPFR_RNDD : MPFR_RNDN;
  std::string s = x.to_decimal(digits, rnd);
  // strip trailing zeros of the mantissa
  auto e = s.find('e');
  std::string mant = s.substr(0, e);
  std::string ex = e == std::string::npos ? "" : s.substr(e);
  if (mant.find('.') != std::string::npos) {
    while (!mant.empty() && mant.back() == '0') mant.pop_back();
    if (!mant.empty() && mant.back() == '.') mant.pop_back();
  }
  if (ex == "e+00") ex.clear();
  return {mant + ex, rounding};
}

PipelineReport run_pipeline(const PipelineConfig& config) {
  PipelineReport rep;
  rep.config = config;
  std::vector<int> ks = config.k_sample;
  if (config.full_sweep) {
    ks.clear();
    for (int k = 3; k <= 510; ++k) ks.push_back(k);
  }

  auto guarded = [&](StageRecord st, auto&& body) {
    try {
      body(st);
    } catch (const PrecisionError& e) {
      st.pass = false;
      st.details["error"] = std::string("precision: ") + e.what();
      rep.precision_failure = true;
    } catch (const std::exception& e) {
      st.pass = false;
      st.details["error"] = e.what();
    }
    rep.stages.push_back(std::move(st));
    return rep.stages.back().pass;
  };

  // Values handed from one stage to the next.
  BigInt m_branch1 = parse_decimal_integer(kBranch1M);
  long n_hi = 144;
  long m_hi = 249;
  BigInt m_golden1;
  BigInt m_golden2;
  long k_after_first = 0;

  guarded({"initial-coefficient", "1.64e13 k^4 (log k)^2 log y log n", "within 1% of 1.64e13", {}, false, {}},
          [&](StageRecord& st) {
            FixedYCoefficient c = fixed_y_coefficient();
            st.achieved = decimal_of(c.derived, "up");
            st.pass = c.relative_error < 0.01;
            st.details = json{{"matveev_C", decimal_of(c.matveev_c, "up").value},
                              {"relative_error", sig(c.relative_error, 4)},
                              {"note", c.rounding_note}};
          });

  guarded({"initial-n-bound", "5.141e15 k^4 (log k)^3; n < 2.831e28",
           "coefficient within 1% of 5.141e15; max n-bound over k in [3,510], y <= 100 below 2.831e28; 1.73 n <= 4.9e28",
           {}, false, {}},
          [&](StageRecord& st) {
            ClosedFormCoefficient c = closed_form_coefficient();
            const double rel = std::fabs(c.derived - c.published) / c.published;
            double n_max = 0;
            double m_max = 0;
            bool dominated = true;
            for (int k = 3; k <= 510; ++k) {
              const double closed = closed_form_n_bound(k);
              for (int y = 2; y <= 100; ++y) {
                NBound b = fixed_y_n_bound(k, y);
                n_max = std::max(n_max, b.n_bound);
                m_max = std::max(m_max, b.m_bound);
                if (y == 100 && !(b.n_bound < closed)) dominated = false;
              }
            }
            const bool m_ok = Rational(m_max) <= Rational(m_branch1);
            st.achieved = decimal_of(n_max, "up");
            st.pass = rel < 0.01 && c.log_y100_below_32 && c.log_fold_k3 && n_max < 2.831e28 && m_ok && dominated;
            st.details = json{{"coefficient_derived", decimal_of(c.derived, "up").value},
                              {"coefficient_from_published_chain", decimal_of(c.from_published, "up").value},
                              {"coefficient_relative_error", sig(rel, 4)},
                              {"log_7.56e13_below_32", c.log_y100_below_32},
                              {"log_fold_at_k3", c.log_fold_k3},
                              {"n_bound_max", decimal_of(n_max, "up").value},
                              {"m_bound_max", decimal_of(m_max, "up").value},
                              {"M", kBranch1M},
                              {"two_A_log_A_below_closed_form", dominated},
                              {"closed_form_at_k510", decimal_of(closed_form_n_bound(510), "up").value},
                              {"method", "n < 2A log A with A = 1.64e13 k^4 (log k)^2 log y"}};
          });

  guarded({"per-k-reduction", "144.6", "max w over sampled (k, y) below 145.6, so n <= 144 and m <= 249", {}, false, {}},
          [&](StageRecord& st) {
            std::vector<std::pair<int, int>> pairs;
            for (int k : ks) {
              for (int y = 2; y <= 100; ++y) pairs.emplace_back(k, y);
            }
            auto items = parallel_map<SweepItem>(pairs.size(), config.threads, [&](std::size_t i) {
              ReductionProblem p = build_branch1_problem(pairs[i].first, pairs[i].second, m_branch1);
              p.cap_bits = config.prec_cap;
              return run_one(p);
            });
            double w_max = 0;
            json per_k = json::array();
            json all = json::array();
            std::vector<std::string> errors;
            std::size_t idx = 0;
            for (int k : ks) {
              double wk = 0;
              int yk = 0;
              std::size_t first_max = 0;
              for (int y = 2; y <= 100; ++y, ++idx) {
                const SweepItem& it = items[idx];
                if (!it.ok) {
                  errors.push_back("k=" + std::to_string(k) + " y=" + std::to_string(y) + ": " + it.error);
                  continue;
                }
                if (it.result.w_bound > wk) {
                  wk = it.result.w_bound;
                  yk = y;
                }
                first_max = std::max(first_max, it.result.first_index_over_6m);
                json j = result_json(it.result);
                j["k"] = k;
                j["y"] = y;
                all.push_back(j);
              }
              w_max = std::max(w_max, wk);
              per_k.push_back(json{{"k", k},
                                   {"w_max", decimal_of(wk, "up").value},
                                   {"y_at_max", yk},
                                   {"first_index_over_6M_max", first_max}});
            }
            const bool coverage = config.full_sweep || config.is_default_sample();
            const long n_derived = static_cast<long>(std::floor(w_max));
            n_hi = std::max(144L, n_derived);
            m_hi = static_cast<long>(std::floor(1.73 * static_cast<double>(n_hi)));
            st.achieved = decimal_of(w_max, "up");
            st.pass = errors.empty() && w_max < 145.6 && n_hi <= 144 && coverage;
            st.details = json{{"sweep", config.full_sweep ? "full" : "sampled"},
                              {"partial", !coverage},
                              {"k_values", ks},
                              {"M", kBranch1M},
                              {"A", "1.94"},
                              {"n_max", n_hi},
                              {"m_max", m_hi},
                              {"per_k", per_k},
                              {"errors", errors},
                              {"pairs", all}};
          });

  guarded({"window-enumeration", "n in [4,144], m in [2,249], k in [3,510]", "no solutions", {}, false, {}},
          [&](StageRecord& st) {
            SearchWindow w{{3, 510}, {4, n_hi}, {2, m_hi}, {2, 100}};
            auto sols = enumerate(w, config.threads);
            st.achieved = {std::to_string(sols.size()), "exact"};
            st.pass = sols.empty();
            st.details = json{{"k", to_string(w.k)}, {"n", to_string(w.n)}, {"m", to_string(w.m)}, {"y", to_string(w.y)}};
          });

  guarded({"small-n-classification", "(n,m,y) = (3,2,4), (3,4,2)",
           "2F_{2n} = y^m only at n = 3 with (m, y) in {(4, 2), (2, 4)}", {}, false, {}},
          [&](StageRecord& st) {
            auto recs = small_n_classify(static_cast<int>(config.small_n_max), config.small_n_max);
            std::set<std::tuple<long, long, long>> distinct;
            for (const auto& r : recs) distinct.insert({r.n, r.m, r.y});
            const std::set<std::tuple<long, long, long>> expected{{3, 2, 4}, {3, 4, 2}};
            json found = json::array();
            for (const auto& [n, m, y] : distinct) found.push_back(json{{"n", n}, {"m", m}, {"y", y}});
            st.achieved = {std::to_string(distinct.size()) + " (n,m,y) triples", "exact"};
            st.pass = distinct == expected;
            st.details = json{{"n_max", config.small_n_max}, {"found", found},
                              {"scope", "enumeration of 2F_{2n} for n <= n_max, not a classification for all n"}};
          });

  guarded({"k2-window", "k = 2, n >= 3", "no solutions for n in [3,144]", {}, false, {}}, [&](StageRecord& st) {
    SearchWindow w{{2, 2}, {3, n_hi}, {2, m_hi}, {2, 100}};
    auto sols = enumerate(w, config.threads);
    st.achieved = {std::to_string(sols.size()), "exact"};
    st.pass = sols.empty();
    st.details = json{{"n", to_string(w.n)}, {"m", to_string(w.m)},
                      {"scope", "bounded window; the unbounded k = 2 statement is outside this search"}};
  });

  guarded({"large-k-chain", "k < 4.84e16, n < 1.6e87, m < 2.77e87",
           "each constant within 2% and every side inequality certified", {}, false, {}},
          [&](StageRecord& st) {
            BoundReport b = large_k_bounds(false);
            json steps = json::array();
            for (const auto& s : b.steps) {
              steps.push_back(json{{"name", s.name},
                                   {"anchor", s.anchor},
                                   {"value", rounded_form(s.value, 3).value},
                                   {"relative_error", sig(s.relative_error, 4)},
                                   {"pass", s.pass},
                                   {"note", s.note}});
            }
            json facts = json::array();
            for (const auto& f : b.facts) facts.push_back(json{{"pass", f.pass}, {"what", f.detail}});
            BoundReport audit = large_k_bounds(true);
            st.achieved = rounded_form(b.k_bound, 3);
            st.pass = b.all_pass();
            m_golden1 = integer_of(rounded_form(b.m_bound, 3));
            st.details = json{{"steps", steps},
                              {"facts", facts},
                              {"n_bound", rounded_form(b.n_bound, 3).value},
                              {"m_bound", rounded_form(b.m_bound, 3).value},
                              {"audit_factor_two",
                               json{{"k_bound", rounded_form(audit.k_bound, 3).value},
                                    {"n_bound", rounded_form(audit.n_bound, 3).value},
                                    {"m_bound", rounded_form(audit.m_bound, 3).value}}}};
          });

  guarded({"golden-reduction-1", "q_207, 585.91, k <= 1171", "max w over y in [2,100] <= 586 and k <= 1172", {}, false,
           {}},
          [&](StageRecord& st) {
            if (m_golden1 == 0) throw DomainError("no m-bound from the large-k chain");
            GoldenPass gp = golden_pass(m_golden1, config);
            const long k_first = k_below_twice(gp.w_max);
            const long k_uniform = k_below_twice(gp.uniform_w_max);
            // The n-bound of the next step is evaluated at the weaker of the two
            // valid k-bounds.
            k_after_first = std::max(k_first, k_uniform);
            st.achieved = decimal_of(gp.w_max, "up");
            st.pass = gp.errors.empty() && gp.uniform_ok && gp.w_max <= 586 && k_after_first <= 1172;
            st.details = json{{"M", to_string(m_golden1)},
                              {"A", "2.75"},
                              {"y_at_max", gp.y_at_max},
                              {"k_bound", k_first},
                              {"first_index_over_6M_max", gp.first_index_max},
                              {"first_index_over_6M_min", gp.first_index_min},
                              {"w_max_at_uniform_index", decimal_of(gp.uniform_w_max, "up").value},
                              {"k_bound_at_uniform_index", k_uniform},
                              {"k_used_next", k_after_first},
                              {"errors", gp.errors},
                              {"per_y", gp.per_y}};
          });

  guarded({"reduced-n-bound", "n < 3.41e30, m < 5.9e30", "n-bound at the reduced k within 2% of 3.41e30", {}, false, {}},
          [&](StageRecord& st) {
            if (k_after_first <= 0) throw DomainError("no k-bound from the first golden reduction");
            const double kk = static_cast<double>(std::max(k_after_first, 511L));
            const Decimal n = decimal_of(closed_form_n_bound(kk), "up", 3);
            const double nv = std::stod(n.value);
            RealBall m_exact = RealBall::from_rational(parse_decimal(n.value), kBoundPrec) *
                               RealBall::from_decimal("1.73", kBoundPrec);
            const Decimal m = decimal_of(m_exact.upper_d(), "up", 2);
            m_golden2 = integer_of(m);
            st.achieved = n;
            st.pass = std::fabs(nv - 3.41e30) / 3.41e30 < 0.02 && std::fabs(std::stod(m.value) - 5.9e30) / 5.9e30 < 0.02;
            st.details = json{{"k", static_cast<long>(kk)},
                              {"n_bound_exact_form", decimal_of(closed_form_n_bound(kk), "up").value},
                              {"m_bound", m.value}};
          });

  guarded({"golden-reduction-2", "q_69, k < 505", "k-bound below 510, contradicting k > 510", {}, false, {}},
          [&](StageRecord& st) {
            if (m_golden2 == 0) throw DomainError("no m-bound for the second golden reduction");
            GoldenPass gp = golden_pass(m_golden2, config);
            const long k_first = k_below_twice(gp.w_max);
            const long k_uniform = k_below_twice(gp.uniform_w_max);
            const long k_bound = std::max(k_first, k_uniform);
            st.achieved = {std::to_string(k_bound + 1), "up"};
            st.pass = gp.errors.empty() && gp.uniform_ok && k_bound < 510;
            st.details = json{{"M", to_string(m_golden2)},
                              {"w_max", decimal_of(gp.w_max, "up").value},
                              {"y_at_max", gp.y_at_max},
                              {"k_bound", k_first},
                              {"first_index_over_6M_max", gp.first_index_max},
                              {"first_index_over_6M_min", gp.first_index_min},
                              {"w_max_at_uniform_index", decimal_of(gp.uniform_w_max, "up").value},
                              {"k_bound_at_uniform_index", k_uniform},
                              {"errors", gp.errors},
                              {"per_y", gp.per_y}};
          });

  guarded({"solution-set", "(n,m,y) = (3,2,4), (3,4,2) for k >= 3",
           "exactly (k,3,2,4) and (k,3,4,2) for each sampled k over n <= 144", {}, false, {}},
          [&](StageRecord& st) {
            std::vector<SolutionRecord> all;
            for (int k : ks) {
              SearchWindow w{{k, k}, {1, n_hi}, {2, m_hi}, {2, 100}};
              auto sols = enumerate(w, 1);
              all.insert(all.end(), sols.begin(), sols.end());
            }
            std::sort(all.begin(), all.end());
            std::vector<SolutionRecord> expected;
            for (int k : ks) {
              expected.push_back({k, 3, 4, 2, BigInt(16)});
              expected.push_back({k, 3, 2, 4, BigInt(16)});
            }
            std::sort(expected.begin(), expected.end());
            rep.solutions = all;
            st.achieved = {std::to_string(all.size()) + " records", "exact"};
            st.pass = all == expected;
          });

  for (const auto& s : rep.stages) {
    if (!s.pass) rep.failing_stages.push_back(s.name);
  }
  rep.verdict = rep.failing_stages.empty() ? "complete" : "incomplete";
  return rep;
}

json to_json(const PipelineReport& report) {
  const PipelineConfig& c = report.config;
  json cfg{{"k_sample", c.k_sample},
           {"full_sweep", c.full_sweep},
           {"prec_bits", c.prec_bits},
           {"prec_cap", c.prec_cap},
           {"small_n_max", c.small_n_max}};
  json stages = json::array();
  for (const auto& s : report.stages) {
    stages.push_back(json{{"name", s.name},
                          {"paper_anchor", s.anchor},
                          {"target", s.target},
                          {"achieved", json{{"value", s.achieved.value}, {"rounding", s.achieved.rounding}}},
                          {"pass", s.pass},
                          {"details", s.details.is_null() ? json::object() : s.details}});
  }
  json sols = json::array();
  for (const auto& r : report.solutions) {
    sols.push_back(json{{"k", r.k}, {"n", r.n}, {"m", r.m}, {"y", r.y}, {"q_value", to_string(r.q_value)}});
  }
  return json{{"config", cfg},
              {"stages", stages},
              {"solutions", sols},
              {"failing_stages", report.failing_stages},
              {"verdict", report.verdict}};
}

std::string to_text(const PipelineReport& report) {
  std::ostringstream os;
  for (const auto& s : report.stages) {
    os << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << ": " << s.achieved.value;
    if (s.achieved.rounding != "exact") os << " (rounded " << s.achieved.rounding << ")";
    os << "  target: " << s.target << "  [" << s.anchor << "]\n";
    if (s.details.contains("error")) os << "       error: " << s.details["error"].get<std::string>() << "\n";
    if (s.details.contains("partial") && s.details["partial"].get<bool>()) {
      os << "       partial sweep: the k sample does not cover the default set\n";
    }
  }
  os << "solutions:";
  if (report.solutions.empty()) os << " none";
  os << "\n";
  for (const auto& r : report.solutions) {
    os << "  k=" << r.k << " n=" << r.n << " Q=" << to_string(r.q_value) << " = " << r.y << "^" << r.m << "\n";
  }
  os << "verdict: " << report.verdict << "\n";
  return os.str();
}

}  // namespace pellpow
