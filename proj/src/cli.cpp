#include "pellpow/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pellpow/algebraic.hpp"
#include "pellpow/errors.hpp"
#include "pellpow/heights.hpp"
#include "pellpow/pipeline.hpp"
#include "pellpow/reduction.hpp"
#include "pellpow/search.hpp"
#include "pellpow/sequences.hpp"

namespace pellpow {

using json = nlohmann::ordered_json;

namespace {

struct Globals {
  long prec_bits = 512;
  std::string k, n, m, y;
  bool full_sweep = false;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

// Rendered output plus exit code of one subcommand.
struct Output {
  json data;
  std::string text;
  std::string csv;
  int code = kExitComplete;
};

std::string render(const Output& o, const std::string& format) {
  if (format == "json") return o.data.dump(2) + "\n";
  if (format == "csv") return o.csv;
  return o.text;
}

IntRange range_or(const std::string& text, IntRange fallback) {
  return text.empty() ? fallback : parse_range(text);
}

int single(const std::string& text, const char* flag) {
  if (text.empty()) throw DomainError(std::string("missing ") + flag);
  IntRange r = parse_range(text);
  if (r.lo != r.hi) throw DomainError(std::string(flag) + " takes a single value here");
  return static_cast<int>(r.lo);
}

std::string dec(const RealBall& b, int digits = 30) { return b.mid().to_decimal(digits); }

// ---------------------------------------------------------------------------

struct SeqOpts {
  std::string family = "pell-lucas";
  std::string check = "none";
};

Output cmd_seq(const Globals& g, const SeqOpts& o) {
  Family fam = parse_family(o.family);
  IntRange ks = range_or(g.k, {2, 2});
  IntRange ns = range_or(g.n, {0, 10});
  Output out;
  out.data = json{{"family", to_string(fam)}, {"n", to_string(ns)}, {"rows", json::array()}};
  std::ostringstream text, csv;
  csv << "k,n,value" << (o.check != "none" ? ",check" : "") << "\n";
  bool all_ok = true;
  for (long k = ks.lo; k <= ks.hi; ++k) {
    SeqParams p{static_cast<int>(k), fam};
    std::vector<BigInt> terms;
    if (o.check == "genfun") {
      if (ns.lo != 0) throw DomainError("--check genfun expects n to start at 0");
      terms = genfun_coeffs(fam, p.k, static_cast<std::size_t>(ns.hi + 1));
    } else {
      terms = term_range(p, ns.lo, ns.hi);
    }
    json row{{"k", k}, {"terms", json::array()}};
    std::vector<bool> checks;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const long n = ns.lo + static_cast<long>(i);
      row["terms"].push_back(to_string(terms[i]));
      std::optional<bool> ok;
      if (o.check == "identity") ok = check_pell_lucas_identity(p.k, n);
      if (o.check == "links" && n >= 1 && n <= k + 1) ok = check_fibonacci_links(p.k, n);
      if (o.check == "genfun") ok = terms[i] == term(p, n);
      csv << k << "," << n << "," << to_string(terms[i]);
      if (o.check != "none") csv << "," << (ok ? (*ok ? "true" : "false") : "n/a");
      csv << "\n";
      if (ok) {
        checks.push_back(*ok);
        all_ok = all_ok && *ok;
      }
    }
    if (o.check != "none") row["checks_pass"] = std::all_of(checks.begin(), checks.end(), [](bool b) { return b; });
    if (ks.size() > 1) text << "k=" << k << ": ";
    for (std::size_t i = 0; i < terms.size(); ++i) text << (i ? " " : "") << to_string(terms[i]);
    text << "\n";
    out.data["rows"].push_back(row);
  }
  if (o.check != "none") {
    text << "check " << o.check << ": " << (all_ok ? "pass" : "FAIL") << "\n";
    out.data["check"] = o.check;
    out.data["check_pass"] = all_ok;
    if (!all_ok) out.code = kExitIncomplete;
  }
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

// ---------------------------------------------------------------------------

struct RootOpts {
  bool report = false;
  bool spectrum = false;
  long growth = 0;
};

json item_json(const ItemCheck& c) { return json{{"pass", c.pass}, {"method", c.method}, {"detail", c.detail}}; }

Output cmd_root(const Globals& g, const RootOpts& o) {
  IntRange ks = range_or(g.k, {3, 3});
  Output out;
  out.data = json::array();
  std::ostringstream text, csv;
  csv << "k,alpha,radius,g,bracket_lo,bracket_hi\n";
  for (long kk = ks.lo; kk <= ks.hi; ++kk) {
    const int k = static_cast<int>(kk);
    DominantRoot root = dominant_root(k, g.prec_bits);
    RealBall gk = g_k_value(root);
    json j{{"k", k},
           {"precision_bits", g.prec_bits},
           {"alpha", dec(root.alpha)},
           {"radius", root.alpha.rad().to_decimal(3, MPFR_RNDU)},
           {"g", dec(gk)},
           {"bracket_lo", root.bracket_lo.get_d()},
           {"bracket_hi", root.bracket_hi.get_d()}};
    text << "k=" << k << "  alpha = " << dec(root.alpha) << " +/- " << root.alpha.rad().to_decimal(3, MPFR_RNDU)
         << "\n      g_k(alpha) = " << dec(gk, 20) << "\n";
    csv << k << "," << dec(root.alpha) << "," << root.alpha.rad().to_decimal(3, MPFR_RNDU) << "," << dec(gk, 20) << ","
        << root.bracket_lo.get_d() << "," << root.bracket_hi.get_d() << "\n";
    if (o.report) {
      RootInequalityReport r = root_inequality_report(k, g.prec_bits);
      j["inequalities"] = json{{"precision_bits", r.precision_bits},
                               {"monotone", item_json(r.monotone)},
                               {"golden_bounds", item_json(r.golden_bounds)},
                               {"g_bounds", item_json(r.g_bounds)},
                               {"c_k_bound", item_json(r.c_k_bound)},
                               {"quadratic", item_json(r.quadratic)},
                               {"all_pass", r.all_pass()}};
      for (const auto* c : {&r.monotone, &r.golden_bounds, &r.g_bounds, &r.c_k_bound, &r.quadratic}) {
        text << "      " << (c->pass ? "[pass] " : "[FAIL] ") << c->detail << " (" << c->method << ")\n";
      }
      if (!r.all_pass()) out.code = kExitIncomplete;
    }
    if (o.spectrum) {
      RootSpectrum s = root_spectrum(k, g.prec_bits);
      json roots = json::array();
      text << "      spectrum:\n";
      for (std::size_t i = 0; i < s.roots.size(); ++i) {
        const double mag = binet_coefficient_magnitude(k, s.roots[i]);
        roots.push_back(json{{"re", dec(s.roots[i].re(), 20)},
                             {"im", dec(s.roots[i].im(), 20)},
                             {"radius", s.radii[i]},
                             {"abs_upper", s.roots[i].abs_upper().to_double(MPFR_RNDU)},
                             {"coefficient_magnitude", mag}});
        text << "        " << dec(s.roots[i].re(), 15) << " + " << dec(s.roots[i].im(), 15) << " i   |z| <= "
             << s.roots[i].abs_upper().to_double(MPFR_RNDU) << "  coefficient <= " << mag << "\n";
      }
      j["spectrum"] = roots;
    }
    if (o.growth > 0) {
      GrowthReport gr = growth_report(root, o.growth);
      j["growth"] = json{{"n_max", gr.n_max},
                         {"q_bounds", gr.q_bounds},
                         {"q_residual", gr.q_residual},
                         {"p_bounds", gr.p_bounds},
                         {"p_residual", gr.p_residual},
                         {"failures", gr.failures}};
      text << "      growth checks to n=" << gr.n_max << ": " << (gr.all_pass() ? "pass" : "FAIL") << "\n";
      if (!gr.all_pass()) out.code = kExitIncomplete;
    }
    out.data.push_back(j);
  }
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

// ---------------------------------------------------------------------------

struct BoundOpts {
  std::string kind = "all";
  bool fixed_point = false;
  bool corrected = false;
};

Output cmd_bound(const Globals& g, const BoundOpts& o) {
  Output out;
  out.data = json::object();
  std::ostringstream text, csv;
  csv << "name,value\n";
  auto emit = [&](const std::string& name, double v, const std::string& note = "") {
    out.data[name] = decimal_of(v, "up").value;
    text << name << " = " << decimal_of(v, "up").value << (note.empty() ? "" : "  (" + note + ")") << "\n";
    csv << name << "," << decimal_of(v, "up").value << "\n";
  };
  const bool all = o.kind == "all";
  if (all || o.kind == "fixed-y") {
    FixedYCoefficient c = fixed_y_coefficient();
    emit("matveev_C", c.matveev_c);
    emit("fixed_y_coefficient", c.derived, c.rounding_note);
  }
  if (all || o.kind == "closed") {
    ClosedFormCoefficient c = closed_form_coefficient();
    emit("closed_form_coefficient", c.derived, "2 * 34 * c * log 100");
    emit("closed_form_coefficient_published_chain", c.from_published, "15.12e13 * 34");
  }
  if (all || o.kind == "n-bound") {
    const int k = g.k.empty() ? 510 : single(g.k, "--k");
    const int y = g.y.empty() ? 100 : single(g.y, "--y");
    NBound b = fixed_y_n_bound(k, y, o.fixed_point);
    emit("n_bound", b.n_bound, "k=" + std::to_string(k) + " y=" + std::to_string(y) +
                                   (o.fixed_point ? ", fixed point" : ", 2A log A"));
    emit("m_bound", b.m_bound, "1.73 n");
  }
  if (all || o.kind == "matveev") {
    LinearFormSpec spec;
    RealBall phi = golden_ratio(kBoundPrec);
    spec.t = 3;
    spec.D = 2;
    spec.terms = {{RealBall::from_int(100, kBoundPrec), std::log(100.0) * (1 + 1e-15), 0},
                  {phi, height_golden(), 0},
                  {(phi + 2) / (phi * 2), height_sqrt5_half(), 1}};
    emit("golden_matveev_coefficient", matveev_lower_exponent(spec).coefficient, "multiplies 1 + log 2n");
  }
  if (all || o.kind == "large-k") {
    BoundReport r = large_k_bounds(o.corrected);
    json steps = json::array();
    for (const auto& s : r.steps) {
      text << (s.pass ? "[pass] " : "[FAIL] ") << s.name << ": " << decimal_of(s.value, "nearest", 4).value << "  ("
           << s.note << ")\n";
      csv << s.name << "," << decimal_of(s.value, "nearest", 4).value << "\n";
      steps.push_back(json{{"name", s.name}, {"value", decimal_of(s.value, "nearest", 4).value}, {"pass", s.pass}});
    }
    json facts = json::array();
    for (const auto& f : r.facts) {
      text << (f.pass ? "[pass] " : "[FAIL] ") << f.detail << "\n";
      facts.push_back(json{{"pass", f.pass}, {"what", f.detail}});
    }
    out.data["large_k"] = json{{"provenance", r.provenance}, {"steps", steps}, {"facts", facts}};
    if (!r.all_pass()) out.code = kExitIncomplete;
  }
  if (out.data.empty()) throw DomainError("unknown --kind '" + o.kind + "'");
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

// ---------------------------------------------------------------------------

struct ReduceOpts {
  bool branch1 = false;
  bool branch2 = false;
  std::string gamma, mu, A, B, M;
  long index = -1;
};

Output cmd_reduce(const Globals& g, const ReduceOpts& o) {
  const bool explicit_form = !o.gamma.empty() || !o.mu.empty() || !o.A.empty() || !o.B.empty();
  if (int(o.branch1) + int(o.branch2) + int(explicit_form) != 1) {
    throw DomainError("choose exactly one of --branch1, --branch2 or --gamma/--mu/--A/--B");
  }
  std::vector<ReductionProblem> problems;
  if (explicit_form) {
    if (o.gamma.empty() || o.mu.empty() || o.A.empty() || o.B.empty() || o.M.empty()) {
      throw DomainError("an explicit reduction needs --gamma, --mu, --A, --B and --M");
    }
    Rational gq = parse_decimal(o.gamma), mq = parse_decimal(o.mu), bq = parse_decimal(o.B);
    if (bq <= 1) throw DomainError("--B must exceed 1");
    ReductionProblem p;
    p.label = "explicit";
    p.gamma = [gq](long bits) { return RealBall::from_rational(gq, bits); };
    p.mu = [mq](long bits) { return RealBall::from_rational(mq, bits); };
    p.log_base = [bq](long bits) { return log(RealBall::from_rational(bq, bits)); };
    p.A = parse_decimal(o.A);
    p.M = parse_decimal_integer(o.M);
    p.start_bits = std::max<long>(g.prec_bits, 4 * static_cast<long>(decimal_digits(p.M)));
    problems.push_back(p);
  } else {
    IntRange ys = range_or(g.y, {2, 100});
    for (long y = ys.lo; y <= ys.hi; ++y) {
      if (o.branch1) {
        const int k = single(g.k, "--k");
        std::optional<BigInt> M;
        if (!o.M.empty()) M = parse_decimal_integer(o.M);
        problems.push_back(build_branch1_problem(k, static_cast<int>(y), M));
      } else {
        if (o.M.empty()) throw DomainError("--branch2 needs --M");
        problems.push_back(build_branch2_problem(static_cast<int>(y), parse_decimal_integer(o.M)));
      }
    }
  }
  Output out;
  out.data = json::array();
  std::ostringstream text, csv;
  csv << "label,convergent_index,first_index_over_6M,q,epsilon_lower,w_bound,attempts,bits\n";
  double w_max = 0;
  for (auto& p : problems) {
    p.cap_bits = kDefaultPrecisionCap;
    ReductionResult r = bd_reduce(p);
    w_max = std::max(w_max, r.w_bound);
    const std::string eps = decimal_of(r.epsilon.lower_d(), "down", 6).value;
    const std::string w = decimal_of(r.w_bound, "up", 8).value;
    json j{{"label", r.label},
           {"convergent_index", r.convergent_index},
           {"first_index_over_6M", r.first_index_over_6m},
           {"q", to_string(r.q)},
           {"epsilon_lower", eps},
           {"w_bound", w},
           {"attempts", r.attempts},
           {"bits", r.bits_used}};
    if (o.index >= 0) {
      auto u = w_at_index(p, static_cast<std::size_t>(o.index));
      j["w_at_index"] = u ? json(decimal_of(*u, "up", 8).value) : json(nullptr);
    }
    text << r.label << ": convergent " << r.convergent_index << " (first q > 6M at " << r.first_index_over_6m
         << "), q has " << decimal_digits(r.q) << " digits, eps >= " << eps << ", w < " << w << "\n";
    csv << r.label << "," << r.convergent_index << "," << r.first_index_over_6m << "," << to_string(r.q) << "," << eps
        << "," << w << "," << r.attempts << "," << r.bits_used << "\n";
    out.data.push_back(j);
  }
  if (problems.size() > 1) text << "max w = " << decimal_of(w_max, "up", 8).value << "\n";
  if (problems.size() == 1) out.data = out.data[0];
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

// ---------------------------------------------------------------------------

struct SearchOpts {
  bool oracle = false;
  int random = 0;
  long small_n = 0;
};

json record_json(const SolutionRecord& r) {
  return json{{"k", r.k}, {"n", r.n}, {"m", r.m}, {"y", r.y}, {"q_value", to_string(r.q_value)}};
}

Output cmd_search(const Globals& g, const SearchOpts& o) {
  Output out;
  std::ostringstream text, csv;
  if (o.random > 0) {
    std::mt19937_64 rng(g.seed);
    int agree = 0;
    json windows = json::array();
    for (int i = 0; i < o.random; ++i) {
      SearchWindow w = random_window(rng);
      const bool ok = oracle_crosscheck(w, g.threads);
      agree += ok;
      windows.push_back(json{{"k", to_string(w.k)}, {"n", to_string(w.n)}, {"m", to_string(w.m)},
                             {"y", to_string(w.y)}, {"cells", w.cells()}, {"agree", ok}});
      csv << to_string(w.k) << "," << to_string(w.n) << "," << to_string(w.m) << "," << to_string(w.y) << ","
          << (ok ? "agree" : "DIFFER") << "\n";
    }
    text << agree << "/" << o.random << " random windows agree with the oracle (seed " << g.seed << ")\n";
    out.data = json{{"seed", g.seed}, {"agree", agree}, {"total", o.random}, {"windows", windows}};
    if (agree != o.random) out.code = kExitIncomplete;
    out.text = text.str();
    out.csv = csv.str();
    return out;
  }
  if (o.small_n > 0) {
    const int k_max = g.k.empty() ? static_cast<int>(o.small_n) : static_cast<int>(parse_range(g.k).hi);
    auto recs = small_n_classify(k_max, o.small_n, range_or(g.y, {2, 100}));
    out.data = json::array();
    csv << "k,n,m,y,q_value\n";
    for (const auto& r : recs) {
      out.data.push_back(record_json(r));
      text << "k=" << r.k << " n=" << r.n << " Q=" << to_string(r.q_value) << " = " << r.y << "^" << r.m << "\n";
      csv << r.k << "," << r.n << "," << r.m << "," << r.y << "," << to_string(r.q_value) << "\n";
    }
    out.text = text.str();
    out.csv = csv.str();
    return out;
  }
  SearchWindow w{range_or(g.k, {3, 10}), range_or(g.n, {1, 144}), range_or(g.m, {2, 249}), range_or(g.y, {2, 100})};
  auto sols = enumerate(w, g.threads);
  json list = json::array();
  csv << "k,n,m,y,q_value\n";
  for (const auto& r : sols) {
    list.push_back(record_json(r));
    text << "k=" << r.k << " n=" << r.n << " Q=" << to_string(r.q_value) << " = " << r.y << "^" << r.m << "\n";
    csv << r.k << "," << r.n << "," << r.m << "," << r.y << "," << to_string(r.q_value) << "\n";
  }
  if (sols.empty()) text << "no solutions\n";
  out.data = json{{"window", json{{"k", to_string(w.k)}, {"n", to_string(w.n)}, {"m", to_string(w.m)}, {"y", to_string(w.y)}}},
                  {"solutions", list}};
  if (o.oracle) {
    const bool ok = enumerate(w, g.threads) == oracle_enumerate(w);
    out.data["oracle_agree"] = ok;
    text << "oracle: " << (ok ? "agree" : "DIFFER") << "\n";
    if (!ok) out.code = kExitIncomplete;
  }
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

// ---------------------------------------------------------------------------

struct PipelineOpts {
  std::string k_sample;
  std::string config;
  long small_n_max = 0;
};

Output cmd_pipeline(const Globals& g, const PipelineOpts& o, bool prec_given, bool threads_given) {
  PipelineConfig cfg;
  if (!o.config.empty()) cfg.apply(read_config_file(o.config));
  // flags win over the file
  std::map<std::string, std::string> flags;
  if (!o.k_sample.empty()) flags["k_sample"] = o.k_sample;
  if (g.full_sweep) flags["full_sweep"] = "true";
  if (prec_given) flags["prec_bits"] = std::to_string(g.prec_bits);
  if (o.small_n_max > 0) flags["small_n_max"] = std::to_string(o.small_n_max);
  if (threads_given) flags["threads"] = std::to_string(g.threads);
  if (!g.out.empty()) flags["out"] = g.out;
  cfg.apply(flags);

  PipelineReport rep = run_pipeline(cfg);
  Output out;
  out.data = to_json(rep);
  out.text = to_text(rep);
  std::ostringstream csv;
  csv << "stage,achieved,rounding,pass\n";
  for (const auto& s : rep.stages) {
    csv << s.name << "," << s.achieved.value << "," << s.achieved.rounding << "," << (s.pass ? "true" : "false") << "\n";
  }
  out.csv = csv.str();
  if (rep.verdict != "complete") out.code = rep.precision_failure ? kExitPrecision : kExitIncomplete;
  return out;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect powers in k-generalized Pell-Lucas sequences: terms, roots, bounds, reductions, search"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  auto* prec_opt = app.add_option("--prec-bits", g.prec_bits, "working precision in bits (64..4096)")
                       ->check(CLI::Range(64L, kDefaultPrecisionCap));
  app.add_option("-k,--k", g.k, "order k or range lo..hi");
  app.add_option("-n,--n", g.n, "index n or range lo..hi");
  app.add_option("-m,--m", g.m, "exponent range lo..hi");
  app.add_option("-y,--y", g.y, "base y or range lo..hi");
  app.add_flag("--full-sweep", g.full_sweep, "all k in [3,510] for the per-k reduction");
  app.add_option("--format", g.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", g.out, "write the output to this file");
  app.add_option("--seed", g.seed, "seed for random windows");
  auto* threads_opt = app.add_option("--threads", g.threads, "worker threads (0 = all cores)");

  SeqOpts seq_o;
  auto* seq = app.add_subcommand("seq", "print terms and check identities");
  seq->add_option("--family", seq_o.family, "pell, pell-lucas or fibonacci");
  seq->add_option("--check", seq_o.check, "none, identity, links or genfun")
      ->check(CLI::IsMember({"none", "identity", "links", "genfun"}));

  RootOpts root_o;
  auto* root = app.add_subcommand("root", "dominant root, inequality report, spectrum");
  root->add_flag("--report", root_o.report, "check the root and coefficient inequalities");
  root->add_flag("--spectrum", root_o.spectrum, "all roots with inclusion discs (k <= 16)");
  root->add_option("--growth", root_o.growth, "check growth bounds for 1 <= n <= N");

  BoundOpts bound_o;
  auto* bound = app.add_subcommand("bound", "linear-form bounds on n, m and k");
  bound->add_option("--kind", bound_o.kind, "all, fixed-y, closed, n-bound, matveev or large-k");
  bound->add_flag("--fixed-point", bound_o.fixed_point, "resolve n / log n < A numerically");
  bound->add_flag("--corrected", bound_o.corrected, "keep the factor 2 in the large-k coefficient");

  ReduceOpts red_o;
  auto* reduce = app.add_subcommand("reduce", "one Baker-Davenport reduction");
  reduce->add_flag("--branch1", red_o.branch1, "per-k form (needs -k, optional -y range)");
  reduce->add_flag("--branch2", red_o.branch2, "golden-ratio form (needs --M, optional -y range)");
  reduce->add_option("--gamma", red_o.gamma, "explicit gamma (decimal)");
  reduce->add_option("--mu", red_o.mu, "explicit mu (decimal)");
  reduce->add_option("--A", red_o.A, "explicit A (decimal)");
  reduce->add_option("--B", red_o.B, "explicit B (decimal)");
  reduce->add_option("-M,--M", red_o.M, "bound on the coefficient u, e.g. 2.77e87");
  reduce->add_option("--index", red_o.index, "also report w at this convergent index");

  SearchOpts search_o;
  auto* search = app.add_subcommand("search", "exact window enumeration");
  search->add_flag("--oracle", search_o.oracle, "cross-check against the naive oracle");
  search->add_option("--random", search_o.random, "cross-check this many random windows");
  search->add_option("--small-n", search_o.small_n, "enumerate 2F_{2n} = y^m for n up to this bound");

  PipelineOpts pipe_o;
  auto* pipeline = app.add_subcommand("pipeline", "full chain with a report");
  pipeline->add_option("--k-sample", pipe_o.k_sample, "comma-separated k values or ranges");
  pipeline->add_option("--config", pipe_o.config, "key=value config file (flags win)");
  pipeline->add_option("--small-n-max", pipe_o.small_n_max, "bound for the small-n enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Output result;
    if (*seq) result = cmd_seq(g, seq_o);
    if (*root) result = cmd_root(g, root_o);
    if (*bound) result = cmd_bound(g, bound_o);
    if (*reduce) result = cmd_reduce(g, red_o);
    if (*search) result = cmd_search(g, search_o);
    if (*pipeline) result = cmd_pipeline(g, pipe_o, prec_opt->count() > 0, threads_opt->count() > 0);
    const std::string text = render(result, g.format);
    if (!g.out.empty()) {
      std::ofstream f(g.out);
      if (!f) {
        err << "cannot write " << g.out << "\n";
        return kExitUsage;
      }
      f << text;
      if (*pipeline) out << "verdict: " << result.data["verdict"].get<std::string>() << "\n";
    } else {
      out << text;
    }
    return result.code;
  } catch (const PrecisionError& e) {
    err << "precision failure: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ReductionFailure& e) {
    err << "reduction failure: " << e.what() << "\n";
    return kExitIncomplete;
  }
}

}  // namespace pellpow
