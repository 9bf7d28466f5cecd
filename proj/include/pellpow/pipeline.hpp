#pragma once

// End-to-end run of the bound / reduction / search chain with a
// machine-readable report.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pellpow/search.hpp"

namespace pellpow {

struct PipelineConfig {
  std::vector<int> k_sample{3, 4, 5, 10, 50, 100, 250, 510};
  bool full_sweep = false;
  long prec_bits = 512;
  long prec_cap = 4096;
  long small_n_max = 50;
  unsigned threads = 0;
  std::string out;

  /// Applies key=value pairs (k_sample, full_sweep, prec_bits, prec_cap,
  /// small_n_max, threads, out). Unknown keys throw DomainError.
  void apply(const std::map<std::string, std::string>& kv);
  bool is_default_sample() const;
};

/// Reads a key=value file; '#' starts a comment, blank lines are skipped.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// A number together with the direction in which it was rounded.
struct Decimal {
  std::string value;
  std::string rounding;  // "up", "down", "exact"
};

struct StageRecord {
  std::string name;
  std::string anchor;  // published value or formula the target comes from
  std::string target;
  Decimal achieved;
  bool pass = false;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

struct PipelineReport {
  PipelineConfig config;
  std::vector<StageRecord> stages;
  std::vector<SolutionRecord> solutions;
  std::string verdict;  // "complete" or "incomplete"
  std::vector<std::string> failing_stages;
  bool precision_failure = false;
};

PipelineReport run_pipeline(const PipelineConfig& config);

nlohmann::ordered_json to_json(const PipelineReport& report);
std::string to_text(const PipelineReport& report);

/// Decimal string of a double with `digits` significant digits rounded in
/// the given direction ("up" or "down").
Decimal decimal_of(double v, const std::string& rounding, int digits = 8);

}  // namespace pellpow
