#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pellpow/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pellpow");
  std::vector<char*> argv;
  for (auto& s : args) argv.push_back(s.data());
  std::ostringstream out, err;
  const int code = pellpow::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seq prints terms") {
  Run r = run({"seq", "--family", "pell-lucas", "-k", "3", "-n", "0..5"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 2 6 16 40 102\n");
  Run c = run({"seq", "-k", "2..6", "-n", "0..40", "--check", "identity"});
  CHECK(c.code == 0);
  CHECK(c.out.find("check identity: pass") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == pellpow::kExitUsage);
  CHECK(run({"seq", "--format", "yaml"}).code == pellpow::kExitUsage);
  CHECK(run({"seq", "--family", "tribonacci"}).code == pellpow::kExitUsage);
  CHECK(run({"reduce", "--branch1", "--branch2", "-k", "3"}).code == pellpow::kExitUsage);
  CHECK(run({"reduce", "--gamma", "1.5"}).code == pellpow::kExitUsage);
  CHECK(run({"--prec-bits", "8192", "root"}).code == pellpow::kExitUsage);
}

TEST_CASE("reduce emits JSON") {
  Run r = run({"reduce", "--branch2", "-y", "2", "-M", "2.77e87", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("q"));
  CHECK(j.contains("epsilon_lower"));
  CHECK(std::stod(j.at("w_bound").get<std::string>()) < 586);
  Run e = run({"reduce", "--gamma", "1.5849625007211562", "--mu", "0.3", "--A", "2", "--B", "2", "-M", "1000",
               "--format", "json"});
  CHECK(e.code == 0);
}

TEST_CASE("search and bound") {
  Run s = run({"search", "--k", "3..4", "--n", "1..144", "--y", "2..100", "--m", "2..249", "--format", "csv"});
  CHECK(s.code == 0);
  CHECK(s.out == "k,n,m,y,q_value\n3,3,4,2,16\n3,3,2,4,16\n4,3,4,2,16\n4,3,2,4,16\n");
  Run b = run({"bound", "--kind", "large-k", "--format", "json"});
  CHECK(b.code == 0);
  Run bad = run({"bound", "--kind", "nothing"});
  CHECK(bad.code == pellpow::kExitUsage);
}

TEST_CASE("root report") {
  Run r = run({"root", "-k", "5", "--report", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at(0).at("inequalities").at("all_pass") == true);
}
