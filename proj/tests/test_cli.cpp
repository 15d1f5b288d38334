#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "lqk_cli.hpp"

using lqk::cli::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  ::setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  std::ostringstream out, err;
  const int code = lqk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

/// Sorted key paths of a JSON document; arrays contribute their first element.
void collect(const json& j, const std::string& prefix, std::set<std::string>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
      out.insert(path);
      collect(it.value(), path, out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    collect(j.front(), prefix + "[]", out);
  }
}

std::string schema(const std::string& doc) {
  std::set<std::string> keys;
  collect(json::parse(doc), "", keys);
  std::string s;
  for (const auto& k : keys) s += k + "\n";
  return s;
}

/// Compares against tests/golden/<name>; LQK_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path p = fs::path(LQK_GOLDEN_DIR) / name;
  if (std::getenv("LQK_UPDATE_GOLDEN")) {
    std::ofstream(p, std::ios::binary) << actual;
    SUCCEED("updated " << p);
    return;
  }
  REQUIRE(fs::exists(p));
  CHECK(slurp(p) == actual);
}

std::string first_lines(const std::string& s, int n) {
  std::istringstream in(s);
  std::string line, out;
  for (int i = 0; i < n && std::getline(in, line); ++i) out += line + "\n";
  return out;
}

int tool_exit_code(const std::string& args) {
  const std::string cmd = std::string(LQK_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("norm") {
  const Result r = run({"norm", "-p", "2", "-q", "2", "-r", "2", "-a", "0", "0", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "norm_sq = 10.335425560099941\n");

  const Result o = run({"norm", "-p", "1", "-q", "1", "-r", "1", "-a", "0", "0", "0", "--oracle", "--json"});
  CHECK(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j["oracle"]["rel_err"].get<double>() <= 1e-8);
  check_golden("norm.json", o.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"norm", "-q", "-1"}).code == 2);
  CHECK(run({"norm", "-p", "3"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"check-series", "--radius", "1.5"}).code == 2);
  CHECK(run({"scan", "--resolution", "0"}).code == 2);
  CHECK(run({"certify", "--domain", "p3"}).code == 2);
  CHECK(run({"certify", "--domain", "p2", "-r", "1"}).code == 2);
  CHECK(run({"certify", "--domain", "p2", "--eps-grid", "1.0"}).code == 2);
  CHECK(run({"kernel", "-p", "1", "--nu1", "0.1", "0"}).code == 2);
  CHECK(run({"kernel", "--nu1", "1", "0"}).code == 2);
  CHECK(run({"norm", "--json", "--csv"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the installed binary reports the same exit codes") {
  CHECK(tool_exit_code("norm -p 2 -q 2 -r 2 -a 0 0 0") == 0);
  CHECK(tool_exit_code("norm -q -1") == 2);
  CHECK(tool_exit_code("check-series -p 2 -q 2 -r 3 --samples 20 --printed-variant") == 1);
}

TEST_CASE("kernel") {
  const Result r = run({"kernel", "-q", "2", "-r", "3", "--nu1", "0.3", "0.1", "--nu2", "0.2", "0",
                        "--series", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const double c_re = j["closed"][0], s_re = j["series"]["value"][0];
  CHECK(std::abs(c_re - s_re) < 1e-10 * std::abs(s_re));
}

TEST_CASE("check-series") {
  const Result ok = run({"check-series", "-p", "2", "-q", "2", "-r", "3", "--samples", "40"});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("PASS", 0) == 0);

  const Result bad = run({"check-series", "-p", "2", "-q", "2", "-r", "3", "--samples", "40",
                          "--printed-variant"});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("FAIL", 0) == 0);

  const Result slice = run({"check-series", "-q", "2", "-r", "3", "--samples", "40",
                            "--printed-variant", "--nu1-radius", "0"});
  CHECK(slice.code == 0);

  const Result csv = run({"check-series", "-p", "1", "--samples", "5", "--csv"});
  CHECK(csv.code == 0);
  check_golden("check_series_header.csv", first_lines(csv.out, 2));
}

TEST_CASE("certify p2 JSON schema and exit code") {
  const Result r = run({"certify", "--domain", "p2", "--q-grid", "1", "2", "--r-grid", "3",
                        "--eps-grid", "0.5", "0.9", "--angles", "32", "--radii", "16", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["points"].size() == 4);
  check_golden("certify_p2.schema", schema(r.out));
}

TEST_CASE("certify p1 JSON schema and exit code") {
  const Result r = run({"certify", "--domain", "p1", "-r", "1", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["verdict"] == "zero-found");
  CHECK(j["witnesses"][0]["kernel_relative"].get<double>() < 1e-8);
  check_golden("certify_p1.schema", schema(r.out));

  CHECK(run({"certify", "--domain", "p1", "-r", "2"}).code == 0);
}

TEST_CASE("scan output") {
  const Result one = run({"scan", "--resolution", "1"});
  CHECK(one.code == 0);
  check_golden("scan_origin.csv", one.out);

  const Result j = run({"scan", "--domain", "p1", "-q", "1", "-r", "1", "--resolution", "32", "--json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["min_abs_kernel"].get<double>() < 0.05 * doc["origin_abs_kernel"].get<double>());
}

TEST_CASE("output files embed the manifest and replay byte for byte") {
  const fs::path dir = fs::temp_directory_path() / "lqk_cli_test";
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"series.csv", {"check-series", "--samples", "30", "--seed", "5"}},
      {"scan.csv", {"scan", "--domain", "p1", "-q", "2", "-r", "0.5", "--resolution", "8"}},
      {"cert.json", {"certify", "--domain", "p1", "-r", "0.5", "3"}},
  };
  for (const auto& [file, args] : cases) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path p = dir / (std::to_string(rep) + file);
      auto a = args;
      a.push_back("--out");
      a.push_back(p.string());
      ::setenv("LQK_THREADS", rep == 0 ? "1" : "3", 1);
      REQUIRE(run(a).code == 0);
      const std::string content = slurp(p);
      CHECK(content.find("manifest") != std::string::npos);
      CHECK(content.find("1700000000") == std::string::npos);
      CHECK(content.find("2023-11-14T22:13:20Z") != std::string::npos);
      if (rep == 0)
        first = content;
      else
        CHECK(content == first);
    }
  }
  ::unsetenv("LQK_THREADS");
  fs::remove_all(dir);
}

TEST_CASE("different seeds give different samples") {
  const Result a = run({"check-series", "--samples", "3", "--csv", "--seed", "1"});
  const Result b = run({"check-series", "--samples", "3", "--csv", "--seed", "2"});
  CHECK(a.out != b.out);
}
