#include "sixfold/cli.hpp"
#include "sixfold/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sixfold::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  const Run r = run({"count", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P+ = 22, pi+ = 28, P- = 18, pi- = 32, pi = 60") != std::string::npos);
  CHECK(run({"count", "1"}).out.find("pi = 2") != std::string::npos);

  const Run json = run({"count", "10", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(nlohmann::ordered_json::parse(json.out)["pi_total"] == 16);
  CHECK(run({"--format", "csv", "count", "10"}).out.find("10,1,1,1,1,1,3,7,1,9,16") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "0"}).code == 2);
  CHECK(run({"count", "abc"}).code == 2);
  CHECK(run({"count", "-3"}).code == 2);
  CHECK(run({"count", "50", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "0"}).code == 2);
  CHECK(run({"terms", "50", "--side", "sideways"}).code == 2);
  CHECK(run({"terms", "50", "--max-q", "0"}).code == 2);
  CHECK(run({"bench", "5", "0"}).code == 2);
  CHECK(run({"count", "3074457345618258603"}).code == 2);  // 6m + 1 overflows
  CHECK(run({"verify", "100", "--oracle-cap", "50"}).code == 2);
  CHECK_FALSE(run({"count", "0"}).err.empty());
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("paper-check") != std::string::npos);
}

TEST_CASE("terms") {
  const Run r = run({"terms", "50", "--side", "minus", "--max-q", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5,5,1,1,-1,1,9\n") != std::string::npos);
  CHECK(r.out.find("11,11,1,1,-1,1,4\n") != std::string::npos);
  CHECK(r.out.find("7,7,1,0,1,1,7\n") != std::string::npos);
  CHECK(r.out.find("13,13,1,0,1,1,4\n") != std::string::npos);
  CHECK(run({"terms", "1", "--side", "plus"}).out.find("empty basis") != std::string::npos);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("50/50 match") != std::string::npos);
  CHECK(r.out.find("m = 50: engine (22, 28, 18, 32, 60)") != std::string::npos);
  CHECK(run({"verify", "200", "--fail-fast", "--format", "json"}).code == 0);
}

TEST_CASE("a mismatching sweep maps to exit code 1") {
  sixfold::VerifyReport report = sixfold::verify_sweep(20, false);
  CHECK(sixfold::cli::verify_exit_code(report) == 0);
  sixfold::CountSummary wrong = report.last->engine;
  wrong.pi_plus += 1;
  report.mismatches.push_back(sixfold::compare_counts(wrong, report.last->oracle));
  report.matched -= 1;
  CHECK(sixfold::cli::verify_exit_code(report) == 1);
}

TEST_CASE("paper-check and bench") {
  CHECK(run({"paper-check"}).code == 0);
  CHECK(run({"paper-check", "--errata"}).out.rfind("# Errata", 0) == 0);
  const Run bench = run({"bench", "50", "10"});
  CHECK(bench.code == 0);
  CHECK(bench.out.find("60") != std::string::npos);
  CHECK(run({"bench", "1", "1"}).out.find("engine terms = 0") != std::string::npos);
}

TEST_CASE("--out writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "sixfold_cli_out_test.json";
  std::filesystem::remove(path);
  const Run r = run({"count", "50", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(nlohmann::ordered_json::parse(body.str())["pi_total"] == 60);
  std::filesystem::remove(path);
}

TEST_CASE("installed binary honours the exit-code contract") {
  const auto status_of = [](const std::string& args) {
    const std::string cmd = std::string(SIXFOLD_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  CHECK(status_of("count 50") == 0);
  CHECK(status_of("verify 0") == 2);
  CHECK(status_of("count nope") == 2);
  CHECK(status_of("paper-check") == 0);

  std::array<char, 256> buffer{};
  std::string output;
  FILE* pipe = popen((std::string(SIXFOLD_BINARY) + " count 50").c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  pclose(pipe);
  CHECK(output.find("pi = 60") != std::string::npos);
}
