#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SEAGULL_CLI_PATH
#error "SEAGULL_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const char* tag) {
  static int counter = 0;
  return std::filesystem::temp_directory_path() / ("seagull_cli_test_" + std::to_string(::getpid()) + "_" +
                                                   std::to_string(counter++) + "_" + tag);
}

// Runs a shell command with stdout/stderr captured. The command may itself
// contain pipes; the exit code is the pipeline's.
CmdResult run_shell(const std::string& cmd) {
  const auto out = temp_file("out"), err = temp_file("err");
  const std::string full = cmd + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(full.c_str());
  CmdResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

const std::string kCli = std::string(SEAGULL_CLI_PATH);

}  // namespace

TEST_CASE("cli: invariants on K5") {
  const CmdResult r = run_shell(kCli + " invariants 'D~{'");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["g6"] == "D~{");
  CHECK(j["n"] == 5);
  CHECK(j["alpha"] == 1);
  CHECK(j["omega"] == 5);
  CHECK(j["delta"] == 4);
  CHECK(j["chi"] == 5);
  CHECK(j["cm"] == 2);
  CHECK(j["eta"] == 5);
}

TEST_CASE("cli: extremal piped into cm") {
  const CmdResult r = run_shell(kCli + " extremal --t 3 | " + kCli + " cm");
  REQUIRE(r.code == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("cli: cm witness output") {
  const CmdResult r = run_shell(kCli + " cm --witness 'D~{'");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.rfind("2 ", 0) == 0);
  const auto witness = nlohmann::json::parse(r.out.substr(2));
  REQUIRE(witness.is_array());
  CHECK(witness.size() == 2);
  CHECK(witness[0].size() == 2);
}

TEST_CASE("cli: eta and chi fast paths") {
  CHECK(run_shell("echo 'D~{' | " + kCli + " eta").out == "5\n");
  CHECK(run_shell("echo 'D~{' | " + kCli + " chi").out == "5\n");

  // alpha >= 3 rejects the fast path and points at the oracle
  const CmdResult r = run_shell(kCli + " chi 'D?" "?'");
  CHECK(r.code == 2);
  CHECK(r.err.find("bruteforce") != std::string::npos);
}

TEST_CASE("cli: enumerate counts and strict filtering") {
  const CmdResult all = run_shell(kCli + " enumerate --n 7 | wc -l");
  REQUIRE(all.code == 0);
  CHECK(all.out.find("107") != std::string::npos);

  const CmdResult strict = run_shell(kCli + " enumerate --n 7 --strict-alpha2 | wc -l");
  CHECK(strict.out.find("106") != std::string::npos);
}

TEST_CASE("cli: verify over the 5-vertex universe") {
  const CmdResult r = run_shell(kCli + " verify --n 5");
  REQUIRE(r.code == 0);
  CHECK(r.err.find("graphs: 14") != std::string::npos);
  CHECK(r.err.find("fails=0") != std::string::npos);
  // stdout carries one JSON record per universe graph
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("conj3"));
    ++count;
  }
  CHECK(count == 14);
}

TEST_CASE("cli: verify determinism across runs and job counts") {
  const CmdResult a = run_shell(kCli + " verify --n 6");
  const CmdResult b = run_shell(kCli + " verify --n 6");
  const CmdResult c = run_shell(kCli + " verify --n 6 --jobs 3");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("cli: verify --input with diagnostics") {
  const auto good = temp_file("good.g6");
  {
    std::ofstream f(good);
    f << "D~{\nDhc\n";  // K5 and one more 5-vertex graph
  }
  const CmdResult ok = run_shell(kCli + " verify --input " + good.string());
  CHECK(ok.code == 0);
  CHECK(ok.err.find("graphs: 2") != std::string::npos);
  std::filesystem::remove(good);

  const auto bad = temp_file("bad.g6");
  {
    std::ofstream f(bad);
    f << "D~{\nD?\n";  // second line truncated
  }
  const CmdResult fail = run_shell(kCli + " verify --input " + bad.string());
  CHECK(fail.code == 2);
  CHECK(fail.err.find("line 2") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("cli: verify processes out-of-universe graphs from files") {
  const auto path = temp_file("c7.g6");
  {
    std::ofstream f(path);
    f << "FhCKG\n";  // C7: alpha = 3
  }
  const CmdResult r = run_shell(kCli + " verify --input " + path.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"alpha\":3") != std::string::npos);
  CHECK(r.out.find("\"conj3\":\"not-applicable\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("cli: oracle subcommands") {
  CHECK(run_shell(kCli + " oracle cm 'D~{'").out == "2\n");
  CHECK(run_shell(kCli + " oracle eta 'D~{'").out == "5\n");
  CHECK(run_shell(kCli + " oracle alpha 'D?" "?'").out == "5\n");
  CHECK(run_shell(kCli + " oracle chi 'D~{'").out == "5\n");
  const CmdResult en = run_shell(kCli + " oracle enumerate --n 4 | wc -l");
  CHECK(en.out.find("7") != std::string::npos);
  CHECK(run_shell(kCli + " oracle nosuch 'D~{'").code == 2);
}

TEST_CASE("cli: usage and input errors exit with code 2") {
  CHECK(run_shell(kCli + " cm '#####'").code == 2);
  CHECK(run_shell(kCli + " --no-such-flag").code == 2);
  CHECK(run_shell(kCli + " verify").code == 2);
  CHECK(run_shell(kCli + " verify --input /no/such/file.g6").code == 2);
  CHECK(run_shell(kCli + " extremal --t 40").code == 2);
  CHECK(run_shell(kCli + " --help").code == 0);
}
