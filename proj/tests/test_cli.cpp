// SPDX-License-Identifier: Apache-2.0
//
// Runs the installed command-line tool and checks outputs and exit codes.
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  const std::string err_path = "cli_test_stderr.txt";
  const std::string cmd = std::string(DODGSON_CLI_PATH) + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream e(err_path);
  std::stringstream ss;
  ss << e.rdbuf();
  r.err = ss.str();
  std::remove(err_path.c_str());
  return r;
}

std::string data(const char* name) { return std::string(DODGSON_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("score") {
  auto r = run("score " + data("sample.txt") + " --candidate A --scorer icr");
  CHECK(r.code == 0);
  CHECK(r.out.find("score: 1\n") != std::string::npos);
  CHECK(r.out.find("minimal solutions: 2\n  [0, 1, 0]\n  [1, 0, 0]\n") != std::string::npos);
  CHECK(r.err.empty());

  auto j = run("score " + data("sample.txt") + " --candidate C --scorer dfs --json");
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["score"] == 4);
  CHECK(doc["status"] == "exact");
  CHECK(doc["counters"]["condorcet_checks"] == 27);
  CHECK(doc["minimal_solutions"].size() >= 1);

  auto missing = run("score " + data("sample.txt") + " --candidate Z");
  CHECK(missing.code == 64);
  CHECK(missing.err.find("Z") != std::string::npos);
  CHECK(missing.out.empty());

  CHECK(run("score " + data("sample.txt") + " --candidate A --scorer nope").code == 64);
  CHECK(run("score " + data("malformed.txt") + " --candidate A").code == 65);
  CHECK(run("score " + data("no_such_file.txt") + " --candidate A").code == 65);
  CHECK(run("score --candidate A").code == 64);

  auto big = run("score " + data("hard.txt") + " --candidate X12 --scorer baseline");
  CHECK(big.code == 70);
  CHECK(big.err.find("entry cap") != std::string::npos);

  auto slow = run("score " + data("hard.txt") + " --candidate X12 --timeout 20 --json");
  CHECK(slow.code == 2);
  auto sd = nlohmann::json::parse(slow.out);
  CHECK(sd["status"] == "timed_out");
  CHECK(sd["score"].is_null());
}

TEST_CASE("winner") {
  auto r = run("winner " + data("sample.txt"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("winner: B (score 0)\n", 0) == 0);

  auto sym = run("winner " + data("symmetric.txt") + " --strategy full --scorer baseline");
  CHECK(sym.code == 0);
  CHECK(sym.out.rfind("winners: A, B (score 1)\n", 0) == 0);

  auto j = run("winner " + data("symmetric.txt") + " --strategy concurrent --json");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["winners"] == nlohmann::json::array({"A", "B"}));
  CHECK(doc["winning_score"] == 1);
  CHECK(doc["conclusive"] == true);
  CHECK(doc["candidates"].size() == 2);

  CHECK(run("winner " + data("sample.txt") + " --strategy ordered --scorer dfs").code == 64);
  CHECK(run("winner " + data("sample.txt") + " --strategy sideways").code == 64);

  auto slow = run("winner " + data("hard.txt") + " --strategy full --timeout 1");
  CHECK(slow.code == 2);
  CHECK(slow.out.find("no alternative better than") != std::string::npos);
}

TEST_CASE("gen") {
  auto a = run("gen --voters 5 --alts 5 --seed 42");
  CHECK(a.code == 0);
  CHECK(a.out.rfind("5 5\nA2 A3 A1 A5 A4\n", 0) == 0);
  CHECK(run("gen --voters 5 --alts 5 --seed 42").out == a.out);
  CHECK(run("gen --voters 0 --alts 3").code == 64);
  CHECK(run("gen --voters 3 --alts 0").code == 64);
}

TEST_CASE("analyze") {
  auto r = run("analyze --voters 5 --alts-max 10");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("m,phi,c,ratio_percent\n1,1,1,100.0\n", 0) == 0);
  CHECK(r.out.find("\n5,4425,225,5.1\n") != std::string::npos);
  CHECK(r.out.find("\n10,220825,3025,1.4\n") != std::string::npos);
  CHECK(run("analyze --voters 5 --alts-max 0").code == 64);
  CHECK(run("analyze --voters 5 --alts-max 3 --pretty").out.find("%") != std::string::npos);
}

TEST_CASE("bench and sweep") {
  auto b = run("bench --voters 4 --alts 3 --runs 1 --seed 3 --scorers icr,ucs");
  CHECK(b.code == 0);
  CHECK(b.out.rfind("scorer,mode,n,m,runs,", 0) == 0);
  CHECK(b.out.find("\nicr,standard,4,3,1,") != std::string::npos);
  CHECK(b.out.find("\nucs,standard,4,3,1,") != std::string::npos);
  CHECK(run("bench --runs 1 --mode fast").code == 64);
  CHECK(run("bench --runs 0").code == 64);

  auto s = run("sweep --window 500 --odd-n --max-voters 3 --max-alts 4");
  CHECK(s.code == 0);
  CHECK(s.out == "n,m_max,window_ms,repetitions\n1,4.00,500,1\n");
}
