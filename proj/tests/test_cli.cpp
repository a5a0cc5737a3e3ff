#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int rc = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + ELLBASIS_CLI + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Run run_err(const std::string& args) {
  std::string cmd = ELLBASIS_CLI + std::string(" ") + args + " 2>&1 1>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ellbasis_cli_" + name)).string();
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

const std::string kExample = "construct --q 7 --d 5 --curve 1,3,5,3,2 --t 3,1 --a 4,2";

}  // namespace

TEST_CASE("construct, verify and op on the example") {
  auto path = tmp("example.json");
  auto c = run(kExample + " --out " + path);
  REQUIRE(c.rc == 0);
  json summary = json::parse(c.out);
  CHECK(summary["psi"] == true);
  CHECK(summary["base_change_applied"] == false);
  json bundle = json::parse(read_file(path));
  CHECK(bundle["omega"]["Pi"] == json::parse(R"([["4"],["5"],["4"],["0"],["3"],["1"]])"));

  auto v = run("verify --ctx " + path + " --trials 10");
  CHECK(v.rc == 0);
  CHECK(v.out.find("structural: PASS") != std::string::npos);
  CHECK(v.out.find("FAIL") == std::string::npos);

  CHECK(trim(run("op --ctx " + path + " --basis theta --op frob --a 1,2,3,4,5").out) == "2,3,4,5,1");
  CHECK(trim(run("op --ctx " + path + " --basis theta --op frob --power 5 --a 1,2,3,4,5").out) == "1,2,3,4,5");
  CHECK(trim(run("op --ctx " + path + " --basis theta --op frobinv --a 1,2,3,4,5").out) == "5,1,2,3,4");
  CHECK(trim(run("op --ctx " + path + " --basis omega --op div --a 1,2,3,4,5 --b 1,2,3,4,5").out) == "1,0,0,0,0");
  CHECK(trim(run("op --ctx " + path + " --basis theta --op div --a 1,2,3,4,5 --b 1,2,3,4,5").out) == "1,1,1,1,1");

  auto m = run("op --ctx " + path + " --basis theta --op mul --a 1,0,0,0,0 --b 0,1,0,0,0 --counters");
  CHECK(m.rc == 0);
  auto nl = m.out.find('\n');
  REQUIRE(nl != std::string::npos);
  json counters = json::parse(m.out.substr(nl + 1));
  CHECK(counters["convolutions"] == 5);
  CHECK(counters["hadamards"] == 2);

  // inverse then multiply returns one
  auto inv = trim(run("op --ctx " + path + " --basis psi --op inv --a 3,1,4,1,5").out);
  auto one = trim(run("op --ctx " + path + " --basis psi --op mul --a 3,1,4,1,5 --b " + inv).out);
  auto psi_one = trim(run("op --ctx " + path + " --basis psi --op div --a 2,0,0,0,0 --b 2,0,0,0,0").out);
  CHECK(one == psi_one);
  auto lag = trim(run("op --ctx " + path + " --basis theta --op inv --method lagrange --a 3,1,4,1,5").out);
  auto via_psi = trim(run("op --ctx " + path + " --basis theta --op inv --method psi --a 3,1,4,1,5").out);
  CHECK(lag == via_psi);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  auto path = tmp("codes.json");
  REQUIRE(run(kExample + " --out " + path).rc == 0);
  CHECK(run("").rc == 2);
  CHECK(run("frobnicate").rc == 2);
  CHECK(run("op --ctx " + path + " --op mul --a 1,2,3 --b 1,2,3,4,5").rc == 2);
  CHECK(run("op --ctx " + path + " --op mul --a 1,2,x,4,5 --b 1,2,3,4,5").rc == 2);
  CHECK(run("op --ctx " + path + " --op mul --a 1,2,9,4,5 --b 1,2,3,4,5").rc == 2);
  CHECK(run("op --ctx " + path + " --basis omega --op inv --a 0,0,0,0,0").rc == 3);
  CHECK(run("op --ctx " + path + " --basis theta --op div --a 1,1,1,1,1 --b 0,0,0,0,0").rc == 3);
  CHECK(run("construct --q 7 --d 5 --curve 1,3,5,3,2 --t 3,2 --out " + path + ".x").rc == 2);
  CHECK(run("construct --q 12 --d 5 --out " + path + ".x").rc == 2);
  CHECK(run("construct --q 2 --d 3 --no-base-change --out " + path + ".x").rc == 1);
  CHECK(run("verify --ctx /nonexistent/bundle.json").rc == 2);

  auto e = run_err("op --ctx " + path + " --basis omega --op inv --a 0,0,0,0,0");
  json err = json::parse(e.out);
  CHECK(err.contains("error"));
  CHECK(err.contains("message"));

  // a corrupted kappa fails verification
  json b = json::parse(read_file(path));
  auto k = b["omega"]["kappa"][1][0].get<std::string>();
  b["omega"]["kappa"][1][0] = std::to_string((std::stoi(k) + 1) % 7);
  auto bad = tmp("corrupt.json");
  std::ofstream(bad) << b.dump();
  auto v = run("verify --ctx " + bad + " --trials 10");
  CHECK(v.rc == 1);
  CHECK(v.out.find("reduction: FAIL") != std::string::npos);
  CHECK(run("verify --ctx " + bad + " --trials 0").rc == 0);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("seed from the environment") {
  auto p1 = tmp("seed1.json"), p2 = tmp("seed2.json"), p3 = tmp("seed3.json");
  REQUIRE(run("construct --q 1009 --d 7 --seed 3 --out " + p1, "ELLBASIS_SEED=11").rc == 0);
  REQUIRE(run("construct --q 1009 --d 7 --seed 11 --out " + p2).rc == 0);
  REQUIRE(run("construct --q 1009 --d 7 --seed 4 --out " + p3, "ELLBASIS_SEED=11").rc == 0);
  CHECK(read_file(p1) == read_file(p2));
  CHECK(read_file(p1) == read_file(p3));
  CHECK(json::parse(read_file(p1))["seed"] == "11");
  CHECK(run("construct --q 1009 --d 7 --out " + p1, "ELLBASIS_SEED=abc").rc == 2);
  for (auto& p : {p1, p2, p3}) std::remove(p.c_str());
}

TEST_CASE("bench output") {
  auto a = run("bench --q 1009 --d-range 5..8 --models general,short --no-timing --threads 2");
  auto b = run("bench --q 1009 --d-range 5..8 --models general,short --no-timing");
  REQUIRE(a.rc == 0);
  CHECK(a.out == b.out);
  int lines = 0;
  for (char ch : a.out) lines += ch == '\n';
  CHECK(lines == 1 + 4 * 2);
  CHECK(run("bench --q 1009 --d-range 8..5").rc == 2);
  CHECK(run("bench --q 1009 --models weierstrass").rc == 2);
  auto skip = run("bench --q 1009 --d-range 5..5 --models char2-ordinary --no-timing");
  CHECK(skip.out.find("skip") != std::string::npos);
}

TEST_CASE("dq and basechange") {
  auto dq = run("dq --q 654323 --d 14");
  REQUIRE(dq.rc == 0);
  json j = json::parse(dq.out);
  CHECK(j["dq"] == "56");
  CHECK(j["omega_guaranteed"] == true);
  auto bc = run("basechange --q 7 --d 5");
  REQUIRE(bc.rc == 0);
  json k = json::parse(bc.out);
  CHECK(k["f"] == 3);
  CHECK(k["F"] == 2);
  CHECK(k["Q"] == "343");
  CHECK(run("basechange --q 2 --d 3 --cap 2").rc == 1);
  CHECK(run("dq --q 12 --d 5").rc == 2);
}

TEST_CASE("info") {
  auto path = tmp("info.json");
  REQUIRE(run(kExample + " --out " + path).rc == 0);
  auto i = run("info --ctx " + path);
  CHECK(i.rc == 0);
  json j = json::parse(i.out);
  CHECK(j["d"] == 5);
  CHECK(run("info").rc == 0);
  std::remove(path.c_str());
}
