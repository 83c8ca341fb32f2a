#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

const std::string kBin = INEQCERT_BIN;

struct RunResult {
  int exit_code = -1;
};

RunResult run(const std::string& args) {
  std::string cmd = kBin + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON text with volatile fields (timestamp, timing) blanked.
std::string stable_json(const std::string& text) {
  std::string s = std::regex_replace(text, std::regex("\"generated_at\": \"[^\"]*\""),
                                     "\"generated_at\": \"\"");
  return std::regex_replace(s, std::regex("\"wall_seconds\": [-0-9.e+]*"),
                            "\"wall_seconds\": 0");
}

std::string tmp(const std::string& name) { return "/tmp/ineqcert_cli_test_" + name; }

}  // namespace

TEST_CASE("identities subcommand") {
  CHECK(run("identities --mode both --out " + tmp("id.json")).exit_code == 0);
  std::string report = slurp(tmp("id.json"));
  CHECK(report.find("\"all_passed\": true") != std::string::npos);
  CHECK(run("identities --step G_subtract --out " + tmp("step.json")).exit_code == 0);
  CHECK(run("identities --step no_such_step").exit_code == 1);
  CHECK(run("identities --mode trig --tamper --out " + tmp("tam.json")).exit_code == 1);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run("scan --grid 1").exit_code == 64);
  CHECK(run("").exit_code == 64);
  CHECK(run("unknown-subcommand").exit_code == 64);
  CHECK(run("certify --lemma 7").exit_code == 64);
}

TEST_CASE("scan emits a CSV whose minimum is reported by exit code") {
  CHECK(run("scan --mode trig --grid 12 --out " + tmp("scan.csv")).exit_code == 0);
  std::string csv = slurp(tmp("scan.csv"));
  CHECK(csv.substr(0, 10) == "t,x,y,valu");
  // 12^3 data rows + header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12 * 12 * 12 + 1);
  CHECK(run("scan --mode hyp --grid 10 --out " + tmp("scanh.csv")).exit_code == 0);
}

TEST_CASE("critical emits per-start rows and classifies the manifold") {
  CHECK(run("critical --mode trig --starts 40 --seed 7 --out " + tmp("crit.csv")).exit_code == 0);
  std::string csv = slurp(tmp("crit.csv"));
  CHECK(csv.find("classification") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 41);
}

TEST_CASE("certify writes a certificate and echoes the configuration") {
  std::string args = "certify --lemma 2 --rho 0.05 --budget 2e5 --t0 1.0 --t1 1.1 --out " +
                     tmp("cert.json");
  CHECK(run(args).exit_code == 0);
  std::string cert = slurp(tmp("cert.json"));
  CHECK(cert.find("\"rho\": 0.05") != std::string::npos);
  CHECK(cert.find("\"status\": \"proved_strict\"") != std::string::npos);
  CHECK(cert.find("\"rounding\": \"outward-nudge\"") != std::string::npos);
  CHECK(cert.find("\"version\"") != std::string::npos);
}

TEST_CASE("certify with rho 0 on a crossing region is inconclusive, exit 1") {
  std::string args = "certify --lemma 2 --rho 0 --budget 30000 --t0 1.0 --t1 1.02 "
                     "--u0 0.4 --u1 0.7 --v0 0.4 --v1 0.7 --out " + tmp("rho0.json");
  CHECK(run(args).exit_code == 1);
  CHECK(slurp(tmp("rho0.json")).find("\"status\": \"inconclusive\"") != std::string::npos);
}

TEST_CASE("config file supplies defaults, flags win") {
  std::ofstream(tmp("cfg")) << "rho = 0.07\nbudget = 50000\nt0 = 1.0\nt1 = 1.1\n";
  std::string args = "certify --lemma 2 --config " + tmp("cfg") + " --budget 40000 --out " +
                     tmp("cfgcert.json");
  CHECK(run(args).exit_code == 0);
  std::string cert = slurp(tmp("cfgcert.json"));
  CHECK(cert.find("\"rho\": 0.07") != std::string::npos);  // from the file
  CHECK(run("certify --config /nonexistent.cfg --t0 1.0 --t1 1.01").exit_code == 1);
}

TEST_CASE("worker count comes from the environment when not flagged") {
  std::string cmd = "INEQCERT_WORKERS=4 " + kBin +
                    " certify --lemma 2 --t0 1.0 --t1 1.1 --out " + tmp("env.json") +
                    " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 0);
}

TEST_CASE("reports are byte-identical modulo timestamps") {
  std::string args = "certify --lemma 2 --budget 100000 --t0 1.0 --t1 1.2 --out ";
  REQUIRE(run(args + tmp("a.json")).exit_code == 0);
  REQUIRE(run(args + tmp("b.json")).exit_code == 0);
  CHECK(stable_json(slurp(tmp("a.json"))) == stable_json(slurp(tmp("b.json"))));

  REQUIRE(run("identities --mode both --out " + tmp("ra.json")).exit_code == 0);
  REQUIRE(run("identities --mode both --out " + tmp("rb.json")).exit_code == 0);
  CHECK(stable_json(slurp(tmp("ra.json"))) == stable_json(slurp(tmp("rb.json"))));
}
