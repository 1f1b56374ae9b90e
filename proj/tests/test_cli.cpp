#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "effcat/core.hpp"

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(EFFCAT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TmpFile {
  std::string path;
  explicit TmpFile(const char* name) : path(std::string("/tmp/effcat-test-") + name) {}
  ~TmpFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("exit codes reflect the outcome") {
  CHECK(run_cli("check --instance error --suite centrality") == 0);
  // An expected report-kind failure does not affect the exit status.
  CHECK(run_cli("check --instance list --suite sequential-property") == 0);
  // The state transformer is not monad-backed in this laboratory.
  CHECK(run_cli("check --instance state --suite strength-theorem") == 2);
  CHECK(run_cli("check --instance multiset --suite evlogic-compare") == 2);
  CHECK(run_cli("check --instance error --suite no-such-suite") == 2);
  CHECK(run_cli("check --instance error --suite centrality --set nonsense=1") == 2);
}

TEST_CASE("a starved budget exits with severity 3") {
  CHECK(run_cli("check --instance error --suite consistency-axioms "
                "--set max-enumerations=1") == 3);
}

TEST_CASE("EFFCAT_BUDGET lowers the hom-set bound") {
  std::string cmd = std::string("EFFCAT_BUDGET=4 ") + EFFCAT_CLI_PATH +
                    " check --instance error --suite consistency-axioms > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  TmpFile a("report-a.json"), b("report-b.json"), c("report-c.json");
  std::string base = "check --instance powerset --suite centrality --format json --report ";
  CHECK(run_cli(base + a.path) == 0);
  CHECK(run_cli(base + b.path) == 0);
  CHECK(run_cli(base + c.path + " --workers 4") == 0);
  CHECK(slurp(a.path) == slurp(b.path));
  CHECK(slurp(a.path) == slurp(c.path));
}

TEST_CASE("--set is applied with last-wins semantics") {
  TmpFile out("report-set.json");
  CHECK(run_cli("check --instance error --suite centrality --format json --set A=3 "
                "--set E=1 --set A=2 --report " +
                out.path) == 0);
  effcat::json report = effcat::json::parse(slurp(out.path));
  CHECK(report.at("config").at("sizes").at("A") == 2);
  CHECK(report.at("config").at("instance").at("E") == 1);
}

TEST_CASE("partiality defaults to a single error point") {
  TmpFile out("report-partiality.json");
  CHECK(run_cli("check --instance partiality --suite consistency-axioms --format json "
                "--report " +
                out.path) == 0);
  effcat::json report = effcat::json::parse(slurp(out.path));
  CHECK(report.at("config").at("instance").at("E") == 1);
}
