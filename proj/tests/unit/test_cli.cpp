#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string("'") + SKYRMECH_CLI_PATH + "' " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  return std::string((std::istreambuf_iterator<char>(f)), {});
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("skyrmech_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("repeated runs produce identical artifacts") {
  const auto a = scratch("a"), b = scratch("b");
  REQUIRE(run("run fig8 --case b --delta -0.9 -o " + a.string()) == 0);
  REQUIRE(run("run fig8 --set fig8.case=b --set ssh.delta=-0.9 -o " + b.string()) == 0);
  CHECK(fs::exists(a / "fig8f.csv"));
  CHECK(slurp(a / "fig8f.csv") == slurp(b / "fig8f.csv"));
  CHECK(slurp(a / "fig8-effective.csv") == slurp(b / "fig8-effective.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("config file and overrides") {
  const auto d = scratch("cfg");
  fs::create_directories(d);
  std::ofstream(d / "c.yaml") << "tip:\n  h_ts_nm: 30\n";
  REQUIRE(run("run budget -c " + (d / "c.yaml").string() + " -o " + (d / "out").string()) == 0);
  CHECK(slurp(d / "out" / "manifest.json").find("\"h_ts_nm\": 30.0") != std::string::npos);
  std::ofstream(d / "bad.yaml") << "tip:\n  unknown: 1\n";
  CHECK(run("run budget -c " + (d / "bad.yaml").string() + " -o " + (d / "o2").string()) == 2);
  fs::remove_all(d);
}

TEST_CASE("exit codes") {
  const auto d = scratch("codes");
  CHECK(run("run budget --set nope.key=1 -o " + d.string()) == 2);
  CHECK(run("run budget --set malformed -o " + d.string()) == 2);
  CHECK(run("run fig7 --set fig7.energy_over_g=2 -o " + d.string()) == 3);
  CHECK(run("sweep fig5b --axis hopping.voltage_u_v --values 1:2 -o " + d.string()) == 2);
  CHECK(run("keys") == 0);
  CHECK(run("check --binary /nonexistent/acceptance") == 4);
  fs::remove_all(d);
}

TEST_CASE("sweep writes a manifest") {
  const auto d = scratch("sweep");
  REQUIRE(run("sweep fig2 --axis tip.h_ts_nm --values 10:30:3 -o " + d.string()) == 0);
  CHECK(fs::exists(d / "manifest.json"));
  CHECK(fs::exists(d / "fig2a.csv"));
  fs::remove_all(d);
}
