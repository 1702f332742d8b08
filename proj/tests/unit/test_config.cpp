#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "core/config.hpp"
#include "support.hpp"

using namespace skyrmech;

TEST_CASE("schema keys are unique and sectioned") {
  std::set<std::string> seen;
  for (const auto& p : config_schema()) {
    CHECK(seen.insert(p.key).second);
    CHECK(p.key.find('.') != std::string::npos);
    CHECK_FALSE(p.help.empty());
  }
  CHECK(find_param("tip.h_ts_nm") != nullptr);
  CHECK(find_param("tip.bogus") == nullptr);
}

TEST_CASE("defaults and typed access") {
  Config c;
  CHECK(c.number("ssh.delta") == 0.25);
  CHECK(c.integer("fig8.n_cells") == 10);
  CHECK(c.text("fig8.case") == "a");
  CHECK(c.numeric("fig8.n_cells") == 10.0);
  CHECK(c.is_numeric("ssh.delta"));
  CHECK_FALSE(c.is_numeric("fig8.case"));
  CHECK_CODE(c.number("fig8.n_cells"), ErrorCode::ConfigError);
  CHECK_CODE(c.number("nope.key"), ErrorCode::ConfigError);
}

TEST_CASE("set parses by kind and validates") {
  Config c;
  c.set("ssh.delta", "-0.9");
  CHECK(c.number("ssh.delta") == -0.9);
  c.set("fig8.n_cells", "12");
  CHECK(c.integer("fig8.n_cells") == 12);
  c.set("fig8.case", "b");
  CHECK(c.text("fig8.case") == "b");
  CHECK_CODE(c.set("fig8.case", "z"), ErrorCode::ConfigError);
  CHECK_CODE(c.set("fig8.n_cells", "1.5"), ErrorCode::ConfigError);
  CHECK_CODE(c.set("ssh.delta", "abc"), ErrorCode::ConfigError);
  CHECK_CODE(c.set("ssh.unknown", "1"), ErrorCode::ConfigError);
  c.set_number("fig8.n_cells", 14);
  CHECK(c.integer("fig8.n_cells") == 14);
}

TEST_CASE("yaml loading") {
  const auto c = Config::from_yaml_text("ssh:\n  delta: 0.5\nfig8:\n  case: b\n");
  CHECK(c.number("ssh.delta") == 0.5);
  CHECK(c.text("fig8.case") == "b");
  CHECK(c.number("tip.h_ts_nm") == Config().number("tip.h_ts_nm"));
  CHECK_CODE(Config::from_yaml_text("ssh:\n  deltaa: 0.5\n"), ErrorCode::ConfigError);
  CHECK_CODE(Config::from_yaml_text("ssh: [1, 2\n"), ErrorCode::ConfigError);
  CHECK_CODE(Config::from_yaml_file("/nonexistent/file.yaml"), ErrorCode::ConfigError);
}

TEST_CASE("canonical json round trip and hash") {
  Config a;
  a.set("ssh.delta", "0.3");
  const auto b = Config::from_json_text(a.to_json_text());
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.hash().size() == 64);
  Config d;
  CHECK(d.hash() != a.hash());
  CHECK(a.to_json_text(2) != a.to_json_text());
  CHECK(Config::from_json_text(a.to_json_text(2)) == a);
}
