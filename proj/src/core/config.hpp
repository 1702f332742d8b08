// config.hpp: flat-keyed run configuration. Keys are "section.name"; every
// key is declared in a fixed schema with its kind and default, and unknown
// keys are rejected.

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "core/error.hpp"

namespace skyrmech {

using ConfigValue = std::variant<double, long, std::string>;

enum class ParamKind { Number, Integer, Text };

struct ParamSpec {
  std::string key;
  ParamKind kind;
  ConfigValue default_value;
  std::vector<std::string> choices;  // Text only; empty = free text
  std::string help;
};

const std::vector<ParamSpec>& config_schema();
const ParamSpec* find_param(const std::string& key);

class Config {
 public:
  Config();  // schema defaults

  static Config from_yaml_text(const std::string& text);
  static Config from_yaml_file(const std::string& path);
  /// Accepts the nested object produced by to_json_text().
  static Config from_json_text(const std::string& text);

  /// Parses `value` according to the key's kind. ConfigError on unknown key
  /// or malformed value.
  void set(const std::string& key, const std::string& value);
  void set_number(const std::string& key, double value);

  double number(const std::string& key) const;
  long integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  /// Integer keys are returned as double too (used by sweeps).
  double numeric(const std::string& key) const;
  bool is_numeric(const std::string& key) const;

  /// Canonical JSON: {"section": {"name": value}} with sorted keys.
  std::string to_json_text(int indent = -1) const;
  /// SHA-256 of the compact canonical JSON.
  std::string hash() const;

  const std::map<std::string, ConfigValue>& values() const { return values_; }
  bool operator==(const Config& other) const { return values_ == other.values_; }

 private:
  std::map<std::string, ConfigValue> values_;
};

}  // namespace skyrmech
