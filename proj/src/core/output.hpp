// output.hpp: CSV tables, checksums and the run manifest.

#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "core/error.hpp"

namespace skyrmech {

std::string sha256_hex(const std::string& bytes);

using Cell = std::variant<double, std::string>;

/// Header line, unit line, then data; reals use 17 significant digits.
struct CsvTable {
  std::string name;  // file stem, e.g. "fig3c"
  std::vector<std::string> columns;
  std::vector<std::string> units;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
  std::string render() const;
};

std::string format_real(double v);

struct ManifestFile {
  std::string name;
  std::string sha256;
  size_t bytes = 0;
};

struct RunManifest {
  std::string scenario;
  std::string version;
  std::string config_json;  // canonical, compact
  std::string config_hash;
  std::vector<ManifestFile> files;
  double wall_time_s = 0.0;
  std::string settings_json = "{}";  // tolerances, truncations, axis
  std::vector<std::string> warnings;

  /// wall_time excluded when deterministic_only is set.
  std::string to_json_text(bool deterministic_only = false) const;
};

/// Writes `content` to dir/name and records its checksum.
void write_artifact(const std::string& dir, const std::string& name, const std::string& content,
                    RunManifest& manifest);

/// Number of workers from SKYRMECH_WORKERS (default: hardware concurrency,
/// at least 1).
int worker_count();

/// Runs task(i) for i in [0, n) on up to worker_count() threads. The first
/// exception (lowest index) is rethrown after all tasks finish.
void parallel_for(int n, const std::function<void(int)>& task);

}  // namespace skyrmech
