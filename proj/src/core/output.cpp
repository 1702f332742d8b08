#include "core/output.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <thread>

namespace skyrmech {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorCode::IoError, "sha256: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvTable::add(std::vector<Cell> row) {
  require(row.size() == columns.size(), "csv " + name + ": row width does not match header");
  rows.push_back(std::move(row));
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s;
}

}  // namespace

std::string CsvTable::render() const {
  require(units.size() == columns.size(), "csv " + name + ": unit row does not match header");
  std::string out = join(columns) + "\n" + join(units) + "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* d = std::get_if<double>(&row[i]))
        out += format_real(*d);
      else
        out += std::get<std::string>(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string RunManifest::to_json_text(bool deterministic_only) const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["version"] = version;
  j["config_hash"] = config_hash;
  auto object = [](const std::string& text) {
    return text.empty() ? nlohmann::json::object() : nlohmann::json::parse(text);
  };
  j["config"] = object(config_json);
  j["settings"] = object(settings_json);
  auto files_json = nlohmann::ordered_json::array();
  for (const auto& f : files)
    files_json.push_back({{"name", f.name}, {"sha256", f.sha256}, {"bytes", f.bytes}});
  j["files"] = files_json;
  j["warnings"] = warnings;
  if (!deterministic_only) j["wall_time_s"] = wall_time_s;
  return j.dump(2) + "\n";
}

void write_artifact(const std::string& dir, const std::string& name, const std::string& content,
                    RunManifest& manifest) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create output directory '" + dir + "': " + ec.message());
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) fail(ErrorCode::IoError, "write to '" + path.string() + "' failed");
  manifest.files.push_back({name, sha256_hex(content), content.size()});
}

int worker_count() {
  if (const char* env = std::getenv("SKYRMECH_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<int>(std::min(n, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& task) {
  if (n <= 0) return;
  std::vector<std::exception_ptr> errors(n);
  const int workers = std::min(worker_count(), n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int i = next++; i < n; i = next++) {
          try {
            task(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace skyrmech
