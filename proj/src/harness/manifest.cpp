#include "gtra/harness/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "gtra/harness/csv.hpp"

namespace gtra::harness {

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command_line"] = m.command_line;
  j["config_digest"] = hex64(m.config_digest);
  j["master_seed"] = m.master_seed;
  j["tool_version"] = m.tool_version;
  j["timestamp"] = m.timestamp;
  j["outputs"] = m.outputs;
  j["csv_schema_version"] = kCsvSchemaVersion;
  nlohmann::ordered_json columns = nlohmann::ordered_json::object();
  for (const auto& [file, cols] : m.csv_columns) columns[file] = cols;
  j["csv_columns"] = columns;
  j["config"] = m.config;
  return j;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
  write_text(path, to_json(m).dump(2) + "\n");
}

}  // namespace gtra::harness
