#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace gtra::harness {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCsvSchemaVersion = 1;

struct RunManifest {
  std::string command_line;
  std::uint64_t config_digest = 0;
  std::uint64_t master_seed = 0;
  std::string tool_version = kToolVersion;
  std::string timestamp;  // UTC, ISO-8601
  std::vector<std::string> outputs;  // relative to the output directory
  std::map<std::string, std::vector<std::string>> csv_columns;
  nlohmann::ordered_json config;  // resolved configuration, replayable
};

std::string utc_timestamp();
std::string hex64(std::uint64_t v);

nlohmann::ordered_json to_json(const RunManifest& m);
void write_manifest(const std::filesystem::path& path, const RunManifest& m);

}  // namespace gtra::harness
