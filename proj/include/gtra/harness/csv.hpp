#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gtra::harness {

// Reals are written with 17 significant digits so CSVs round-trip exactly;
// infinities and NaN print as inf, -inf and nan.
std::string format_real(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  // throws if absent
  double real(std::size_t row, const std::string& name) const;
  const std::string& cell(std::size_t row, const std::string& name) const;
};

std::string to_csv(const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

// Writes bytes verbatim (no newline translation).
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace gtra::harness
