#pragma once

#include <filesystem>
#include <string>

#include "gtra/harness/config.hpp"
#include "gtra/harness/csv.hpp"
#include "gtra/harness/svg.hpp"

namespace gtra::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitNumericError = 3,
};

struct CommandContext {
  std::string command_line;
  std::filesystem::path out_dir;
  unsigned threads = 1;
};

// Each command writes its CSVs, SVGs and manifest.json into ctx.out_dir and
// returns kExitOk. Configuration problems surface as ConfigError and solver
// failures as the other gtra::Error types; the CLI maps them to exit codes.
int cmd_solve(const RunConfig& cfg, const CommandContext& ctx);
int cmd_compare(const RunConfig& cfg, const CommandContext& ctx);
int cmd_sweep(const RunConfig& cfg, const CommandContext& ctx);  // needs cfg.sweep
int cmd_dynamics(const RunConfig& cfg, const CommandContext& ctx);

// Metric columns shared by compare.csv and sweep.csv.
inline constexpr const char* kMetricColumns[] = {
    "Um", "Ua", "vulnerability", "coverage", "effectiveness", "consumption"};

// Plot builders read the CSVs the commands write, so a plot can always be
// regenerated from its companion table.
PlotSpec compare_plot(const CsvTable& compare, const std::string& metric);
PlotSpec sweep_plot(const CsvTable& sweep);
PlotSpec dynamics_plot(const CsvTable& trajectories, const CsvTable& equilibrium);

}  // namespace gtra::harness
