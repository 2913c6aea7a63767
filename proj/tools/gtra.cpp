#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gtra/errors.hpp"
#include "gtra/harness/commands.hpp"
#include "gtra/harness/config.hpp"

namespace {

using namespace gtra::harness;

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  bool paper_scale = false;
  std::string axis;
  std::string values;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "JSON config file or run manifest")->required();
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--seed", o.seed, "master seed override");
  sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--paper-scale", o.paper_scale, "lift desk-scale limits");
}

int run(const std::string& command, const Options& o, const std::string& command_line) {
  RunConfig cfg = load_config(o.config);
  if (o.seed) {
    cfg.scenario.master_seed = *o.seed;
    if (cfg.game) cfg.game->seed = *o.seed;
  }
  if (o.paper_scale) apply_paper_scale(cfg);
  if (command == "sweep" && (!o.axis.empty() || !o.values.empty())) {
    SweepSpec sweep = cfg.sweep.value_or(SweepSpec{});
    if (!o.axis.empty()) sweep.axis = gtra::parse_sweep_axis(o.axis);
    if (!o.values.empty()) sweep.values = o.values;
    cfg.sweep = sweep;
  }
  validate(cfg);

  CommandContext ctx;
  ctx.command_line = command_line;
  ctx.out_dir = o.out;
  ctx.threads = o.threads;
  if (ctx.out_dir.empty()) {
    const char* env = std::getenv("GTRA_OUT_DIR");
    ctx.out_dir = env ? env : "out";
  }

  if (command == "solve") return cmd_solve(cfg, ctx);
  if (command == "compare") return cmd_compare(cfg, ctx);
  if (command == "sweep") return cmd_sweep(cfg, ctx);
  return cmd_dynamics(cfg, ctx);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security game strategy solver and experiment runner"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("GTRA_THREADS")) {
    const long t = std::strtol(env, nullptr, 10);
    if (t > 0) o.threads = static_cast<unsigned>(t);
  }

  for (const char* name : {"solve", "compare", "sweep", "dynamics"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, o);
    if (std::string(name) == "sweep") {
      sub->add_option("--axis", o.axis, "N, gamma, alpha, lambda or budget_fraction");
      sub->add_option("--values", o.values, "start:stop:step or a,b,c");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o, join_args(argc, argv));
  } catch (const gtra::ConfigError& e) {
    std::cerr << "gtra: config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const gtra::Error& e) {
    std::cerr << "gtra: " << e.what() << '\n';
    return kExitNumericError;
  } catch (const std::exception& e) {
    std::cerr << "gtra: " << e.what() << '\n';
    return 1;
  }
}
