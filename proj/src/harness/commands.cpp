#include "gtra/harness/commands.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

#include "gtra/dynamics.hpp"
#include "gtra/errors.hpp"
#include "gtra/harness/experiment.hpp"
#include "gtra/harness/manifest.hpp"
#include "gtra/metrics.hpp"
#include "gtra/stats.hpp"

namespace gtra::harness {
namespace {

namespace fs = std::filesystem;

class OutputSet {
 public:
  OutputSet(const RunConfig& cfg, const CommandContext& ctx) : ctx_(ctx) {
    fs::create_directories(ctx.out_dir);
    manifest_.command_line = ctx.command_line;
    manifest_.config_digest = config_digest(cfg);
    manifest_.master_seed =
        cfg.game ? cfg.game->seed : cfg.scenario.master_seed;
    manifest_.config = to_json(cfg);
  }

  void csv(const std::string& name, const CsvTable& table) {
    write_csv(ctx_.out_dir / name, table);
    manifest_.outputs.push_back(name);
    manifest_.csv_columns[name] = table.header;
  }

  void svg(const std::string& name, const PlotSpec& plot) {
    write_text(ctx_.out_dir / name, render_svg(plot));
    manifest_.outputs.push_back(name);
  }

  void finish() {
    manifest_.outputs.push_back("manifest.json");
    manifest_.timestamp = utc_timestamp();
    write_manifest(ctx_.out_dir / "manifest.json", manifest_);
  }

 private:
  const CommandContext& ctx_;
  RunManifest manifest_;
};

std::vector<std::string> metric_cells(const StrategyEvaluation& e) {
  return {format_real(e.defender_utility), format_real(e.attacker_utility),
          format_real(e.vulnerability),    format_real(e.coverage),
          format_real(e.effectiveness),    format_real(e.consumption)};
}

std::vector<std::string> evaluation_header(std::vector<std::string> leading) {
  leading.push_back("instance");
  leading.push_back("strategy");
  for (const char* c : kMetricColumns) leading.emplace_back(c);
  leading.emplace_back("budget");
  leading.emplace_back("feasible");
  return leading;
}

// Instance rows followed by one mean row per strategy.
void append_evaluations(CsvTable& table, const std::vector<std::string>& leading,
                        const RunConfig& cfg,
                        const std::vector<InstanceEvaluation>& evals) {
  for (const auto& inst : evals) {
    for (const auto& e : inst.results) {
      auto row = leading;
      row.push_back(std::to_string(inst.instance));
      row.emplace_back(to_string(e.kind));
      for (auto& c : metric_cells(e)) row.push_back(std::move(c));
      row.push_back(format_real(inst.budget));
      row.emplace_back(e.strategy.budget_feasible ? "1" : "0");
      table.rows.push_back(std::move(row));
    }
  }
  for (std::size_t s = 0; s < cfg.strategies.size(); ++s) {
    std::vector<std::vector<double>> columns(std::size(kMetricColumns) + 2);
    for (const auto& inst : evals) {
      const auto& e = inst.results[s];
      const double values[] = {e.defender_utility, e.attacker_utility,
                               e.vulnerability,    e.coverage,
                               e.effectiveness,    e.consumption,
                               inst.budget,        e.strategy.budget_feasible ? 1.0 : 0.0};
      for (std::size_t c = 0; c < columns.size(); ++c) columns[c].push_back(values[c]);
    }
    auto row = leading;
    row.emplace_back("mean");
    row.emplace_back(to_string(cfg.strategies[s]));
    for (const auto& col : columns) row.push_back(format_real(mean(col)));
    table.rows.push_back(std::move(row));
  }
}

std::string metric_title(const std::string& metric) {
  static const std::map<std::string, std::string> titles = {
      {"Um", "Defender utility"},     {"Ua", "Attacker utility"},
      {"vulnerability", "Vulnerability"}, {"coverage", "Coverage"},
      {"effectiveness", "Effectiveness"}, {"consumption", "Resource consumption"}};
  const auto it = titles.find(metric);
  return it == titles.end() ? metric : it->second;
}

// Series in order of first appearance among the mean rows.
PlotSeries& series_named(std::vector<PlotSeries>& all, const std::string& name) {
  for (auto& s : all) {
    if (s.name == name) return s;
  }
  all.push_back({name, {}});
  return all.back();
}

}  // namespace

PlotSpec compare_plot(const CsvTable& compare, const std::string& metric) {
  PlotSpec plot;
  plot.title = metric_title(metric) + " by strategy";
  plot.x_label = "number of targets N";
  plot.y_label = metric_title(metric);
  for (std::size_t r = 0; r < compare.rows.size(); ++r) {
    if (compare.cell(r, "instance") != "mean") continue;
    series_named(plot.series, compare.cell(r, "strategy"))
        .points.emplace_back(compare.real(r, "n"), compare.real(r, metric));
  }
  return plot;
}

PlotSpec sweep_plot(const CsvTable& sweep) {
  PlotSpec plot;
  const std::string axis = sweep.rows.empty() ? "value" : sweep.cell(0, "axis");
  plot.title = "Player utilities vs " + axis;
  plot.x_label = axis;
  plot.y_label = "mean utility";
  for (std::size_t r = 0; r < sweep.rows.size(); ++r) {
    if (sweep.cell(r, "instance") != "mean") continue;
    const std::string& strategy = sweep.cell(r, "strategy");
    const double x = sweep.real(r, "value");
    series_named(plot.series, strategy + " Um").points.emplace_back(x, sweep.real(r, "Um"));
    series_named(plot.series, strategy + " Ua").points.emplace_back(x, sweep.real(r, "Ua"));
  }
  return plot;
}

PlotSpec dynamics_plot(const CsvTable& trajectories, const CsvTable& equilibrium) {
  PlotSpec plot;
  plot.title = "Replicator dynamics phase portrait";
  plot.x_label = "attack probability p";
  plot.y_label = "defense probability q";
  plot.x_range = {0.0, 1.0};
  plot.y_range = {0.0, 1.0};
  plot.legend = false;
  for (std::size_t r = 0; r < trajectories.rows.size(); ++r) {
    series_named(plot.series, "trajectory " + trajectories.cell(r, "trajectory"))
        .points.emplace_back(trajectories.real(r, "p"), trajectories.real(r, "q"));
  }
  if (!equilibrium.rows.empty() && equilibrium.cell(0, "status") == "interior") {
    plot.markers.push_back(
        {equilibrium.real(0, "p_star"), equilibrium.real(0, "q_star"), "NE"});
  }
  return plot;
}

int cmd_solve(const RunConfig& cfg, const CommandContext& ctx) {
  const GameInstance g =
      cfg.game ? *cfg.game : sample_instance(cfg.scenario, cfg.instance_index);
  GaParams ga = cfg.ga;
  ga.threads = ctx.threads;
  const SolveResult result = iga_solve(g, cfg.times, ga);
  const AttackStrategy response = qr_attack_distribution(g, result.q_star);

  OutputSet out(cfg, ctx);
  CsvTable q_table{{"target", "q", "resources"}, {}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    q_table.rows.push_back({std::to_string(g.targets[i].id),
                            format_real(result.q_star.q[i]),
                            format_real(result.q_star.q[i] * g.resource_weight(i))});
  }
  out.csv("q_star.csv", q_table);

  CsvTable summary{{"Ud", "Ua", "consumption", "budget", "iterations",
                    "generations", "seed"},
                   {}};
  summary.rows.push_back({format_real(result.utility),
                          format_real(attacker_utility(g, response, result.q_star)),
                          format_real(consumed_resources(g, result.q_star)),
                          format_real(g.budget), std::to_string(result.iterations_used),
                          std::to_string(result.generations_used),
                          std::to_string(result.seed)});
  out.csv("summary.csv", summary);

  CsvTable iterations{{"iteration", "utility", "running_max"}, {}};
  double running = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < result.per_iteration_utilities.size(); ++k) {
    running = std::max(running, result.per_iteration_utilities[k]);
    iterations.rows.push_back({std::to_string(k + 1),
                               format_real(result.per_iteration_utilities[k]),
                               format_real(running)});
  }
  out.csv("iterations.csv", iterations);
  out.finish();
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, const CommandContext& ctx) {
  CsvTable table{evaluation_header({"n"}), {}};
  for (int n : cfg.compare_n_values()) {
    ScenarioConfig sc = cfg.scenario;
    sc.n = n;
    append_evaluations(table, {std::to_string(n)}, cfg,
                       evaluate_scenario(sc, cfg, ctx.threads));
  }
  OutputSet out(cfg, ctx);
  out.csv("compare.csv", table);
  for (const char* metric : kMetricColumns) {
    out.svg(std::string("compare_") + metric + ".svg", compare_plot(table, metric));
  }
  out.finish();
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const CommandContext& ctx) {
  if (!cfg.sweep) throw ConfigError("sweep needs --axis and --values");
  const std::vector<double> values = parse_range(cfg.sweep->values);
  const auto grid = sweep_grid(cfg.scenario, cfg.sweep->axis, values);
  const std::string axis(to_string(cfg.sweep->axis));

  CsvTable table{evaluation_header({"axis", "value", "n"}), {}};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!cfg.paper_scale && grid[k].n > kDeskScaleMaxTargets) {
      throw ConfigError("N = " + std::to_string(grid[k].n) +
                        " exceeds the desk-scale limit; pass --paper-scale");
    }
    append_evaluations(table, {axis, format_real(values[k]), std::to_string(grid[k].n)},
                       cfg, evaluate_scenario(grid[k], cfg, ctx.threads));
  }
  OutputSet out(cfg, ctx);
  out.csv("sweep.csv", table);
  out.svg("sweep.svg", sweep_plot(table));
  out.finish();
  return kExitOk;
}

int cmd_dynamics(const RunConfig& cfg, const CommandContext& ctx) {
  if (!cfg.dynamics) throw ConfigError("dynamics command needs a 'dynamics' section");
  const DynamicsConfig& dyn = *cfg.dynamics;
  const SimplifiedPayoffs sp = reduce_payoffs(dyn.target, dyn.alpha);

  OutputSet out(cfg, ctx);
  CsvTable payoffs{{"a", "b", "c", "d", "f"}, {}};
  payoffs.rows.push_back({format_real(sp.a), format_real(sp.b), format_real(sp.c),
                          format_real(sp.d), format_real(sp.f)});
  out.csv("payoffs.csv", payoffs);

  CsvTable equilibrium{{"status", "p_star", "q_star"}, {}};
  if (const auto eq = interior_equilibrium(sp)) {
    equilibrium.rows.push_back({"interior", format_real(eq->p), format_real(eq->q)});
  } else {
    equilibrium.rows.push_back({"absent", "", ""});
  }
  out.csv("equilibrium.csv", equilibrium);

  const auto portrait = phase_portrait(sp, dyn.grid, dyn.integration, ctx.threads);
  CsvTable trajectories{{"trajectory", "t", "p", "q"}, {}};
  for (std::size_t k = 0; k < portrait.size(); ++k) {
    for (const auto& pt : portrait[k].points) {
      trajectories.rows.push_back({std::to_string(k), format_real(pt.t),
                                   format_real(pt.p), format_real(pt.q)});
    }
  }
  out.csv("trajectories.csv", trajectories);
  out.svg("phase_portrait.svg", dynamics_plot(trajectories, equilibrium));
  out.finish();
  return kExitOk;
}

}  // namespace gtra::harness
