#include "gtra/harness/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "gtra/errors.hpp"

namespace gtra::harness {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(StrategyKind s) {
  switch (s) {
    case StrategyKind::NE: return "NE";
    case StrategyKind::PartOneS: return "PartOneS";
    case StrategyKind::Rand: return "Rand";
    case StrategyKind::Average: return "Average";
    case StrategyKind::AllOneS: return "AllOneS";
  }
  return "?";
}

StrategyKind parse_strategy(std::string_view name) {
  for (StrategyKind s : kAllStrategies) {
    if (name == to_string(s)) return s;
  }
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected NE, PartOneS, Rand, Average or AllOneS)");
}

std::string_view to_string(OutcomeMode m) {
  return m == OutcomeMode::Sampled ? "sampled" : "expected";
}

std::vector<int> RunConfig::compare_n_values() const {
  return n_values.empty() ? std::vector<int>{scenario.n} : n_values;
}

namespace {

// 1-based line of the first `"key":` in the document, 0 when absent.
int line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  std::size_t pos = 0;
  while ((pos = text.find(quoted, pos)) != std::string_view::npos) {
    std::size_t after = pos + quoted.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after < text.size() && text[after] == ':') {
      int line = 1;
      for (std::size_t i = 0; i < pos; ++i) line += text[i] == '\n';
      return line;
    }
    pos = after;
  }
  return 0;
}

class Reader {
 public:
  Reader(std::string_view text, std::string origin)
      : text_(text), origin_(std::move(origin)) {}

  [[noreturn]] void fail(std::string_view key, const std::string& msg) const {
    const int line = key.empty() ? 0 : line_of_key(text_, key);
    throw ConfigError(origin_ + ":" + std::to_string(line) + ": " + msg);
  }

  void allow_only(const json& obj, const std::set<std::string>& keys,
                  std::string_view where) const {
    if (!obj.is_object()) fail(where, std::string(where) + " must be an object");
    for (const auto& [k, _] : obj.items()) {
      if (!keys.count(k)) fail(k, "unknown key '" + k + "' in " + std::string(where));
    }
  }

  template <typename T>
  void read(const json& obj, const char* key, T& out) const {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw std::invalid_argument("boolean");
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) throw std::invalid_argument("integer");
        if constexpr (std::is_unsigned_v<T>) {
          if (v.is_number_integer() && !v.is_number_unsigned())
            throw std::invalid_argument("nonnegative integer");
        }
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) throw std::invalid_argument("number");
      } else {
        if (!v.is_string()) throw std::invalid_argument("string");
      }
      out = v.get<T>();
    } catch (const std::invalid_argument& e) {
      fail(key, std::string("'") + key + "' must be a " + e.what());
    }
  }

  template <typename T>
  void read(const json& obj, const char* key, std::optional<T>& out) const {
    if (!obj.contains(key) || obj.at(key).is_null()) return;
    T value{};
    read(obj, key, value);
    out = value;
  }

  // Wraps a validator so its error gets the line of `key`.
  template <typename Fn>
  void check(std::string_view key, Fn&& fn) const {
    try {
      fn();
    } catch (const ConfigError& e) {
      fail(key, e.what());
    }
  }

  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::string origin_;
};

TargetParams read_target(const Reader& r, const json& j, int id) {
  r.allow_only(j,
               {"reward", "penalty", "defense_cost", "attack_cost",
                "defender_penalty"},
               "target");
  TargetParams t;
  t.id = id;
  r.read(j, "reward", t.attack_reward);
  r.read(j, "penalty", t.attack_penalty);
  r.read(j, "defense_cost", t.defense_cost);
  r.read(j, "attack_cost", t.attack_cost);
  r.read(j, "defender_penalty", t.defender_penalty);
  return t;
}

GameInstance read_game(const Reader& r, const json& j) {
  r.allow_only(j, {"budget", "alpha", "lambda", "seed", "accounting", "targets"},
               "game");
  GameInstance g;
  r.read(j, "budget", g.budget);
  r.read(j, "alpha", g.alpha);
  r.read(j, "lambda", g.lambda);
  r.read(j, "seed", g.seed);
  std::string accounting = "defense_cost";
  r.read(j, "accounting", accounting);
  if (accounting == "probability") {
    g.accounting = ResourceAccounting::Probability;
  } else if (accounting != "defense_cost") {
    r.fail("accounting", "accounting must be 'defense_cost' or 'probability'");
  }
  if (!j.contains("targets") || !j.at("targets").is_array())
    r.fail("game", "game.targets must be an array");
  int id = 1;
  for (const auto& t : j.at("targets")) g.targets.push_back(read_target(r, t, id++));
  r.check("game", [&] { gtra::validate(g); });
  return g;
}

void read_ga(const Reader& r, const json& j, GaParams& ga) {
  r.allow_only(j,
               {"population_size", "generations", "crossover_rate",
                "mutation_rate", "mutation_scale", "elitism_count",
                "stall_generations", "tournament_size", "blend_alpha"},
               "ga");
  r.read(j, "population_size", ga.population_size);
  r.read(j, "generations", ga.generations);
  r.read(j, "crossover_rate", ga.crossover_rate);
  r.read(j, "mutation_rate", ga.mutation_rate);
  r.read(j, "mutation_scale", ga.mutation_scale);
  r.read(j, "elitism_count", ga.elitism_count);
  r.read(j, "stall_generations", ga.stall_generations);
  r.read(j, "tournament_size", ga.tournament_size);
  r.read(j, "blend_alpha", ga.blend_alpha);
  r.check("ga", [&] { ga.validate(); });
}

DynamicsConfig read_dynamics(const Reader& r, const json& j) {
  r.allow_only(j,
               {"target", "alpha", "grid", "dt", "max_steps", "tol",
                "record_every"},
               "dynamics");
  DynamicsConfig d;
  if (!j.contains("target")) r.fail("dynamics", "dynamics.target is required");
  d.target = read_target(r, j.at("target"), 1);
  r.read(j, "alpha", d.alpha);
  r.read(j, "grid", d.grid);
  r.read(j, "dt", d.integration.dt);
  r.read(j, "max_steps", d.integration.max_steps);
  r.read(j, "tol", d.integration.tol);
  r.read(j, "record_every", d.integration.record_every);
  if (!(d.alpha >= 0.0 && d.alpha <= 1.0)) r.fail("alpha", "dynamics.alpha must lie in [0, 1]");
  if (d.grid < 2) r.fail("grid", "dynamics.grid must be >= 2");
  if (!(d.integration.dt > 0.0)) r.fail("dt", "dynamics.dt must be > 0");
  if (d.integration.max_steps < 1) r.fail("max_steps", "dynamics.max_steps must be >= 1");
  if (!(d.integration.tol >= 0.0)) r.fail("tol", "dynamics.tol must be >= 0");
  if (d.integration.record_every < 1) r.fail("record_every", "dynamics.record_every must be >= 1");
  return d;
}

const std::set<std::string> kTopLevelKeys = {
    "scenario", "n",          "n_values",     "gamma",          "alpha",
    "lambda",   "instances",  "master_seed",  "budget_fraction", "instance_index",
    "times",    "trials",     "outcome_mode", "shared_draws",   "partones_order",
    "strategies", "ga",       "game",         "dynamics",       "sweep",
    "paper_scale"};

}  // namespace

namespace {

void validate_fields(const RunConfig& cfg) {
  cfg.scenario.validate();
  cfg.ga.validate();
  if (cfg.times < 1) throw ConfigError("times must be >= 1");
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.strategies.empty()) throw ConfigError("strategies must not be empty");
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(origin + ":" + std::to_string(line) + ":" +
                      std::to_string(col) + ": invalid JSON: " + e.what());
  }
  Reader r(text, origin);
  if (doc.is_object() && doc.contains("config") && doc.contains("config_digest")) {
    doc = doc.at("config");  // replaying a run manifest
  }
  r.allow_only(doc, kTopLevelKeys, "config");

  RunConfig cfg;
  auto& sc = cfg.scenario;
  std::string scenario_name(to_string(sc.scenario));
  r.read(doc, "scenario", scenario_name);
  r.check("scenario", [&] { sc.scenario = parse_scenario(scenario_name); });
  r.read(doc, "n", sc.n);
  r.read(doc, "gamma", sc.gamma);
  r.read(doc, "alpha", sc.alpha);
  r.read(doc, "lambda", sc.lambda);
  r.read(doc, "instances", sc.instances);
  r.read(doc, "master_seed", sc.master_seed);
  r.read(doc, "budget_fraction", sc.budget_fraction);
  try {
    sc.validate();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    r.fail(msg.substr(0, msg.find(' ')), msg);
  }

  if (doc.contains("n_values")) {
    const auto& nv = doc.at("n_values");
    if (!nv.is_array()) r.fail("n_values", "'n_values' must be an array of integers");
    for (const auto& v : nv) {
      if (!v.is_number_integer() || v.get<int>() < 1)
        r.fail("n_values", "'n_values' entries must be positive integers");
      cfg.n_values.push_back(v.get<int>());
    }
  }
  r.read(doc, "instance_index", cfg.instance_index);
  if (cfg.instance_index < 0 || cfg.instance_index >= sc.instances)
    r.fail("instance_index", "'instance_index' must lie in [0, instances)");
  r.read(doc, "times", cfg.times);
  if (cfg.times < 1) r.fail("times", "'times' must be >= 1");
  r.read(doc, "trials", cfg.trials);
  if (cfg.trials < 1) r.fail("trials", "'trials' must be >= 1");

  std::string mode(to_string(cfg.outcome_mode));
  r.read(doc, "outcome_mode", mode);
  if (mode == "sampled") {
    cfg.outcome_mode = OutcomeMode::Sampled;
  } else if (mode == "expected") {
    cfg.outcome_mode = OutcomeMode::Expected;
  } else {
    r.fail("outcome_mode", "'outcome_mode' must be 'sampled' or 'expected'");
  }
  r.read(doc, "shared_draws", cfg.shared_draws);

  std::string order = "index";
  r.read(doc, "partones_order", order);
  if (order == "index") {
    cfg.partones_order = PartOnesOrder::Index;
  } else if (order == "reward") {
    cfg.partones_order = PartOnesOrder::DescendingReward;
  } else {
    r.fail("partones_order", "'partones_order' must be 'index' or 'reward'");
  }

  if (doc.contains("strategies")) {
    const auto& list = doc.at("strategies");
    if (!list.is_array() || list.empty())
      r.fail("strategies", "'strategies' must be a non-empty array");
    cfg.strategies.clear();
    for (const auto& s : list) {
      if (!s.is_string()) r.fail("strategies", "'strategies' entries must be strings");
      r.check("strategies", [&] { cfg.strategies.push_back(parse_strategy(s.get<std::string>())); });
    }
  }
  if (doc.contains("ga")) read_ga(r, doc.at("ga"), cfg.ga);
  if (doc.contains("game")) cfg.game = read_game(r, doc.at("game"));
  if (doc.contains("dynamics")) cfg.dynamics = read_dynamics(r, doc.at("dynamics"));
  if (doc.contains("sweep")) {
    const auto& sw = doc.at("sweep");
    r.allow_only(sw, {"axis", "values"}, "sweep");
    SweepSpec sweep;
    std::string axis;
    r.read(sw, "axis", axis);
    r.read(sw, "values", sweep.values);
    r.check("axis", [&] { sweep.axis = parse_sweep_axis(axis); });
    r.check("values", [&] { (void)parse_range(sweep.values); });
    cfg.sweep = sweep;
  }
  r.read(doc, "paper_scale", cfg.paper_scale);

  try {
    validate_fields(cfg);
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    r.fail(msg.substr(0, msg.find(' ')), msg);
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ":0: cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

void validate(const RunConfig& cfg) {
  validate_fields(cfg);
  if (!cfg.paper_scale) {
    auto ns = cfg.compare_n_values();
    if (cfg.sweep && cfg.sweep->axis == SweepAxis::N) {
      for (double v : parse_range(cfg.sweep->values)) ns.push_back(static_cast<int>(v));
    }
    for (int n : ns) {
      if (n > kDeskScaleMaxTargets) {
        throw ConfigError("n = " + std::to_string(n) + " exceeds the desk-scale limit of " +
                          std::to_string(kDeskScaleMaxTargets) +
                          " targets; pass --paper-scale to run larger instances");
      }
    }
  }
}

std::vector<double> parse_range(std::string_view expr) {
  auto number = [&](std::string_view token) {
    const std::string s(token);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
      throw ConfigError("values = '" + std::string(expr) +
                        "' is not a range expression (start:stop:step or a,b,c)");
    }
    return v;
  };
  std::vector<double> out;
  if (expr.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
      const std::size_t colon = expr.find(':', start);
      parts.push_back(expr.substr(start, colon - start));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    if (parts.size() != 3) number("");
    const double lo = number(parts[0]);
    const double hi = number(parts[1]);
    const double step = number(parts[2]);
    if (!(step > 0.0) || hi < lo) {
      throw ConfigError("values = '" + std::string(expr) +
                        "' needs step > 0 and stop >= start");
    }
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 100000) throw ConfigError("values = '" + std::string(expr) + "' has too many points");
    for (std::size_t k = 0; k < count; ++k) {
      // Snap to 12 decimals so 0.1-style steps print cleanly.
      const double v = lo + static_cast<double>(k) * step;
      out.push_back(std::round(v * 1e12) / 1e12);
    }
  } else {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = expr.find(',', start);
      out.push_back(number(expr.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

void apply_paper_scale(RunConfig& cfg) {
  cfg.paper_scale = true;
  cfg.scenario.instances = kPaperScaleInstances;
}

namespace {

ordered_json target_json(const TargetParams& t) {
  ordered_json j;
  j["reward"] = t.attack_reward;
  j["penalty"] = t.attack_penalty;
  j["defense_cost"] = t.defense_cost;
  j["attack_cost"] = t.attack_cost;
  j["defender_penalty"] = t.defender_penalty;
  return j;
}

}  // namespace

ordered_json to_json(const RunConfig& cfg) {
  const auto& sc = cfg.scenario;
  ordered_json j;
  j["scenario"] = std::string(to_string(sc.scenario));
  j["n"] = sc.n;
  j["n_values"] = cfg.n_values;
  j["gamma"] = sc.gamma;
  j["alpha"] = sc.alpha;
  j["lambda"] = sc.lambda;
  j["instances"] = sc.instances;
  j["master_seed"] = sc.master_seed;
  j["budget_fraction"] =
      sc.budget_fraction ? ordered_json(*sc.budget_fraction) : ordered_json(nullptr);
  j["instance_index"] = cfg.instance_index;
  j["times"] = cfg.times;
  j["trials"] = cfg.trials;
  j["outcome_mode"] = std::string(to_string(cfg.outcome_mode));
  j["shared_draws"] = cfg.shared_draws;
  j["partones_order"] =
      cfg.partones_order == PartOnesOrder::Index ? "index" : "reward";
  ordered_json strategies = ordered_json::array();
  for (auto s : cfg.strategies) strategies.push_back(std::string(to_string(s)));
  j["strategies"] = strategies;

  ordered_json ga;
  ga["population_size"] = cfg.ga.population_size;
  ga["generations"] = cfg.ga.generations;
  ga["crossover_rate"] = cfg.ga.crossover_rate;
  ga["mutation_rate"] = cfg.ga.mutation_rate ? ordered_json(*cfg.ga.mutation_rate)
                                             : ordered_json(nullptr);
  ga["mutation_scale"] = cfg.ga.mutation_scale;
  ga["elitism_count"] = cfg.ga.elitism_count;
  ga["stall_generations"] = cfg.ga.stall_generations;
  ga["tournament_size"] = cfg.ga.tournament_size;
  ga["blend_alpha"] = cfg.ga.blend_alpha;
  j["ga"] = ga;

  if (cfg.game) {
    const auto& g = *cfg.game;
    ordered_json game;
    game["budget"] = g.budget;
    game["alpha"] = g.alpha;
    game["lambda"] = g.lambda;
    game["seed"] = g.seed;
    game["accounting"] =
        g.accounting == ResourceAccounting::Probability ? "probability" : "defense_cost";
    ordered_json targets = ordered_json::array();
    for (const auto& t : g.targets) targets.push_back(target_json(t));
    game["targets"] = targets;
    j["game"] = game;
  }
  if (cfg.dynamics) {
    const auto& d = *cfg.dynamics;
    ordered_json dyn;
    dyn["target"] = target_json(d.target);
    dyn["alpha"] = d.alpha;
    dyn["grid"] = d.grid;
    dyn["dt"] = d.integration.dt;
    dyn["max_steps"] = d.integration.max_steps;
    dyn["tol"] = d.integration.tol;
    dyn["record_every"] = d.integration.record_every;
    j["dynamics"] = dyn;
  }
  if (cfg.sweep) {
    ordered_json sw;
    sw["axis"] = std::string(to_string(cfg.sweep->axis));
    sw["values"] = cfg.sweep->values;
    j["sweep"] = sw;
  }
  j["paper_scale"] = cfg.paper_scale;
  return j;
}

std::uint64_t config_digest(const RunConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json(cfg).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gtra::harness
