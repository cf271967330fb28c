#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lqw/analysis.hpp"
#include "lqw/classical.hpp"
#include "lqw/csv.hpp"
#include "lqw/evolve.hpp"
#include "lqw/hitting.hpp"
#include "lqw/parallel.hpp"
#include "lqw/verify.hpp"

namespace {

using namespace lqw;

// ---- two-layer parameter resolution: config file first, flags override ----

struct Params {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }

  std::string str(const std::string& key, const std::string& fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }

  std::string require(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) {
      throw std::invalid_argument("missing required parameter '" + key + "'");
    }
    return it->second;
  }

  double real(const std::string& key) const { return to_real(key, require(key)); }

  double real_or(const std::string& key, double fallback) const {
    return has(key) ? real(key) : fallback;
  }

  long integer(const std::string& key) const {
    const std::string text = require(key);
    size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(text, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter '" + key + "' is not an integer: '" + text + "'");
    }
    if (pos != text.size()) {
      throw std::invalid_argument("parameter '" + key + "' is not an integer: '" + text + "'");
    }
    return value;
  }

  long integer_or(const std::string& key, long fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  bool flag_or(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string text = values.at(key);
    if (text == "1" || text == "true" || text == "yes") return true;
    if (text == "0" || text == "false" || text == "no") return false;
    throw std::invalid_argument("parameter '" + key + "' must be a boolean, got '" + text + "'");
  }

 private:
  static double to_real(const std::string& key, const std::string& text) {
    size_t pos = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter '" + key + "' is not a number: '" + text + "'");
    }
    if (pos != text.size()) {
      throw std::invalid_argument("parameter '" + key + "' is not a number: '" + text + "'");
    }
    return value;
  }
};

/// Resolves [config file] <- [command line]; file keys must be known flags.
Params resolve_params(const std::map<std::string, std::string>& cli_values,
                      const std::set<std::string>& known_keys) {
  Params params;
  const auto config_it = cli_values.find("config");
  if (config_it != cli_values.end()) {
    for (const auto& [key, value] : parse_key_value_file(config_it->second)) {
      if (key == "config" || !known_keys.count(key)) {
        throw std::invalid_argument("unknown config key '" + key + "' for this command");
      }
      params.values[key] = value;
    }
  }
  for (const auto& [key, value] : cli_values) {
    if (key != "config") params.values[key] = value;
  }
  return params;
}

Topology make_topology(const Params& params) {
  const std::string name = params.require("topology");
  if (name == "directed-line" || name == "directed-ring") {
    return DirectedRing{static_cast<int>(params.integer("sites"))};
  }
  if (name == "undirected-line") {
    return UndirectedLine{static_cast<int>(params.integer("sites"))};
  }
  if (name == "binary-tree") {
    return BinaryTree{static_cast<int>(params.integer("depth"))};
  }
  throw std::invalid_argument(
      "unknown topology '" + name +
      "' (expected directed-line, undirected-line, or binary-tree)");
}

std::vector<std::pair<std::string, std::string>> topology_comment_entries(const Params& params) {
  std::vector<std::pair<std::string, std::string>> entries;
  entries.emplace_back("topology", params.require("topology"));
  if (params.has("sites")) entries.emplace_back("sites", params.require("sites"));
  if (params.has("depth")) entries.emplace_back("depth", params.require("depth"));
  return entries;
}

std::vector<double> site_probabilities(const ClassicalDistribution& dist, bool include_absorbed) {
  std::vector<double> out = dist.probabilities;
  if (include_absorbed && !dist.absorbed_by_site.empty()) {
    for (size_t i = 0; i < out.size(); ++i) out[i] += dist.absorbed_by_site[i];
  }
  return out;
}

const std::vector<AlphaMode>& standard_alpha_set() {
  static const std::vector<AlphaMode> alphas = {
      AlphaMode::finite(0.0), AlphaMode::finite(1.0), AlphaMode::equal_to_loop(),
      AlphaMode::infinite()};
  return alphas;
}

// ---- subcommand handlers ----

void run_evolve(const Params& params) {
  const Topology topology = make_topology(params);
  const double loop_weight = params.real("loop");
  const AlphaMode alpha = parse_alpha(params.str("alpha", "0"));
  const int steps = static_cast<int>(params.integer("steps"));
  const bool include_absorbed = params.flag_or("include-absorbed", true);

  const WalkConfig config = make_walk_config(topology, loop_weight, alpha, steps);
  const WalkerState state = evolve(config);
  const PositionDistribution quantum = position_distribution(state, include_absorbed);
  const ClassicalDistribution classical = classical_evolve(topology, loop_weight, steps);
  const std::vector<double> classical_probs = site_probabilities(classical, include_absorbed);

  CsvTable table;
  auto entries = topology_comment_entries(params);
  entries.emplace_back("loop", format_double(loop_weight));
  entries.emplace_back("alpha", alpha.tag());
  entries.emplace_back("steps", std::to_string(steps));
  entries.emplace_back("include-absorbed", include_absorbed ? "1" : "0");
  table.add_comment(config_comment("evolve", entries));
  table.set_header({"position", "p_quantum", "p_classical"});
  for (int site = 0; site < site_count(topology); ++site) {
    table.add_row({std::to_string(site_label(topology, site)),
                   format_double(quantum.probabilities[site]),
                   format_double(classical_probs[site])});
  }
  table.write(params.str("out", ""));
}

void run_sweep_l(const Params& params) {
  const Topology topology = make_topology(params);
  const LogGrid grid = parse_log_grid(params.require("loop-grid"));
  const std::vector<double> loops = grid.values();
  const int steps = static_cast<int>(params.integer("steps"));
  const bool include_absorbed = params.flag_or("include-absorbed", true);
  const int jobs = static_cast<int>(params.integer_or("jobs", 1));
  const std::vector<AlphaMode>& alphas = standard_alpha_set();

  struct Row {
    std::vector<double> quantum;
    double classical = 0.0;
    bool ok = true;
  };
  std::vector<Row> rows(loops.size());
  run_indexed(loops.size(), jobs, [&](size_t i) {
    Row row;
    try {
      for (const AlphaMode& alpha : alphas) {
        const WalkConfig config = make_walk_config(topology, loops[i], alpha, steps);
        const WalkerState state = evolve(config);
        row.quantum.push_back(
            mean_position(position_distribution(state, include_absorbed), topology));
      }
      const ClassicalDistribution classical = classical_evolve(topology, loops[i], steps);
      row.classical = classical_mean_position(classical, topology);
    } catch (const std::exception&) {
      row.ok = false;
      row.quantum.assign(alphas.size(), std::nan(""));
      row.classical = std::nan("");
    }
    rows[i] = std::move(row);
  });

  CsvTable table;
  auto entries = topology_comment_entries(params);
  entries.emplace_back("loop-grid", params.require("loop-grid"));
  entries.emplace_back("steps", std::to_string(steps));
  entries.emplace_back("include-absorbed", include_absorbed ? "1" : "0");
  table.add_comment(config_comment("sweep-l", entries));
  table.set_header({"l", "meanx_q_alpha0", "meanx_q_alpha1", "meanx_q_alphal", "meanx_q_alphainf",
                    "meanx_classical", "status"});
  for (size_t i = 0; i < loops.size(); ++i) {
    std::vector<std::string> cells{format_double(loops[i])};
    for (double q : rows[i].quantum) cells.push_back(format_double(q));
    cells.push_back(format_double(rows[i].classical));
    cells.push_back(rows[i].ok ? "ok" : "failed");
    table.add_row(std::move(cells));
  }
  table.write(params.str("out", ""));
}

void run_sweep_alpha(const Params& params) {
  const Topology topology = make_topology(params);
  const std::vector<double> loops = parse_double_list(params.require("loop"));
  for (double l : loops) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw std::invalid_argument("loop values must be finite and >= 0");
    }
  }
  const LogGrid grid = parse_log_grid(params.require("alpha-grid"));
  const std::vector<double> alphas = grid.values();
  const int steps = static_cast<int>(params.integer("steps"));
  const bool include_absorbed = params.flag_or("include-absorbed", true);
  const int jobs = static_cast<int>(params.integer_or("jobs", 1));

  // classical means are independent of alpha: one value per loop weight
  std::vector<double> classical_means;
  for (double l : loops) {
    const ClassicalDistribution classical = classical_evolve(topology, l, steps);
    classical_means.push_back(classical_mean_position(classical, topology));
  }

  struct Row {
    std::vector<double> quantum;
    bool ok = true;
  };
  std::vector<Row> rows(alphas.size());
  run_indexed(alphas.size(), jobs, [&](size_t i) {
    Row row;
    try {
      for (double l : loops) {
        const WalkConfig config =
            make_walk_config(topology, l, AlphaMode::finite(alphas[i]), steps);
        const WalkerState state = evolve(config);
        row.quantum.push_back(
            mean_position(position_distribution(state, include_absorbed), topology));
      }
    } catch (const std::exception&) {
      row.ok = false;
      row.quantum.assign(loops.size(), std::nan(""));
    }
    rows[i] = std::move(row);
  });

  CsvTable table;
  auto entries = topology_comment_entries(params);
  entries.emplace_back("loop", params.require("loop"));
  entries.emplace_back("alpha-grid", params.require("alpha-grid"));
  entries.emplace_back("steps", std::to_string(steps));
  entries.emplace_back("include-absorbed", include_absorbed ? "1" : "0");
  table.add_comment(config_comment("sweep-alpha", entries));
  std::vector<std::string> header{"alpha"};
  for (double l : loops) header.push_back("meanx_q_l" + format_double(l));
  for (double l : loops) header.push_back("meanx_cl_l" + format_double(l));
  header.push_back("status");
  table.set_header(std::move(header));
  for (size_t i = 0; i < alphas.size(); ++i) {
    std::vector<std::string> cells{format_double(alphas[i])};
    for (double q : rows[i].quantum) cells.push_back(format_double(q));
    for (double cl : classical_means) cells.push_back(format_double(cl));
    cells.push_back(rows[i].ok ? "ok" : "failed");
    table.add_row(std::move(cells));
  }
  table.write(params.str("out", ""));
}

void run_hitting(const Params& params) {
  const Topology topology = make_topology(params);
  const LogGrid grid = parse_log_grid(params.require("loop-grid"));
  const std::vector<double> loops = grid.values();
  const double epsilon = params.real_or("epsilon", kDefaultHittingEpsilon);
  const long max_steps = params.integer_or("max-steps", kDefaultMaxHittingSteps);
  const int jobs = static_cast<int>(params.integer_or("jobs", 1));
  const std::vector<AlphaMode>& alphas = standard_alpha_set();

  const std::vector<HittingSweepRow> rows =
      hitting_sweep(topology, alphas, loops, epsilon, jobs, max_steps);

  CsvTable table;
  auto entries = topology_comment_entries(params);
  entries.emplace_back("loop-grid", params.require("loop-grid"));
  entries.emplace_back("epsilon", format_double(epsilon));
  entries.emplace_back("max-steps", std::to_string(max_steps));
  table.add_comment(config_comment("hitting", entries));

  std::vector<std::string> header{"l"};
  const std::vector<std::string> tags = {"alpha0", "alpha1", "alphal", "alphainf"};
  for (const auto& tag : tags) header.push_back("tau_q_" + tag);
  header.push_back("tau_classical");
  for (const auto& tag : tags) header.push_back("T_" + tag);
  header.push_back("T_classical");
  for (const auto& tag : tags) header.push_back("resid_" + tag);
  header.push_back("resid_classical");
  for (const auto& tag : tags) header.push_back("status_" + tag);
  header.push_back("status_classical");
  table.set_header(std::move(header));

  const auto status_text = [](RowStatus s) {
    return s == RowStatus::kOk ? std::string("ok") : std::string("max-steps-exceeded");
  };
  for (const HittingSweepRow& row : rows) {
    std::vector<std::string> cells{format_double(row.loop_weight)};
    for (const auto& cell : row.quantum) cells.push_back(format_double(cell.tau_est));
    cells.push_back(format_double(row.classical.tau_est));
    for (const auto& cell : row.quantum) cells.push_back(std::to_string(cell.truncation_time));
    cells.push_back(std::to_string(row.classical.truncation_time));
    for (const auto& cell : row.quantum) cells.push_back(format_double(cell.residual));
    cells.push_back(format_double(row.classical.residual));
    for (const auto& cell : row.quantum) cells.push_back(status_text(cell.status));
    cells.push_back(status_text(row.classical.status));
    table.add_row(std::move(cells));
  }
  table.write(params.str("out", ""));
}

int run_verify() {
  const std::vector<CheckResult> results = run_verification_suite();
  std::cout << format_report(results);
  const size_t passed = static_cast<size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }));
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return all_passed(results) ? 0 : 3;
}

// ---- CLI wiring ----

struct SubcommandSpec {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> cli_values;
  std::set<std::string> known_keys;
};

void add_key(SubcommandSpec& spec, const std::string& key, const std::string& description) {
  spec.known_keys.insert(key);
  spec.app->add_option_function<std::string>(
      "--" + key, [&spec, key](const std::string& value) { spec.cli_values[key] = value; },
      description);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed lackadaisical quantum walks: simulation and analysis"};
  app.require_subcommand(1);

  std::vector<std::unique_ptr<SubcommandSpec>> specs;
  int exit_code = 0;

  const auto add_common = [&](SubcommandSpec& spec) {
    add_key(spec, "topology", "directed-line | undirected-line | binary-tree");
    add_key(spec, "sites", "ring site count N, or line half-width n (sites -n..n)");
    add_key(spec, "depth", "binary tree depth");
    add_key(spec, "config", "flat key=value config file; flags override file entries");
    add_key(spec, "out", "output CSV path (stdout when omitted)");
  };

  const auto make_sub = [&](const std::string& name, const std::string& description,
                            const std::function<void(const Params&)>& handler) {
    auto spec = std::make_unique<SubcommandSpec>();
    spec->app = app.add_subcommand(name, description);
    add_common(*spec);
    SubcommandSpec* raw = spec.get();
    raw->app->callback([raw, handler]() {
      handler(resolve_params(raw->cli_values, raw->known_keys));
    });
    specs.push_back(std::move(spec));
    return specs.back().get();
  };

  {
    SubcommandSpec* sub = make_sub(
        "evolve", "quantum vs classical position distribution at a fixed time", run_evolve);
    add_key(*sub, "loop", "self-loop weight l");
    add_key(*sub, "alpha", "initial coin parameter: decimal, 'l', or 'inf' (default 0)");
    add_key(*sub, "steps", "number of walk steps t");
    add_key(*sub, "include-absorbed", "count absorbed leaf mass in distributions (default 1)");
  }
  {
    SubcommandSpec* sub = make_sub(
        "sweep-l", "mean position vs loop weight for alpha in {0, 1, l, inf}", run_sweep_l);
    add_key(*sub, "loop-grid", "log-spaced grid start:stop:points");
    add_key(*sub, "steps", "number of walk steps t");
    add_key(*sub, "include-absorbed", "count absorbed leaf mass in distributions (default 1)");
    add_key(*sub, "jobs", "worker threads (default 1; output independent of this)");
  }
  {
    SubcommandSpec* sub = make_sub(
        "sweep-alpha", "mean position vs alpha for fixed loop weights", run_sweep_alpha);
    add_key(*sub, "loop", "comma-separated fixed loop weights");
    add_key(*sub, "alpha-grid", "log-spaced grid start:stop:points (finite alphas)");
    add_key(*sub, "steps", "number of walk steps t");
    add_key(*sub, "include-absorbed", "count absorbed leaf mass in distributions (default 1)");
    add_key(*sub, "jobs", "worker threads (default 1; output independent of this)");
  }
  {
    SubcommandSpec* sub = make_sub(
        "hitting", "mean hitting time vs loop weight, quantum and classical", run_hitting);
    add_key(*sub, "loop-grid", "log-spaced grid start:stop:points");
    add_key(*sub, "epsilon", "series truncation threshold (default 1e-6)");
    add_key(*sub, "max-steps", "per-run step cap (default 10000000)");
    add_key(*sub, "jobs", "worker threads (default 1; output independent of this)");
  }

  CLI::App* verify_app = app.add_subcommand("verify", "run the numerical verification suite");
  verify_app->callback([&exit_code]() { exit_code = run_verify(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const lqw::MaxStepsExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
