#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "explore/experiment.hpp"
#include "explore/pgm.hpp"
#include "oracles.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::string, std::string>> parse_overrides(
    const std::vector<std::string>& sets) {
  std::vector<std::pair<std::string, std::string>> overrides;
  for (const std::string& kv : sets) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw explore::ConfigError("--set expects key=value, got `" + kv + "`");
    overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return overrides;
}

int cmd_run(const std::string& spec_path, const std::string& out_dir, int jobs,
            const std::vector<std::string>& sets, bool dump_cost_field) {
  const auto spec =
      explore::validate_config(read_file(spec_path), parse_overrides(sets));
  explore::ExperimentOptions options;
  options.jobs = jobs;
  options.dump_cost_field = dump_cost_field;
  const auto result = explore::run_experiment(spec, out_dir, options);
  for (const auto& row : result.rows) {
    std::cout << row.combo << " pose" << row.pose_index << ": "
              << explore::to_string(row.outcome) << ", distance "
              << row.total_distance << " m, mapping "
              << 100.0 * row.final_mapping_pct << "%, " << row.replan_count
              << " replans\n";
  }
  std::cout << "summary: " << result.out_dir << "/summary.csv\n";
  if (result.any_safety_violation) {
    std::cerr << "error: safety violation in at least one run\n";
    return 2;
  }
  return 0;
}

int cmd_oracle(const std::string& suite) {
  bool ok = true;
  if (suite == "transforms" || suite == "all")
    ok = explore::oracle::run_transform_suite(std::cout) && ok;
  if (suite == "dijkstra" || suite == "all")
    ok = explore::oracle::run_dijkstra_suite(std::cout) && ok;
  if (suite == "visibility" || suite == "all")
    ok = explore::oracle::run_visibility_suite(std::cout) && ok;
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_snapshot(const std::string& run_dir, double pct) {
  const auto spec = explore::validate_config(read_file(run_dir + "/config.resolved"));
  if (spec.poses.size() != 1 || spec.combos.size() != 1)
    throw explore::ConfigError("snapshot expects a single-run config.resolved");

  explore::ExplorationConfig config = spec.base;
  config.strategy = spec.combos[0].strategy;
  config.query.info_kind = spec.combos[0].info;
  config.query.nav_kind = spec.combos[0].nav;
  config.snapshot_milestones = {pct};

  const auto record = explore::run_exploration(
      spec.world, config, {spec.poses[0].x, spec.poses[0].y}, spec.poses[0].theta);
  char tag[16];
  std::snprintf(tag, sizeof(tag), "%03d", static_cast<int>(std::lround(pct * 100)));
  const std::string path = run_dir + "/map_" + tag + ".pgm";
  for (const auto& [milestone, levels] : record.snapshots) {
    if (milestone == pct) {
      explore::write_pgm(levels, path);
      std::cout << "wrote " << path << "\n";
      return 0;
    }
  }
  std::cerr << "run never reached " << 100.0 * pct << "% mapping (final "
            << 100.0 * record.final_mapping_pct << "%)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic 2D exploration laboratory"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_dir = "out";
  int jobs = 1;
  std::vector<std::string> sets;
  bool dump_cost_field = false;
  auto* run = app.add_subcommand("run", "Run an experiment spec");
  run->add_option("spec", spec_path, "Flat key = value spec file")->required();
  run->add_option("--jobs", jobs, "Worker threads");
  run->add_option("--set", sets, "Override a config key (key=value)");
  run->add_option("--out", out_dir, "Output directory");
  run->add_flag("--dump-cost-field", dump_cost_field,
                "Also write the final visit-cost field as a log-scaled P2 graymap");

  std::string suite = "all";
  auto* oracle = app.add_subcommand("oracle", "Run brute-force oracle suites");
  oracle->add_option("suite", suite, "transforms|dijkstra|visibility|all");

  std::string run_dir;
  double pct = 0.5;
  auto* snapshot = app.add_subcommand("snapshot", "Re-emit a map snapshot at a milestone");
  snapshot->add_option("run-dir", run_dir, "Run directory with config.resolved")->required();
  snapshot->add_option("pct", pct, "Mapping fraction in (0, 1]")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (run->parsed()) return cmd_run(spec_path, out_dir, jobs, sets, dump_cost_field);
    if (oracle->parsed()) return cmd_oracle(suite);
    if (snapshot->parsed()) return cmd_snapshot(run_dir, pct);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
