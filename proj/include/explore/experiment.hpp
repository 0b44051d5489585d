#pragma once

#include <string>
#include <vector>

#include "explore/config.hpp"

namespace explore {

struct SummaryRow {
  std::string combo;
  Strategy strategy;
  InfoMeasure info;
  NavCost nav;
  int pose_index = 0;
  StartPose pose;
  Outcome outcome = Outcome::Timeout;
  double total_distance = 0.0;
  double total_time = 0.0;
  int replan_count = 0;
  double final_mapping_pct = 0.0;
  std::string run_dir;
};

struct ExperimentResult {
  std::vector<SummaryRow> rows;  // ordered by (combo index, pose index)
  bool any_safety_violation = false;
  std::string out_dir;
};

struct ExperimentOptions {
  int jobs = 1;
  bool dump_cost_field = false;
};

/// Runs every (pose, combo) pair, writing one run directory each plus
/// summary.csv, per-combo mean map curves, and the preventive-vs-persistent
/// paired distance table when both strategies are present.
ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const std::string& out_dir,
                                const ExperimentOptions& options = {});

std::string run_dir_name(const Combo& combo, int pose_index);

/// CSV serializations (fixed 6-decimal floats, so files are byte-stable).
void write_metrics_csv(const RunRecord& record, const std::string& path);
void write_trajectory_csv(const RunRecord& record, const std::string& path);
void write_replans_csv(const RunRecord& record, const std::string& path);

}  // namespace explore
