#include "explore/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "explore/pgm.hpp"

namespace explore {

namespace {

namespace fs = std::filesystem;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string milestone_tag(double pct) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", static_cast<int>(std::lround(pct * 100)));
  return buf;
}

Raster<int> cost_field_levels(const CostField& field) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (size_t i = 0; i < field.visit_cost.size(); ++i) {
    const double c = field.visit_cost[i];
    if (std::isfinite(c)) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  Raster<int> levels(field.visit_cost.width(), field.visit_cost.height(), 0);
  if (!(hi > 0.0)) return levels;
  const double log_lo = std::log(lo);
  const double span = std::max(1e-9, std::log(hi) - log_lo);
  for (size_t i = 0; i < levels.size(); ++i) {
    const double c = field.visit_cost[i];
    if (!std::isfinite(c)) continue;
    levels[i] = 1 + static_cast<int>(254.0 * (std::log(c) - log_lo) / span);
  }
  return levels;
}

ExperimentSpec single_run_spec(const ExperimentSpec& spec, int pose_index,
                               int combo_index) {
  ExperimentSpec one = spec;
  one.poses = {spec.poses[pose_index]};
  one.combos = {spec.combos[combo_index]};
  return one;
}

void write_mean_curves(const std::vector<std::vector<std::pair<double, double>>>& curves,
                       const std::string& combo_name, const std::string& out_dir) {
  double max_distance = 0.0;
  for (const auto& curve : curves)
    if (!curve.empty()) max_distance = std::max(max_distance, curve.back().first);
  const double step = 0.1;
  std::ofstream out(out_dir + "/curve_" + combo_name + ".csv");
  out << "distance_m,mean_mapping_pct\n";
  const int n = static_cast<int>(std::ceil(max_distance / step)) + 1;
  for (int i = 0; i <= n; ++i) {
    const double d = i * step;
    double sum = 0.0;
    for (const auto& curve : curves) {
      // Last mapping percentage at or before distance d; curves are sorted.
      double pct = curve.empty() ? 0.0 : curve.front().second;
      for (const auto& [dist, p] : curve) {
        if (dist > d) break;
        pct = p;
      }
      sum += pct;
    }
    out << fixed6(d) << "," << fixed6(sum / std::max<size_t>(1, curves.size())) << "\n";
  }
}

}  // namespace

std::string run_dir_name(const Combo& combo, int pose_index) {
  return combo.name() + "__pose" + std::to_string(pose_index);
}

void write_metrics_csv(const RunRecord& record, const std::string& path) {
  std::ofstream out(path);
  out << "tick,time_s,x_m,y_m,theta_rad,s,distance_traveled_m,mapping_pct,"
         "n_frontier_regions,event\n";
  for (const TickRow& row : record.ticks) {
    out << row.tick << "," << fixed6(row.time_s) << "," << fixed6(row.position.x)
        << "," << fixed6(row.position.y) << "," << fixed6(row.heading) << ","
        << fixed6(row.s) << "," << fixed6(row.distance_traveled) << ","
        << fixed6(row.mapping_pct) << "," << row.n_frontier_regions << ","
        << row.event << "\n";
  }
}

void write_trajectory_csv(const RunRecord& record, const std::string& path) {
  std::ofstream out(path);
  out << "tick,time_s,x_m,y_m,theta_rad,s,v_mps,w_radps,s_rate,dist_to_unsafe_m\n";
  for (const TickRow& row : record.ticks) {
    out << row.tick << "," << fixed6(row.time_s) << "," << fixed6(row.position.x)
        << "," << fixed6(row.position.y) << "," << fixed6(row.heading) << ","
        << fixed6(row.s) << "," << fixed6(row.v) << "," << fixed6(row.w) << ","
        << fixed6(row.s_rate) << "," << fixed6(row.dist_unsafe) << "\n";
  }
}

void write_replans_csv(const RunRecord& record, const std::string& path) {
  std::ofstream out(path);
  out << "tick,time_s,start_x_m,start_y_m,region_id,viewpoint_x_m,viewpoint_y_m,"
         "path_length_m,travel_cost\n";
  for (const ReplanRow& row : record.replans) {
    out << row.tick << "," << fixed6(row.time_s) << "," << fixed6(row.start.x) << ","
        << fixed6(row.start.y) << "," << row.region_id << ","
        << fixed6(row.viewpoint.x) << "," << fixed6(row.viewpoint.y) << ","
        << fixed6(row.path_length) << "," << fixed6(row.travel_cost) << "\n";
  }
}

ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const std::string& out_dir,
                                const ExperimentOptions& options) {
  if (spec.poses.empty() || spec.combos.empty())
    throw ConfigError("run_experiment: need at least one pose and one combination");
  fs::create_directories(out_dir);
  fs::create_directories(out_dir + "/runs");

  struct Task {
    int combo_index;
    int pose_index;
  };
  std::vector<Task> tasks;
  for (int c = 0; c < static_cast<int>(spec.combos.size()); ++c)
    for (int p = 0; p < static_cast<int>(spec.poses.size()); ++p)
      tasks.push_back({c, p});

  std::vector<SummaryRow> rows(tasks.size());
  std::vector<std::vector<std::pair<double, double>>> curves(tasks.size());
  std::vector<std::string> errors(tasks.size());

  std::atomic<size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task task = tasks[i];
      const Combo combo = spec.combos[task.combo_index];
      const StartPose pose = spec.poses[task.pose_index];
      try {
        ExplorationConfig config = spec.base;
        config.strategy = combo.strategy;
        config.query.info_kind = combo.info;
        config.query.nav_kind = combo.nav;

        const std::string dir =
            out_dir + "/runs/" + run_dir_name(combo, task.pose_index);
        fs::create_directories(dir);

        const RunRecord record =
            run_exploration(spec.world, config, {pose.x, pose.y}, pose.theta);

        write_metrics_csv(record, dir + "/metrics.csv");
        write_trajectory_csv(record, dir + "/trajectory.csv");
        write_replans_csv(record, dir + "/replans.csv");
        write_map_pgm(record.final_grid, dir + "/map_final.pgm");
        for (const auto& [pct, levels] : record.snapshots)
          write_pgm(levels, dir + "/map_" + milestone_tag(pct) + ".pgm");
        if (options.dump_cost_field) {
          const SafeSpaces spaces = safe_spaces(record.final_grid, config.robot_radius,
                                                config.clearance);
          const CostField field = build_cost_field(record.final_grid, spaces,
                                                   config.alpha_max, config.beta_max);
          write_pgm(cost_field_levels(field), dir + "/cost_field_final.pgm");
        }
        {
          std::ofstream cfg(dir + "/config.resolved");
          cfg << dump_config(single_run_spec(spec, task.pose_index, task.combo_index));
        }

        SummaryRow row;
        row.combo = combo.name();
        row.strategy = combo.strategy;
        row.info = combo.info;
        row.nav = combo.nav;
        row.pose_index = task.pose_index;
        row.pose = pose;
        row.outcome = record.outcome;
        row.total_distance = record.total_distance;
        row.total_time = record.total_time;
        row.replan_count = static_cast<int>(record.replans.size());
        row.final_mapping_pct = record.final_mapping_pct;
        row.run_dir = dir;
        rows[i] = row;
        curves[i] = record.map_curve;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (size_t i = 0; i < tasks.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("run " + run_dir_name(spec.combos[tasks[i].combo_index],
                                                     tasks[i].pose_index) +
                               " failed: " + errors[i]);

  ExperimentResult result;
  result.out_dir = out_dir;
  result.rows = rows;
  for (const SummaryRow& row : result.rows)
    result.any_safety_violation |= row.outcome == Outcome::SafetyViolation;

  {
    std::ofstream out(out_dir + "/summary.csv");
    out << "combo,strategy,info,nav,pose_index,pose_x_m,pose_y_m,pose_theta_rad,"
           "outcome,total_distance_m,total_time_s,replan_count,final_mapping_pct\n";
    for (const SummaryRow& row : result.rows) {
      out << row.combo << "," << to_string(row.strategy) << "," << to_string(row.info)
          << "," << to_string(row.nav) << "," << row.pose_index << ","
          << fixed6(row.pose.x) << "," << fixed6(row.pose.y) << ","
          << fixed6(row.pose.theta) << "," << to_string(row.outcome) << ","
          << fixed6(row.total_distance) << "," << fixed6(row.total_time) << ","
          << row.replan_count << "," << fixed6(row.final_mapping_pct) << "\n";
    }
  }

  // Mean mapping-vs-distance curve per combo.
  for (int c = 0; c < static_cast<int>(spec.combos.size()); ++c) {
    std::vector<std::vector<std::pair<double, double>>> combo_curves;
    for (size_t i = 0; i < tasks.size(); ++i)
      if (tasks[i].combo_index == c) combo_curves.push_back(curves[i]);
    write_mean_curves(combo_curves, spec.combos[c].name(), out_dir);
  }

  // Paired preventive-vs-persistent distances per pose and (info, nav).
  {
    std::map<std::tuple<std::string, std::string, int>, std::pair<double, double>> paired;
    bool have_both = false;
    for (const SummaryRow& row : result.rows) {
      if (row.strategy != Strategy::Persistent && row.strategy != Strategy::Preventive)
        continue;
      const auto key = std::tuple(to_string(row.info), to_string(row.nav), row.pose_index);
      auto& slot = paired[key];
      if (row.strategy == Strategy::Persistent) slot.first = row.total_distance;
      else slot.second = row.total_distance;
      if (slot.first > 0.0 && slot.second > 0.0) have_both = true;
    }
    if (have_both) {
      std::ofstream out(out_dir + "/paired_preventive_vs_persistent.csv");
      out << "info,nav,pose_index,persistent_distance_m,preventive_distance_m,ratio\n";
      for (const auto& [key, distances] : paired) {
        if (!(distances.first > 0.0) || !(distances.second > 0.0)) continue;
        out << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key)
            << "," << fixed6(distances.first) << "," << fixed6(distances.second) << ","
            << fixed6(distances.second / distances.first) << "\n";
      }
    }
  }
  return result;
}

}  // namespace explore
