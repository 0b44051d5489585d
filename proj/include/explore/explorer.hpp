#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "explore/unicycle.hpp"
#include "explore/viewpoint.hpp"
#include "explore/world.hpp"

namespace explore {

enum class Strategy { Persistent, Preventive, Online };
enum class Outcome { Complete, Timeout, SafetyViolation };

std::string to_string(Strategy s);
std::string to_string(Outcome o);
std::string to_string(InfoMeasure m);
std::string to_string(NavCost n);

struct ExplorationConfig {
  Strategy strategy = Strategy::Preventive;
  ViewpointQuery query;
  ControlParams control;
  MappingParams mapping;
  double p_free = 0.2;
  double p_occ = 0.8;
  double robot_radius = 0.35;
  double clearance = 0.1;
  double alpha_max = 3.0;  // 2 * sensing_range
  double beta_max = 2.25;  // 5 * (robot_radius + clearance)
  double scan_period = 0.1;
  double replan_period = 1.0;  // Online strategy only
  long step_budget = 0;        // 0: derived from the world free area
  std::vector<double> snapshot_milestones;
};

struct TickRow {
  long tick = 0;
  double time_s = 0.0;
  Vec2 position;
  double heading = 0.0;
  double s = 0.0;
  double v = 0.0;
  double w = 0.0;
  double s_rate = 0.0;
  double dist_unsafe = 0.0;
  double distance_traveled = 0.0;
  double mapping_pct = 0.0;
  int n_frontier_regions = 0;
  std::string event;
};

struct ReplanRow {
  long tick = 0;
  double time_s = 0.0;
  Vec2 start;  // always the current path point p(s), never the raw position
  int region_id = -1;
  Vec2 viewpoint;
  double path_length = 0.0;
  double travel_cost = 0.0;
};

struct RunRecord {
  std::vector<TickRow> ticks;
  std::vector<ReplanRow> replans;
  std::vector<std::pair<double, double>> map_curve;  // (distance, mapping pct)
  std::vector<std::pair<double, Raster<int>>> snapshots;
  Outcome outcome = Outcome::Timeout;
  std::string note;
  OccupancyGrid final_grid;
  long total_ticks = 0;
  double total_time = 0.0;
  double total_distance = 0.0;
  double final_mapping_pct = 0.0;
  bool livelock_prone = false;  // Online planning with Euclidean navigation cost
};

struct ExplorationPlan {
  PathPlan path;
  TargetSelection target;
};

/// Clusters frontiers, selects the target region maximizing information per
/// navigation cost, and plans the optimal path from start to its viewpoint.
/// std::nullopt iff no region qualifies (exploration is complete).
std::optional<ExplorationPlan> exploration_plan(const OccupancyGrid& grid,
                                                const SafeSpaces& spaces,
                                                Vec2 start,
                                                const ExplorationConfig& config);

/// Per-tick instrumentation hook, called after the map update.
using RunObserver = std::function<void(long tick, const OccupancyGrid& grid,
                                       const SafeSpaces& spaces,
                                       const UnicycleState& state)>;

RunRecord run_exploration(const GroundTruthWorld& world,
                          const ExplorationConfig& config, Vec2 start_position,
                          double start_heading, const RunObserver& observer = {});

RunRecord run_persistent(const GroundTruthWorld& world, ExplorationConfig config,
                         Vec2 start_position, double start_heading = 0.0);
RunRecord run_preventive(const GroundTruthWorld& world, ExplorationConfig config,
                         Vec2 start_position, double start_heading = 0.0);
RunRecord run_online(const GroundTruthWorld& world, ExplorationConfig config,
                     Vec2 start_position, double start_heading = 0.0);

}  // namespace explore
