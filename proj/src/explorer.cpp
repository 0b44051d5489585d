#include "explore/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "explore/pgm.hpp"

namespace explore {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Persistent: return "persistent";
    case Strategy::Preventive: return "preventive";
    case Strategy::Online: return "online";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Complete: return "complete";
    case Outcome::Timeout: return "timeout";
    case Outcome::SafetyViolation: return "safety_violation";
  }
  return "?";
}

std::string to_string(InfoMeasure m) {
  switch (m) {
    case InfoMeasure::Uniform: return "uniform";
    case InfoMeasure::Volume: return "volume";
    case InfoMeasure::Entropy: return "entropy";
  }
  return "?";
}

std::string to_string(NavCost n) {
  switch (n) {
    case NavCost::Uniform: return "uniform";
    case NavCost::Euclidean: return "euclidean";
    case NavCost::Geodesic: return "geodesic";
  }
  return "?";
}

std::optional<ExplorationPlan> exploration_plan(const OccupancyGrid& grid,
                                                const SafeSpaces& spaces,
                                                Vec2 start,
                                                const ExplorationConfig& config) {
  const std::vector<Cell> frontiers = detect_frontiers(grid);
  if (frontiers.empty()) return std::nullopt;
  const std::vector<FrontierRegion> regions = cluster_frontiers(frontiers, grid);
  const CostField field =
      build_cost_field(grid, spaces, config.alpha_max, config.beta_max);
  const ShortestPathField reach = shortest_paths(field, start);
  const auto target = select_target_region(grid, regions, frontiers, spaces, field,
                                           reach, config.query);
  if (!target) return std::nullopt;
  auto path = extract_path(reach, field, target->viewpoint);
  if (!path)
    throw std::logic_error("exploration_plan: selected viewpoint unreachable");
  return ExplorationPlan{std::move(*path), *target};
}

namespace {

long derive_step_budget(const GroundTruthWorld& world, const ControlParams& control) {
  const double coverage_m = world.free_cell_count() * world.resolution;
  const double seconds = coverage_m / control.v_max;
  return 20L * static_cast<long>(std::ceil(seconds / control.dt));
}

class RunContext {
 public:
  RunContext(const GroundTruthWorld& world, const ExplorationConfig& config)
      : config_(config),
        grid_(world.width_cells(), world.height_cells(), world.resolution,
              config.p_free, config.p_occ, config.mapping) {}

  const ExplorationConfig& config_;

  void refresh_derived() {
    if (grid_.revision() == last_revision_) return;
    last_revision_ = grid_.revision();
    spaces_ = safe_spaces(grid_, config_.robot_radius, config_.clearance);
    frontiers_ = detect_frontiers(grid_);
    regions_ = cluster_frontiers(frontiers_, grid_);
  }

  bool complete_at(Vec2 p) {
    if (frontiers_.empty()) return true;
    const CostField field =
        build_cost_field(grid_, spaces_, config_.alpha_max, config_.beta_max);
    const ShortestPathField reach = shortest_paths(field, p);
    for (const FrontierRegion& region : regions_) {
      if (actionable_info(grid_, region, frontiers_, spaces_, reach, config_.query) >
          config_.query.info_threshold)
        return false;
    }
    return true;
  }

  OccupancyGrid grid_;
  SafeSpaces spaces_;
  std::vector<Cell> frontiers_;
  std::vector<FrontierRegion> regions_;
  long last_revision_ = -1;
};

}  // namespace

RunRecord run_exploration(const GroundTruthWorld& world,
                          const ExplorationConfig& config, Vec2 start_position,
                          double start_heading, const RunObserver& observer) {
  const Cell start_cell = cell_at(start_position, world.resolution);
  if (!world.occupied.in_bounds(start_cell) || world.is_occupied(start_cell))
    throw std::invalid_argument("run_exploration: start pose is not in ground-truth free space");

  RunRecord record;
  record.livelock_prone = config.strategy == Strategy::Online &&
                          config.query.nav_kind == NavCost::Euclidean;
  if (record.livelock_prone)
    record.note = "online planning with euclidean navigation cost may exhibit livelocks";

  RunContext ctx(world, config);

  // Sensor warm-up: dwell at the start pose until traversed cells latch Free,
  // so the initial map has a nonempty planning space and real frontiers.
  {
    const RangeScan first = simulate_scan(world, start_position);
    const int warmup = config.mapping.scans_to_latch_free(config.p_free);
    for (int i = 0; i < warmup; ++i) integrate_scan(ctx.grid_, first);
  }
  ctx.refresh_derived();
  if (!ctx.spaces_.in_planning(start_cell))
    throw std::invalid_argument(
        "run_exploration: start pose is not in the planning space after the first scan");

  UnicycleState state{start_position, wrap_angle(start_heading), 0.0};
  PathPlan path({start_position}, {0.0});

  const long budget = config.step_budget > 0 ? config.step_budget
                                             : derive_step_budget(world, config.control);
  const double dt = config.control.dt;
  double time = 0.0;
  double distance = 0.0;
  double next_scan_time = config.scan_period;
  double last_replan_time = -config.replan_period;  // Online fires on the first tick
  std::vector<double> milestones = config.snapshot_milestones;
  std::sort(milestones.begin(), milestones.end());
  size_t next_milestone = 0;

  record.outcome = Outcome::Timeout;
  for (long tick = 0; tick < budget; ++tick) {
    if (time >= next_scan_time - 1e-9) {
      integrate_scan(ctx.grid_, simulate_scan(world, state.position));
      next_scan_time += config.scan_period;
    }
    ctx.refresh_derived();
    if (observer) observer(tick, ctx.grid_, ctx.spaces_, state);

    TickRow row;
    row.tick = tick;
    row.time_s = time;
    row.position = state.position;
    row.heading = state.heading;
    row.s = state.path_param;
    row.distance_traveled = distance;
    row.mapping_pct = mapping_percentage(ctx.grid_);
    row.n_frontier_regions = static_cast<int>(ctx.regions_.size());

    if (!ctx.spaces_.in_control(cell_at(state.position, world.resolution))) {
      record.outcome = Outcome::SafetyViolation;
      record.note = "robot position left the safe control space";
      row.event = "safety_violation";
      record.ticks.push_back(row);
      record.map_curve.emplace_back(distance, row.mapping_pct);
      break;
    }

    // A plan counts as executed once the parameter governor has brought s to
    // the end; arrival alone must not retrigger while a fresh short plan is
    // still being tracked, or the reset would pin the robot in place.
    const bool plan_executed = path.total_length() == 0.0 || state.path_param >= 0.99;
    const bool arrived =
        plan_executed &&
        is_near(state.position, path.end(), config.query.visibility_tolerance);

    bool done = false;
    bool replan = false;
    switch (config.strategy) {
      case Strategy::Persistent:
        if (arrived) {
          if (ctx.complete_at(path.end())) done = true;
          else replan = true;
        }
        break;
      case Strategy::Preventive:
        // Last-mile prevention adds an early trigger on top of the arrival
        // one: replan as soon as the end viewpoint stops being informative,
        // and in any case once it is reached (a reached viewpoint whose
        // remaining visible frontiers are occluded from it would otherwise
        // pin the robot forever).
        if (!is_informative(ctx.grid_, ctx.frontiers_, path.end(), config.query) ||
            arrived) {
          if (ctx.complete_at(path.end())) done = true;
          else replan = true;
        }
        break;
      case Strategy::Online:
        if (time - last_replan_time >= config.replan_period - 1e-9) {
          last_replan_time = time;
          if (ctx.complete_at(path.end())) done = true;
          else replan = true;
        }
        break;
    }

    if (done) {
      record.outcome = Outcome::Complete;
      row.event = "complete";
      record.ticks.push_back(row);
      record.map_curve.emplace_back(distance, row.mapping_pct);
      break;
    }
    if (replan) {
      const Vec2 replan_start = path.point_at(state.path_param);
      auto plan = exploration_plan(ctx.grid_, ctx.spaces_, replan_start, config);
      if (!plan)
        throw std::logic_error(
            "run_exploration: completion check and target selection disagree");
      path = std::move(plan->path);
      state.path_param = 0.0;
      row.s = 0.0;
      row.event = "replan";
      record.replans.push_back({tick, time, replan_start, plan->target.region_id,
                                plan->target.viewpoint, path.total_length(),
                                path.total_cost()});
    }

    ControlCommand cmd;
    try {
      cmd = control_law(state, path, ctx.spaces_, config.control, world.resolution);
    } catch (const SafetyViolationError&) {
      record.outcome = Outcome::SafetyViolation;
      record.note = "controller rejected an unsafe state";
      row.event = "safety_violation";
      record.ticks.push_back(row);
      record.map_curve.emplace_back(distance, row.mapping_pct);
      break;
    }
    row.v = cmd.v;
    row.w = cmd.w;
    row.s_rate = cmd.s_rate;
    row.dist_unsafe = cmd.predicted_clearance;
    record.ticks.push_back(row);
    record.map_curve.emplace_back(distance, row.mapping_pct);

    while (next_milestone < milestones.size() &&
           row.mapping_pct >= milestones[next_milestone]) {
      record.snapshots.emplace_back(milestones[next_milestone], map_levels(ctx.grid_));
      ++next_milestone;
    }

    state = integrate(state, cmd, dt);
    distance += std::abs(cmd.v) * dt;
    time += dt;
  }

  if (record.outcome == Outcome::Timeout && record.note.empty())
    record.note = "step budget exhausted";

  record.final_grid = ctx.grid_;
  record.total_ticks = static_cast<long>(record.ticks.size());
  record.total_time = record.ticks.empty() ? 0.0 : record.ticks.back().time_s;
  record.total_distance = distance;
  record.final_mapping_pct = mapping_percentage(ctx.grid_);
  return record;
}

RunRecord run_persistent(const GroundTruthWorld& world, ExplorationConfig config,
                         Vec2 start_position, double start_heading) {
  config.strategy = Strategy::Persistent;
  return run_exploration(world, config, start_position, start_heading);
}

RunRecord run_preventive(const GroundTruthWorld& world, ExplorationConfig config,
                         Vec2 start_position, double start_heading) {
  config.strategy = Strategy::Preventive;
  return run_exploration(world, config, start_position, start_heading);
}

RunRecord run_online(const GroundTruthWorld& world, ExplorationConfig config,
                     Vec2 start_position, double start_heading) {
  config.strategy = Strategy::Online;
  return run_exploration(world, config, start_position, start_heading);
}

}  // namespace explore
