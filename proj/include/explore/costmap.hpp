#pragma once

#include <optional>
#include <vector>

#include "explore/occupancy.hpp"

namespace explore {

/// Per-cell planning layers: distance to unknown space (exploration bias),
/// distance to the planning-space boundary (collision risk), and their ratio
/// as the local visit cost. The visit cost is +inf outside the planning space.
struct CostField {
  Raster<double> dist2unknown;    // meters, truncated at alpha_max
  Raster<double> dist2collision;  // meters, truncated at beta_max
  Raster<double> visit_cost;
  Raster<unsigned char> planning_free;
  double alpha_max = 3.0;
  double beta_max = 2.25;
  double resolution = 0.1;

  bool in_planning(Cell c) const {
    return planning_free.in_bounds(c) && planning_free.at(c) != 0;
  }
};

CostField build_cost_field(const OccupancyGrid& grid, const SafeSpaces& spaces,
                           double alpha_max, double beta_max);

/// Polyline of planning-space waypoints with the running travel cost and an
/// arc-length-normalized parameter s in [0, 1].
class PathPlan {
 public:
  PathPlan() = default;
  PathPlan(std::vector<Vec2> waypoints, std::vector<double> cumulative_cost);

  const std::vector<Vec2>& waypoints() const { return waypoints_; }
  const std::vector<double>& cumulative_cost() const { return cumulative_cost_; }
  double total_cost() const { return cumulative_cost_.back(); }
  double total_length() const { return cumulative_length_.back(); }

  /// Position at normalized arc length s (clamped to [0, 1]).
  Vec2 point_at(double s) const;
  Vec2 start() const { return waypoints_.front(); }
  Vec2 end() const { return waypoints_.back(); }

 private:
  std::vector<Vec2> waypoints_;
  std::vector<double> cumulative_cost_;
  std::vector<double> cumulative_length_;
};

/// One-to-all minimum travel cost over the 8-connected planning lattice with
/// edge cost (c_i + c_j)/2 * |x_i - x_j|. Ties settle by (cost, hops, parent
/// index) so extracted paths are fully deterministic.
struct ShortestPathField {
  Vec2 start;
  Cell start_cell;
  Raster<double> cost;  // +inf where unreachable
  Raster<int> hops;
  Raster<int> parent;   // flat cell index, -1 at start / unreachable
  double stub_cost = 0.0;    // start position -> start cell center
  double stub_length = 0.0;

  bool reachable(Cell c) const;
};

ShortestPathField shortest_paths(const CostField& field, Vec2 start);

std::optional<PathPlan> extract_path(const ShortestPathField& spf,
                                     const CostField& field, Vec2 goal);

/// Minimum-travel-cost path from start to goal; std::nullopt when the goal is
/// outside the planning space reachable from start.
std::optional<PathPlan> optimal_path(const CostField& field, Vec2 start, Vec2 goal);

/// Travel cost of the optimal path; +inf when unreachable.
double travel_cost(const CostField& field, Vec2 start, Vec2 goal);

enum class NavCost { Uniform, Euclidean, Geodesic };

double navigation_cost(const CostField& field, Vec2 start, Vec2 goal, NavCost kind);

/// Geodesic variant reusing an existing one-to-all solve from `spf.start`.
double navigation_cost(const ShortestPathField& spf, const CostField& field,
                       Vec2 goal, NavCost kind);

}  // namespace explore
