#include "explore/costmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "explore/distance_transform.hpp"

namespace explore {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kNeighborDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kNeighborDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
}  // namespace

CostField build_cost_field(const OccupancyGrid& grid, const SafeSpaces& spaces,
                           double alpha_max, double beta_max) {
  if (!(alpha_max > 0.0) || !(beta_max > 0.0))
    throw std::invalid_argument("build_cost_field: saturation limits must be > 0");

  const int w = grid.width_cells();
  const int h = grid.height_cells();
  CostField field;
  field.alpha_max = alpha_max;
  field.beta_max = beta_max;
  field.resolution = grid.resolution();
  field.planning_free = spaces.planning_free;

  Raster<unsigned char> unknown(w, h, 0);
  for (int cy = 0; cy < h; ++cy)
    for (int cx = 0; cx < w; ++cx)
      unknown.at(cx, cy) = grid.state({cx, cy}) == CellState::Unknown ? 1 : 0;
  field.dist2unknown = truncated_distance_m(unknown, grid.resolution(), alpha_max);

  Raster<unsigned char> nonplanning(w, h, 0);
  for (size_t i = 0; i < nonplanning.size(); ++i)
    nonplanning[i] = spaces.planning_free[i] ? 0 : 1;
  field.dist2collision = truncated_distance_m(nonplanning, grid.resolution(), beta_max);

  field.visit_cost = Raster<double>(w, h, kInf);
  for (size_t i = 0; i < field.visit_cost.size(); ++i)
    if (spaces.planning_free[i])
      field.visit_cost[i] = field.dist2unknown[i] / field.dist2collision[i];
  return field;
}

PathPlan::PathPlan(std::vector<Vec2> waypoints, std::vector<double> cumulative_cost)
    : waypoints_(std::move(waypoints)), cumulative_cost_(std::move(cumulative_cost)) {
  cumulative_length_.resize(waypoints_.size(), 0.0);
  for (size_t i = 1; i < waypoints_.size(); ++i)
    cumulative_length_[i] =
        cumulative_length_[i - 1] + (waypoints_[i] - waypoints_[i - 1]).norm();
}

Vec2 PathPlan::point_at(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  const double target = s * total_length();
  if (total_length() == 0.0 || waypoints_.size() == 1) return waypoints_.front();
  const auto it = std::lower_bound(cumulative_length_.begin(),
                                   cumulative_length_.end(), target);
  size_t i = static_cast<size_t>(it - cumulative_length_.begin());
  if (i == 0) return waypoints_.front();
  const double seg_len = cumulative_length_[i] - cumulative_length_[i - 1];
  if (seg_len == 0.0) return waypoints_[i];
  const double frac = (target - cumulative_length_[i - 1]) / seg_len;
  return waypoints_[i - 1] + (waypoints_[i] - waypoints_[i - 1]) * frac;
}

bool ShortestPathField::reachable(Cell c) const {
  return cost.in_bounds(c) && cost.at(c) < kInf;
}

ShortestPathField shortest_paths(const CostField& field, Vec2 start) {
  const Cell start_cell = cell_at(start, field.resolution);
  if (!field.in_planning(start_cell))
    throw std::invalid_argument("shortest_paths: start is not in the planning space");

  const int w = field.visit_cost.width();
  const int h = field.visit_cost.height();
  ShortestPathField spf;
  spf.start = start;
  spf.start_cell = start_cell;
  spf.cost = Raster<double>(w, h, kInf);
  spf.hops = Raster<int>(w, h, 0);
  spf.parent = Raster<int>(w, h, -1);

  const Vec2 center = cell_center(start_cell, field.resolution);
  spf.stub_length = (center - start).norm();
  spf.stub_cost = field.visit_cost.at(start_cell) * spf.stub_length;

  const double straight = field.resolution;
  const double diagonal = field.resolution * std::sqrt(2.0);

  // (cost, hops, cell index) as the heap key keeps settle order deterministic.
  using Entry = std::tuple<double, int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  Raster<unsigned char> settled(w, h, 0);

  spf.cost.at(start_cell) = 0.0;
  heap.emplace(0.0, 0, spf.cost.index(start_cell));
  while (!heap.empty()) {
    const auto [cost_u, hops_u, iu] = heap.top();
    heap.pop();
    if (settled[static_cast<size_t>(iu)]) continue;
    settled[static_cast<size_t>(iu)] = 1;
    const Cell u = spf.cost.cell_of(iu);
    const double cu = field.visit_cost.at(u);

    for (int n = 0; n < 8; ++n) {
      const Cell v{u.cx + kNeighborDx[n], u.cy + kNeighborDy[n]};
      if (!field.in_planning(v)) continue;
      const int iv = spf.cost.index(v);
      if (settled[static_cast<size_t>(iv)]) continue;
      const double step = (kNeighborDx[n] != 0 && kNeighborDy[n] != 0) ? diagonal : straight;
      const double cand = cost_u + 0.5 * (cu + field.visit_cost.at(v)) * step;
      const int cand_hops = hops_u + 1;
      const auto better = std::tuple(cand, cand_hops, iu) <
                          std::tuple(spf.cost.at(v), spf.hops.at(v), spf.parent.at(v));
      if (better) {
        spf.cost.at(v) = cand;
        spf.hops.at(v) = cand_hops;
        spf.parent.at(v) = iu;
        heap.emplace(cand, cand_hops, iv);
      }
    }
  }
  return spf;
}

std::optional<PathPlan> extract_path(const ShortestPathField& spf,
                                     const CostField& field, Vec2 goal) {
  const Cell goal_cell = cell_at(goal, field.resolution);
  if (!field.in_planning(goal_cell))
    throw std::invalid_argument("extract_path: goal is not in the planning space");
  if (!spf.reachable(goal_cell)) return std::nullopt;

  std::vector<Cell> cells;
  int i = spf.cost.index(goal_cell);
  while (true) {
    cells.push_back(spf.cost.cell_of(i));
    const int p = spf.parent[static_cast<size_t>(i)];
    if (p == -1) break;
    i = p;
  }
  std::reverse(cells.begin(), cells.end());

  std::vector<Vec2> waypoints;
  std::vector<double> cost;
  const Vec2 first_center = cell_center(cells.front(), field.resolution);
  if ((spf.start - first_center).norm() > 0.0) {
    waypoints.push_back(spf.start);
    cost.push_back(0.0);
    waypoints.push_back(first_center);
    cost.push_back(spf.stub_cost);
  } else {
    waypoints.push_back(first_center);
    cost.push_back(0.0);
  }
  const double base = cost.back();
  for (size_t i = 1; i < cells.size(); ++i) {
    waypoints.push_back(cell_center(cells[i], field.resolution));
    cost.push_back(base + spf.cost.at(cells[i]));
  }
  return PathPlan(std::move(waypoints), std::move(cost));
}

std::optional<PathPlan> optimal_path(const CostField& field, Vec2 start, Vec2 goal) {
  return extract_path(shortest_paths(field, start), field, goal);
}

double travel_cost(const CostField& field, Vec2 start, Vec2 goal) {
  const auto path = optimal_path(field, start, goal);
  return path ? path->total_cost() : kInf;
}

double navigation_cost(const CostField& field, Vec2 start, Vec2 goal, NavCost kind) {
  switch (kind) {
    case NavCost::Uniform: return 1.0;
    case NavCost::Euclidean: return (goal - start).norm();
    case NavCost::Geodesic: return travel_cost(field, start, goal);
  }
  throw std::invalid_argument("navigation_cost: unknown kind");
}

double navigation_cost(const ShortestPathField& spf, const CostField& field,
                       Vec2 goal, NavCost kind) {
  switch (kind) {
    case NavCost::Uniform: return 1.0;
    case NavCost::Euclidean: return (goal - spf.start).norm();
    case NavCost::Geodesic: {
      const Cell goal_cell = cell_at(goal, field.resolution);
      if (!spf.reachable(goal_cell)) return kInf;
      return spf.stub_cost + spf.cost.at(goal_cell);
    }
  }
  throw std::invalid_argument("navigation_cost: unknown kind");
}

}  // namespace explore
