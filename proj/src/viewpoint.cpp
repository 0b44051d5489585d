#include "explore/viewpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "explore/ray.hpp"

namespace explore {

namespace {

struct Bbox {
  int min_x, min_y, max_x, max_y;
};

Bbox region_bbox(const FrontierRegion& region) {
  Bbox b{std::numeric_limits<int>::max(), std::numeric_limits<int>::max(),
         std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
  for (const Cell& c : region.cells) {
    b.min_x = std::min(b.min_x, c.cx);
    b.min_y = std::min(b.min_y, c.cy);
    b.max_x = std::max(b.max_x, c.cx);
    b.max_y = std::max(b.max_y, c.cy);
  }
  return b;
}

}  // namespace

bool segment_in_free(const OccupancyGrid& grid, Vec2 a, Vec2 b) {
  bool ok = true;
  for_each_segment_cell(a, b, grid.resolution(), [&](Cell c, double) {
    if (!grid.in_bounds(c) || grid.state(c) != CellState::Free) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool frontier_visible_from(const OccupancyGrid& grid, Cell frontier, Vec2 v,
                           const ViewpointQuery& query) {
  const double eta = query.visibility_tolerance;
  const Vec2 f = cell_center(frontier, grid.resolution());
  if ((f - v).norm() > query.sensing_range - eta) return false;
  if (!segment_in_free(grid, f, v)) return false;
  for (int k = 0; k < 8; ++k) {
    const Vec2 probe = v + eta * unit_from_angle(k * M_PI / 4.0);
    if (!segment_in_free(grid, f, probe)) return false;
  }
  return true;
}

std::vector<Cell> visible_frontiers(const OccupancyGrid& grid,
                                    const std::vector<Cell>& frontier_cells,
                                    Vec2 v, const ViewpointQuery& query) {
  std::vector<Cell> visible;
  for (const Cell& f : frontier_cells)
    if (frontier_visible_from(grid, f, v, query)) visible.push_back(f);
  return visible;
}

double visible_frontier_volume(const OccupancyGrid& grid,
                               const std::vector<Cell>& frontier_cells, Vec2 v,
                               const ViewpointQuery& query) {
  int count = 0;
  for (const Cell& f : frontier_cells)
    if (frontier_visible_from(grid, f, v, query)) ++count;
  return count * grid.cell_area();
}

std::vector<Cell> viewpoint_set(const OccupancyGrid& grid,
                                const FrontierRegion& region,
                                const SafeSpaces& spaces,
                                const ViewpointQuery& query) {
  std::vector<Cell> members;
  if (region.cells.empty()) return members;
  const int margin = static_cast<int>(std::ceil(query.sensing_range / grid.resolution()));
  const Bbox b = region_bbox(region);
  const int min_x = std::max(0, b.min_x - margin);
  const int min_y = std::max(0, b.min_y - margin);
  const int max_x = std::min(grid.width_cells() - 1, b.max_x + margin);
  const int max_y = std::min(grid.height_cells() - 1, b.max_y + margin);
  for (int cy = min_y; cy <= max_y; ++cy) {
    for (int cx = min_x; cx <= max_x; ++cx) {
      const Cell v{cx, cy};
      if (!spaces.in_planning(v)) continue;
      const Vec2 vp = cell_center(v, grid.resolution());
      for (const Cell& f : region.cells) {
        if (frontier_visible_from(grid, f, vp, query)) {
          members.push_back(v);
          break;
        }
      }
    }
  }
  return members;
}

std::optional<Vec2> select_viewpoint(const OccupancyGrid& grid,
                                     const FrontierRegion& region,
                                     const SafeSpaces& spaces,
                                     const ShortestPathField& reach,
                                     const ViewpointQuery& query) {
  if (region.cells.empty()) return std::nullopt;
  const int margin = static_cast<int>(std::ceil(query.sensing_range / grid.resolution()));
  const Bbox b = region_bbox(region);
  const int min_x = std::max(0, b.min_x - margin);
  const int min_y = std::max(0, b.min_y - margin);
  const int max_x = std::min(grid.width_cells() - 1, b.max_x + margin);
  const int max_y = std::min(grid.height_cells() - 1, b.max_y + margin);

  // Candidates ordered by (summed distance, cell index); the first reachable
  // candidate that sees the region is the argmin over the filtered set.
  struct Candidate {
    double key;
    int index;
    Cell cell;
  };
  std::vector<Candidate> candidates;
  for (int cy = min_y; cy <= max_y; ++cy) {
    for (int cx = min_x; cx <= max_x; ++cx) {
      const Cell v{cx, cy};
      if (!spaces.in_planning(v)) continue;
      if (!reach.reachable(v)) continue;
      const Vec2 vp = cell_center(v, grid.resolution());
      double sum = 0.0;
      for (const Cell& f : region.cells)
        sum += (cell_center(f, grid.resolution()) - vp).norm();
      candidates.push_back({sum, grid.states().index(v), v});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::pair(a.key, a.index) < std::pair(b.key, b.index);
  });
  for (const Candidate& cand : candidates) {
    const Vec2 vp = cell_center(cand.cell, grid.resolution());
    for (const Cell& f : region.cells) {
      if (frontier_visible_from(grid, f, vp, query)) return vp;
    }
  }
  return std::nullopt;
}

std::optional<Vec2> select_viewpoint(const OccupancyGrid& grid,
                                     const FrontierRegion& region,
                                     const SafeSpaces& spaces,
                                     const CostField& field, Vec2 robot,
                                     const ViewpointQuery& query) {
  return select_viewpoint(grid, region, spaces, shortest_paths(field, robot), query);
}

double actionable_info(const OccupancyGrid& grid, const FrontierRegion& region,
                       const std::vector<Cell>& all_frontiers,
                       const SafeSpaces& spaces, const ShortestPathField& reach,
                       const ViewpointQuery& query) {
  const auto vp = select_viewpoint(grid, region, spaces, reach, query);
  if (!vp) return 0.0;
  return visible_frontier_volume(grid, all_frontiers, *vp, query);
}

bool is_near(Vec2 x, Vec2 v, double eta) { return (x - v).norm() <= eta; }

bool is_informative(const OccupancyGrid& grid, const std::vector<Cell>& frontier_cells,
                    Vec2 v, const ViewpointQuery& query) {
  return visible_frontier_volume(grid, frontier_cells, v, query) > query.info_threshold;
}

bool is_informative(const OccupancyGrid& grid, Vec2 v, const ViewpointQuery& query) {
  return is_informative(grid, detect_frontiers(grid), v, query);
}

std::optional<TargetSelection> select_target_region(
    const OccupancyGrid& grid, const std::vector<FrontierRegion>& regions,
    const std::vector<Cell>& all_frontiers, const SafeSpaces& spaces,
    const CostField& field, const ShortestPathField& reach,
    const ViewpointQuery& query) {
  std::optional<TargetSelection> best;
  for (const FrontierRegion& region : regions) {
    const auto vp = select_viewpoint(grid, region, spaces, reach, query);
    if (!vp) continue;
    const double actionable = visible_frontier_volume(grid, all_frontiers, *vp, query);
    if (!(actionable > query.info_threshold)) continue;
    const double info = info_measure(grid, region, query.info_kind);
    const double nav = navigation_cost(reach, field, *vp, query.nav_kind);
    const double score = info / nav;
    if (!best || score > best->score) {
      best = TargetSelection{region.id, *vp, score, actionable};
    }
  }
  return best;
}

bool is_complete(const OccupancyGrid& grid, const SafeSpaces& spaces,
                 const CostField& field, Vec2 robot, const ViewpointQuery& query) {
  const std::vector<Cell> frontiers = detect_frontiers(grid);
  if (frontiers.empty()) return true;
  const std::vector<FrontierRegion> regions = cluster_frontiers(frontiers, grid);
  const ShortestPathField reach = shortest_paths(field, robot);
  for (const FrontierRegion& region : regions) {
    if (actionable_info(grid, region, frontiers, spaces, reach, query) >
        query.info_threshold)
      return false;
  }
  return true;
}

}  // namespace explore
