#pragma once

#include <optional>
#include <vector>

#include "explore/costmap.hpp"
#include "explore/frontier.hpp"

namespace explore {

/// Parameters of reliable visibility and of action-aware target selection.
struct ViewpointQuery {
  double visibility_tolerance = 0.2;  // eta; 0 < eta < sensing_range
  double sensing_range = 1.5;         // R
  double info_threshold = 0.0;        // mu, m^2 of visible frontier volume
  InfoMeasure info_kind = InfoMeasure::Volume;
  NavCost nav_kind = NavCost::Geodesic;
};

/// True when every cell touched by the closed segment [a, b] is latched Free.
bool segment_in_free(const OccupancyGrid& grid, Vec2 a, Vec2 b);

/// Reliable visibility of a frontier cell from viewpoint position v: the
/// range condition over the whole eta-ball reduces to |f - v| <= R - eta,
/// and line of sight must hold from the ball center and 8 points on the
/// eta-circle (the uncountable ball is probed at those 9 points).
bool frontier_visible_from(const OccupancyGrid& grid, Cell frontier, Vec2 v,
                           const ViewpointQuery& query);

/// Frontier cells reliably visible from v; always inside disc(v, R - eta).
std::vector<Cell> visible_frontiers(const OccupancyGrid& grid,
                                    const std::vector<Cell>& frontier_cells,
                                    Vec2 v, const ViewpointQuery& query);

/// Volume (m^2) of the visible frontier set from v.
double visible_frontier_volume(const OccupancyGrid& grid,
                               const std::vector<Cell>& frontier_cells, Vec2 v,
                               const ViewpointQuery& query);

/// Planning-space cells from which at least one cell of the region is
/// reliably visible. Candidates farther than the sensing range from the
/// region's bounding box cannot qualify and are skipped.
std::vector<Cell> viewpoint_set(const OccupancyGrid& grid,
                                const FrontierRegion& region,
                                const SafeSpaces& spaces,
                                const ViewpointQuery& query);

/// Among reachable viewpoint-set cells, the one minimizing the summed
/// Euclidean distance to the region cells; ties by cell index. std::nullopt
/// when no reachable viewpoint exists.
std::optional<Vec2> select_viewpoint(const OccupancyGrid& grid,
                                     const FrontierRegion& region,
                                     const SafeSpaces& spaces,
                                     const ShortestPathField& reach,
                                     const ViewpointQuery& query);

/// Convenience overload solving reachability from `robot` internally.
std::optional<Vec2> select_viewpoint(const OccupancyGrid& grid,
                                     const FrontierRegion& region,
                                     const SafeSpaces& spaces,
                                     const CostField& field, Vec2 robot,
                                     const ViewpointQuery& query);

/// Volume of all frontier cells visible from the region's selected viewpoint;
/// 0 when the region has no reachable viewpoint.
double actionable_info(const OccupancyGrid& grid, const FrontierRegion& region,
                       const std::vector<Cell>& all_frontiers,
                       const SafeSpaces& spaces, const ShortestPathField& reach,
                       const ViewpointQuery& query);

bool is_near(Vec2 x, Vec2 v, double eta);

bool is_informative(const OccupancyGrid& grid, const std::vector<Cell>& frontier_cells,
                    Vec2 v, const ViewpointQuery& query);
bool is_informative(const OccupancyGrid& grid, Vec2 v, const ViewpointQuery& query);

struct TargetSelection {
  int region_id = -1;
  Vec2 viewpoint;
  double score = 0.0;            // info measure / navigation cost
  double actionable_info = 0.0;  // m^2
};

/// Among regions with actionable information above the threshold, maximizes
/// information utility per navigation cost; ties by region id. std::nullopt
/// iff no region qualifies (exploration complete relative to `reach.start`).
std::optional<TargetSelection> select_target_region(
    const OccupancyGrid& grid, const std::vector<FrontierRegion>& regions,
    const std::vector<Cell>& all_frontiers, const SafeSpaces& spaces,
    const CostField& field, const ShortestPathField& reach,
    const ViewpointQuery& query);

/// True iff every frontier region's actionable information is at or below the
/// threshold (vacuously true with no regions).
bool is_complete(const OccupancyGrid& grid, const SafeSpaces& spaces,
                 const CostField& field, Vec2 robot, const ViewpointQuery& query);

}  // namespace explore
