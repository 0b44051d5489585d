#include "explore/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace explore {

namespace {
constexpr int kNeighborDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kNeighborDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
}  // namespace

Cell FrontierRegion::min_cell() const {
  int min_row = std::numeric_limits<int>::max();
  int min_col = std::numeric_limits<int>::max();
  for (const Cell& c : cells) {
    min_row = std::min(min_row, c.cy);
    min_col = std::min(min_col, c.cx);
  }
  return {min_col, min_row};
}

std::vector<Cell> detect_frontiers(const OccupancyGrid& grid) {
  // Face adjacency: a diagonal-only unknown contact is a zero-measure
  // boundary that supercover rays can never observe, so it is not a frontier.
  static constexpr int kFaceDx[4] = {-1, 1, 0, 0};
  static constexpr int kFaceDy[4] = {0, 0, -1, 1};
  std::vector<Cell> frontiers;
  for (int cy = 0; cy < grid.height_cells(); ++cy) {
    for (int cx = 0; cx < grid.width_cells(); ++cx) {
      if (grid.state({cx, cy}) != CellState::Free) continue;
      for (int n = 0; n < 4; ++n) {
        const Cell nb{cx + kFaceDx[n], cy + kFaceDy[n]};
        if (grid.in_bounds(nb) && grid.state(nb) == CellState::Unknown) {
          frontiers.push_back({cx, cy});
          break;
        }
      }
    }
  }
  return frontiers;
}

std::vector<FrontierRegion> cluster_frontiers(const std::vector<Cell>& cells,
                                              const OccupancyGrid& grid) {
  const int w = grid.width_cells();
  const int h = grid.height_cells();
  Raster<int> label(w, h, -1);
  for (const Cell& c : cells) label.at(c) = 0;  // 0 = unvisited frontier

  std::vector<FrontierRegion> regions;
  std::vector<Cell> stack;
  for (const Cell& seed : cells) {
    if (label.at(seed) != 0) continue;
    FrontierRegion region;
    stack.push_back(seed);
    label.at(seed) = 1;
    while (!stack.empty()) {
      const Cell c = stack.back();
      stack.pop_back();
      region.cells.push_back(c);
      for (int n = 0; n < 8; ++n) {
        const Cell nb{c.cx + kNeighborDx[n], c.cy + kNeighborDy[n]};
        if (label.in_bounds(nb) && label.at(nb) == 0) {
          label.at(nb) = 1;
          stack.push_back(nb);
        }
      }
    }
    std::sort(region.cells.begin(), region.cells.end(),
              [](const Cell& a, const Cell& b) {
                return std::pair(a.cy, a.cx) < std::pair(b.cy, b.cx);
              });
    region.volume = static_cast<double>(region.cells.size()) * grid.cell_area();
    regions.push_back(std::move(region));
  }

  std::sort(regions.begin(), regions.end(),
            [](const FrontierRegion& a, const FrontierRegion& b) {
              const Cell ma = a.min_cell();
              const Cell mb = b.min_cell();
              return std::tuple(ma.cy, ma.cx, a.cells.front().cy, a.cells.front().cx) <
                     std::tuple(mb.cy, mb.cx, b.cells.front().cy, b.cells.front().cx);
            });
  for (size_t i = 0; i < regions.size(); ++i) regions[i].id = static_cast<int>(i);
  return regions;
}

double region_entropy(const OccupancyGrid& grid, const FrontierRegion& region) {
  double sum = 0.0;
  for (const Cell& c : region.cells) {
    const double p = grid.probability(c);
    double e = 0.0;
    if (p > 0.0 && p < 1.0) e = -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
    sum += e;
  }
  return sum * grid.cell_area();
}

double info_measure(const OccupancyGrid& grid, const FrontierRegion& region,
                    InfoMeasure kind) {
  switch (kind) {
    case InfoMeasure::Uniform: return 1.0;
    case InfoMeasure::Volume: return region.volume;
    case InfoMeasure::Entropy: return region_entropy(grid, region);
  }
  throw std::invalid_argument("info_measure: unknown kind");
}

}  // namespace explore
