#pragma once

#include <vector>

#include "explore/occupancy.hpp"

namespace explore {

/// A maximal 8-connected cluster of frontier cells.
struct FrontierRegion {
  int id = 0;
  std::vector<Cell> cells;
  double volume = 0.0;  // |cells| * cell area, m^2

  Cell min_cell() const;  // (min row, min col) over the region
};

/// Free cells sharing a face with at least one Unknown cell. Diagonal-only
/// contacts are excluded: they carry no observable boundary under supercover
/// ray visibility.
std::vector<Cell> detect_frontiers(const OccupancyGrid& grid);

/// Partitions frontier cells into 8-connected regions, ordered by
/// (min row, min col, min row-major index) and numbered in that order.
std::vector<FrontierRegion> cluster_frontiers(const std::vector<Cell>& cells,
                                              const OccupancyGrid& grid);

/// Binary-entropy sum over the region cells, in nats, times cell area.
double region_entropy(const OccupancyGrid& grid, const FrontierRegion& region);

enum class InfoMeasure { Uniform, Volume, Entropy };

double info_measure(const OccupancyGrid& grid, const FrontierRegion& region,
                    InfoMeasure kind);

}  // namespace explore
