#pragma once

#include <string>

#include "explore/occupancy.hpp"

namespace explore {

/// Plain-text P2 graymap, top row (max y) first.
void write_pgm(const Raster<int>& levels, const std::string& path, int maxval = 255);

/// Map snapshot levels: 0 = occupied, 128 = unknown, 255 = free.
Raster<int> map_levels(const OccupancyGrid& grid);

void write_map_pgm(const OccupancyGrid& grid, const std::string& path);

}  // namespace explore
