#include "explore/pgm.hpp"

#include <fstream>
#include <stdexcept>

namespace explore {

void write_pgm(const Raster<int>& levels, const std::string& path, int maxval) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write pgm: " + path);
  out << "P2\n" << levels.width() << " " << levels.height() << "\n" << maxval << "\n";
  for (int cy = levels.height() - 1; cy >= 0; --cy) {
    for (int cx = 0; cx < levels.width(); ++cx) {
      out << levels.at(cx, cy);
      out << (cx + 1 == levels.width() ? '\n' : ' ');
    }
  }
}

Raster<int> map_levels(const OccupancyGrid& grid) {
  Raster<int> levels(grid.width_cells(), grid.height_cells(), 128);
  for (int cy = 0; cy < grid.height_cells(); ++cy) {
    for (int cx = 0; cx < grid.width_cells(); ++cx) {
      switch (grid.state({cx, cy})) {
        case CellState::Occupied: levels.at(cx, cy) = 0; break;
        case CellState::Free: levels.at(cx, cy) = 255; break;
        case CellState::Unknown: levels.at(cx, cy) = 128; break;
      }
    }
  }
  return levels;
}

void write_map_pgm(const OccupancyGrid& grid, const std::string& path) {
  write_pgm(map_levels(grid), path);
}

}  // namespace explore
