#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "explore/raster.hpp"

namespace explore {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable hidden environment plus the simulated range sensor's constants.
/// The workspace is bounded: every boundary cell of the raster is occupied.
struct GroundTruthWorld {
  Raster<unsigned char> occupied;  // 1 = occupied, 0 = free
  double resolution = 0.1;         // meters per cell
  double sensing_range = 1.5;      // meters
  int beam_count = 360;
  double scan_rate = 10.0;  // Hz

  int width_cells() const { return occupied.width(); }
  int height_cells() const { return occupied.height(); }
  double width_m() const { return occupied.width() * resolution; }
  double height_m() const { return occupied.height() * resolution; }

  bool is_occupied(Cell c) const { return occupied.at(c) != 0; }
  bool is_free(Cell c) const { return occupied.at(c) == 0; }
  int free_cell_count() const;
};

/// One full 360-degree scan taken at a fixed position.
struct RangeScan {
  Vec2 origin;
  std::vector<double> bearings;  // radians, evenly spaced over 360 degrees
  std::vector<double> ranges;    // meters; sensing_range when no hit in range
  std::vector<bool> hit_flags;
};

/// Parses the ASCII world format: line 1 is `resolution <meters>`, each later
/// line is one row of `#` (occupied) / `.` (free), row 0 being the top row.
/// Throws ParseError naming the offending 1-based line on malformed input.
GroundTruthWorld load_world(const std::string& text);

GroundTruthWorld load_world_file(const std::string& path);

struct RayHit {
  double distance = 0.0;
  bool hit = false;
};

/// Range to the first occupied cell boundary along the bearing, truncated at
/// max_range (hit = false iff truncated). The traversal is supercover, so a
/// diagonal crack between two occupied cells blocks the ray.
RayHit ray_cast(const GroundTruthWorld& world, Vec2 origin, double bearing,
                double max_range);

/// One ray_cast per beam at bearings 2*pi*k/beam_count, k = 0..beam_count-1.
RangeScan simulate_scan(const GroundTruthWorld& world, Vec2 position);

}  // namespace explore
