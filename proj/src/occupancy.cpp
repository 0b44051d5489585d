#include "explore/occupancy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "explore/distance_transform.hpp"
#include "explore/ray.hpp"

namespace explore {

int MappingParams::scans_to_latch_free(double p_free) const {
  const double threshold = std::log(p_free / (1.0 - p_free));
  return static_cast<int>(std::ceil(threshold / logodds_free));
}

int MappingParams::scans_to_latch_occupied(double p_occ) const {
  const double threshold = std::log(p_occ / (1.0 - p_occ));
  return static_cast<int>(std::ceil(threshold / logodds_occupied));
}

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             double p_free, double p_occ, MappingParams params)
    : resolution_(resolution),
      p_free_(p_free),
      p_occ_(p_occ),
      params_(params),
      log_odds_(width, height, 0.0),
      state_(width, height, CellState::Unknown) {
  if (!(0.0 <= p_free && p_free < p_occ && p_occ <= 1.0))
    throw std::invalid_argument("occupancy thresholds must satisfy 0 <= p_free < p_occ <= 1");
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be > 0");
}

double OccupancyGrid::probability(Cell c) const {
  return 1.0 / (1.0 + std::exp(-log_odds_.at(c)));
}

void OccupancyGrid::set_probability(Cell c, double p) {
  p = std::clamp(p, 1e-9, 1.0 - 1e-9);
  log_odds_.at(c) = std::log(p / (1.0 - p));
  // Pinning overrides the latch: the state is re-derived from scratch.
  CellState& state = state_.at(c);
  if (state == CellState::Free) --n_free_;
  if (state == CellState::Occupied) --n_occ_;
  state = CellState::Unknown;
  ++revision_;
  latch(c);
}

void OccupancyGrid::add_free_evidence(Cell c) {
  double& l = log_odds_.at(c);
  l = std::clamp(l + params_.logodds_free, -params_.logodds_clamp, params_.logodds_clamp);
  latch(c);
}

void OccupancyGrid::add_occupied_evidence(Cell c) {
  double& l = log_odds_.at(c);
  l = std::clamp(l + params_.logodds_occupied, -params_.logodds_clamp, params_.logodds_clamp);
  latch(c);
}

void OccupancyGrid::latch(Cell c) {
  if (state_.at(c) != CellState::Unknown) return;  // never reverts
  const double p = probability(c);
  if (p <= p_free_) {
    state_.at(c) = CellState::Free;
    ++n_free_;
    ++revision_;
  } else if (p >= p_occ_) {
    state_.at(c) = CellState::Occupied;
    ++n_occ_;
    ++revision_;
  }
}

Raster<unsigned char> OccupancyGrid::free_mask() const {
  Raster<unsigned char> mask(width_cells(), height_cells(), 0);
  for (size_t i = 0; i < state_.size(); ++i)
    mask[i] = state_[i] == CellState::Free ? 1 : 0;
  return mask;
}

Classification classify(const OccupancyGrid& grid) {
  Classification out;
  for (int cy = 0; cy < grid.height_cells(); ++cy) {
    for (int cx = 0; cx < grid.width_cells(); ++cx) {
      const Cell c{cx, cy};
      switch (grid.state(c)) {
        case CellState::Free: out.free.push_back(c); break;
        case CellState::Occupied: out.occupied.push_back(c); break;
        case CellState::Unknown: out.unknown.push_back(c); break;
      }
    }
  }
  return out;
}

void integrate_scan(OccupancyGrid& grid, const RangeScan& scan) {
  const Cell origin_cell = cell_at(scan.origin, grid.resolution());
  if (!grid.in_bounds(origin_cell))
    throw std::invalid_argument("integrate_scan: scan origin outside the grid lattice");
  if (scan.bearings.size() != scan.ranges.size() ||
      scan.bearings.size() != scan.hit_flags.size())
    throw std::invalid_argument("integrate_scan: inconsistent scan arrays");

  // Beams overlap near the origin; each cell takes at most one free and one
  // occupied update per scan, occupied winning on conflict.
  enum : unsigned char { kNone = 0, kFree = 1, kOccupied = 2 };
  Raster<unsigned char> mark(grid.width_cells(), grid.height_cells(), kNone);

  for (size_t b = 0; b < scan.bearings.size(); ++b) {
    const double range = scan.ranges[b];
    const bool hit = scan.hit_flags[b];
    // The traversal's t values match the simulator's ray bit-for-bit, so the
    // hit cell is exactly the one entered at t == range. Corner crossings tie
    // several cells at that t; all of them take the occupied evidence.
    for_each_segment_cell(
        scan.origin, scan.bearings[b], range, grid.resolution(),
        [&](Cell c, double t_entry) {
          if (!grid.in_bounds(c)) return false;
          if (t_entry < range) {
            if (mark.at(c) == kNone) mark.at(c) = kFree;
          } else if (hit) {
            mark.at(c) = kOccupied;
          }
          return true;
        });
  }
  for (int cy = 0; cy < grid.height_cells(); ++cy) {
    for (int cx = 0; cx < grid.width_cells(); ++cx) {
      switch (mark.at(cx, cy)) {
        case kFree: grid.add_free_evidence({cx, cy}); break;
        case kOccupied: grid.add_occupied_evidence({cx, cy}); break;
        default: break;
      }
    }
  }
}

Raster<unsigned char> erode(const Raster<unsigned char>& cells, double radius_m,
                            double resolution) {
  const int w = cells.width();
  const int h = cells.height();
  Raster<unsigned char> complement(w, h, 0);
  for (size_t i = 0; i < cells.size(); ++i) complement[i] = cells[i] ? 0 : 1;
  const Raster<double> sq = squared_cell_distance(complement);

  const double radius_cells = radius_m / resolution;
  const double r2 = radius_cells * radius_cells;
  Raster<unsigned char> out(w, h, 0);
  for (int cy = 0; cy < h; ++cy) {
    for (int cx = 0; cx < w; ++cx) {
      if (!cells.at(cx, cy)) continue;
      // Nearest lattice center outside the raster lies straight out a side.
      const double border = std::min(std::min(cx + 1, w - cx), std::min(cy + 1, h - cy));
      if (sq.at(cx, cy) > r2 && border * border > r2) out.at(cx, cy) = 1;
    }
  }
  return out;
}

SafeSpaces safe_spaces(const OccupancyGrid& grid, double robot_radius,
                       double clearance) {
  if (!(robot_radius > 0.0) || !(clearance > 0.0))
    throw std::invalid_argument("safe_spaces: robot_radius and clearance must be > 0");
  SafeSpaces spaces;
  spaces.robot_radius = robot_radius;
  spaces.clearance = clearance;
  const Raster<unsigned char> free = grid.free_mask();
  spaces.planning_free = erode(free, robot_radius + clearance, grid.resolution());
  spaces.control_free = erode(free, robot_radius, grid.resolution());

  Raster<unsigned char> unsafe(free.width(), free.height(), 0);
  for (size_t i = 0; i < unsafe.size(); ++i)
    unsafe[i] = spaces.control_free[i] ? 0 : 1;
  spaces.control_clearance_m =
      truncated_distance_m(unsafe, grid.resolution(), kNoSource);
  return spaces;
}

double mapping_percentage(const OccupancyGrid& grid) {
  const double total = static_cast<double>(grid.width_cells()) * grid.height_cells();
  if (total == 0.0) return 0.0;
  return (grid.free_count() + grid.occupied_count()) / total;
}

}  // namespace explore
