#pragma once

#include <vector>

#include "explore/raster.hpp"
#include "explore/world.hpp"

namespace explore {

enum class CellState : unsigned char { Unknown = 0, Free = 1, Occupied = 2 };

/// Log-odds increments per observation. Occupied evidence dominates so that
/// walls latch in a single hit while free space needs repeated confirmation.
struct MappingParams {
  double logodds_free = -0.85;
  double logodds_occupied = 2.2;
  double logodds_clamp = 4.6;  // prob in ~[0.01, 0.99]

  /// Identical scans needed before a traversed cell crosses p_free.
  int scans_to_latch_free(double p_free) const;
  /// Identical hits needed before a hit cell crosses p_occ.
  int scans_to_latch_occupied(double p_occ) const;
};

/// The robot's evolving belief map. Classification is latched: once a cell is
/// Free or Occupied it never reverts, so the known sets only grow and the
/// unknown set only shrinks over any update sequence.
class OccupancyGrid {
 public:
  OccupancyGrid() = default;
  OccupancyGrid(int width, int height, double resolution, double p_free = 0.2,
                double p_occ = 0.8, MappingParams params = {});

  int width_cells() const { return state_.width(); }
  int height_cells() const { return state_.height(); }
  double resolution() const { return resolution_; }
  double cell_area() const { return resolution_ * resolution_; }
  double p_free() const { return p_free_; }
  double p_occ() const { return p_occ_; }
  const MappingParams& mapping_params() const { return params_; }

  bool in_bounds(Cell c) const { return state_.in_bounds(c); }
  CellState state(Cell c) const { return state_.at(c); }
  const Raster<CellState>& states() const { return state_; }
  double probability(Cell c) const;
  double log_odds(Cell c) const { return log_odds_.at(c); }

  /// Directly pins a cell probability (test/setup path); re-derives the
  /// latched state from the new value.
  void set_probability(Cell c, double p);

  void add_free_evidence(Cell c);
  void add_occupied_evidence(Cell c);

  int free_count() const { return n_free_; }
  int occupied_count() const { return n_occ_; }
  int unknown_count() const {
    return static_cast<int>(state_.size()) - n_free_ - n_occ_;
  }
  /// Monotonically increasing counter bumped on every latch transition; cheap
  /// change detection for derived layers.
  long revision() const { return revision_; }

  /// Boolean raster of the latched Free cells.
  Raster<unsigned char> free_mask() const;

 private:
  void latch(Cell c);

  double resolution_ = 0.1;
  double p_free_ = 0.2;
  double p_occ_ = 0.8;
  MappingParams params_;
  Raster<double> log_odds_;
  Raster<CellState> state_;
  int n_free_ = 0;
  int n_occ_ = 0;
  long revision_ = 0;
};

struct Classification {
  std::vector<Cell> free;
  std::vector<Cell> occupied;
  std::vector<Cell> unknown;
};

/// Splits the lattice into the three disjoint latched categories.
Classification classify(const OccupancyGrid& grid);

/// Cells along each beam before the hit get free evidence; the hit cell gets
/// occupied evidence. Throws std::invalid_argument on a lattice mismatch.
void integrate_scan(OccupancyGrid& grid, const RangeScan& scan);

/// Morphological erosion by a closed disc: the output keeps a cell iff every
/// lattice cell center within radius_m of its center is a true cell of the
/// input (centers beyond the raster count as false).
Raster<unsigned char> erode(const Raster<unsigned char>& cells, double radius_m,
                            double resolution);

struct SafeSpaces {
  Raster<unsigned char> planning_free;  // erode(Free, robot_radius + clearance)
  Raster<unsigned char> control_free;   // erode(Free, robot_radius)
  Raster<double> control_clearance_m;   // distance to the complement of control_free
  double robot_radius = 0.35;
  double clearance = 0.1;

  bool in_planning(Cell c) const {
    return planning_free.in_bounds(c) && planning_free.at(c) != 0;
  }
  bool in_control(Cell c) const {
    return control_free.in_bounds(c) && control_free.at(c) != 0;
  }
};

SafeSpaces safe_spaces(const OccupancyGrid& grid, double robot_radius,
                       double clearance);

/// Known volume over total volume, by cell counts.
double mapping_percentage(const OccupancyGrid& grid);

}  // namespace explore
