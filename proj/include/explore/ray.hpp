#pragma once

#include <cmath>
#include <limits>

#include "explore/geometry.hpp"
#include "explore/raster.hpp"

namespace explore {

struct RayVisit {
  Cell cell;
  double t_entry = 0.0;  // distance along the ray at which the cell is first touched
};

/// Supercover traversal of the cells touched by the ray origin + t*dir(bearing),
/// t >= 0. Yields visits ordered by non-decreasing t_entry, starting with the
/// origin cell at t = 0. When the ray passes exactly through a lattice corner
/// the two side cells are reported before the diagonal cell, all at the corner
/// distance, so every cell the segment touches is visited.
class GridRay {
 public:
  GridRay(Vec2 origin, double bearing, double resolution)
      : res_(resolution), dir_(unit_from_angle(bearing)) {
    cell_ = cell_at(origin, resolution);
    step_x_ = dir_.x > 0.0 ? 1 : (dir_.x < 0.0 ? -1 : 0);
    step_y_ = dir_.y > 0.0 ? 1 : (dir_.y < 0.0 ? -1 : 0);
    t_max_x_ = boundary_t(origin.x, dir_.x, cell_.cx, step_x_);
    t_max_y_ = boundary_t(origin.y, dir_.y, cell_.cy, step_y_);
    t_delta_x_ = step_x_ != 0 ? res_ / std::abs(dir_.x) : inf();
    t_delta_y_ = step_y_ != 0 ? res_ / std::abs(dir_.y) : inf();
    pending_ = Pending::None;
    current_ = {cell_, 0.0};
  }

  const RayVisit& current() const { return current_; }

  /// Advances to the next touched cell and returns it.
  const RayVisit& advance() {
    if (pending_ == Pending::SideY) {
      // Second side cell of a corner crossing.
      current_ = {{corner_base_.cx, corner_base_.cy + step_y_}, corner_t_};
      pending_ = Pending::Diagonal;
      return current_;
    }
    if (pending_ == Pending::Diagonal) {
      cell_ = {corner_base_.cx + step_x_, corner_base_.cy + step_y_};
      current_ = {cell_, corner_t_};
      t_max_x_ += t_delta_x_;
      t_max_y_ += t_delta_y_;
      pending_ = Pending::None;
      return current_;
    }
    const double tol = 1e-12 * (1.0 + std::min(t_max_x_, t_max_y_));
    if (step_x_ != 0 && step_y_ != 0 && std::abs(t_max_x_ - t_max_y_) <= tol) {
      // Exact corner crossing: emit both side cells, then the diagonal.
      corner_base_ = cell_;
      corner_t_ = t_max_x_;
      current_ = {{corner_base_.cx + step_x_, corner_base_.cy}, corner_t_};
      pending_ = Pending::SideY;
      return current_;
    }
    if (t_max_x_ < t_max_y_) {
      cell_.cx += step_x_;
      current_ = {cell_, t_max_x_};
      t_max_x_ += t_delta_x_;
    } else {
      cell_.cy += step_y_;
      current_ = {cell_, t_max_y_};
      t_max_y_ += t_delta_y_;
    }
    return current_;
  }

 private:
  enum class Pending { None, SideY, Diagonal };

  static double inf() { return std::numeric_limits<double>::infinity(); }

  double boundary_t(double coord, double d, int cell_index, int step) const {
    if (step > 0) return ((cell_index + 1) * res_ - coord) / d;
    if (step < 0) return (cell_index * res_ - coord) / d;
    return inf();
  }

  double res_;
  Vec2 dir_;
  Cell cell_;
  int step_x_ = 0, step_y_ = 0;
  double t_max_x_ = 0.0, t_max_y_ = 0.0;
  double t_delta_x_ = 0.0, t_delta_y_ = 0.0;
  Pending pending_;
  Cell corner_base_;
  double corner_t_ = 0.0;
  RayVisit current_;
};

/// Calls visit(cell, t_entry) for every cell the closed segment from `from`
/// towards bearing over length `length` touches, in traversal order. Stops
/// early if visit returns false.
template <typename Visitor>
void for_each_segment_cell(Vec2 from, double bearing, double length, double resolution,
                           Visitor&& visit) {
  GridRay ray(from, bearing, resolution);
  RayVisit v = ray.current();
  while (v.t_entry <= length) {
    if (!visit(v.cell, v.t_entry)) return;
    v = ray.advance();
  }
}

template <typename Visitor>
void for_each_segment_cell(Vec2 from, Vec2 to, double resolution, Visitor&& visit) {
  const Vec2 d = to - from;
  const double len = d.norm();
  if (len == 0.0) {
    visit(cell_at(from, resolution), 0.0);
    return;
  }
  for_each_segment_cell(from, std::atan2(d.y, d.x), len, resolution,
                        std::forward<Visitor>(visit));
}

}  // namespace explore
