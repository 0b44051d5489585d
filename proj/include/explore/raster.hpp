#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "explore/geometry.hpp"

namespace explore {

/// Row-major 2D array over a cell lattice. Row 0 is the bottom (y = 0) row;
/// cell (cx, cy) spans [cx*res, (cx+1)*res) x [cy*res, (cy+1)*res) in world
/// coordinates, with its center at ((cx+0.5)*res, (cy+0.5)*res).
template <typename T>
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, T fill = T{})
      : width_(width), height_(height), data_(static_cast<size_t>(width) * height, fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return data_.size(); }

  bool in_bounds(int cx, int cy) const {
    return cx >= 0 && cy >= 0 && cx < width_ && cy < height_;
  }
  bool in_bounds(Cell c) const { return in_bounds(c.cx, c.cy); }

  int index(int cx, int cy) const { return cy * width_ + cx; }
  int index(Cell c) const { return index(c.cx, c.cy); }
  Cell cell_of(int index) const { return {index % width_, index / width_}; }

  T& at(int cx, int cy) {
    assert(in_bounds(cx, cy));
    return data_[static_cast<size_t>(index(cx, cy))];
  }
  const T& at(int cx, int cy) const {
    assert(in_bounds(cx, cy));
    return data_[static_cast<size_t>(index(cx, cy))];
  }
  T& at(Cell c) { return at(c.cx, c.cy); }
  const T& at(Cell c) const { return at(c.cx, c.cy); }

  T& operator[](size_t i) { return data_[i]; }
  const T& operator[](size_t i) const { return data_[i]; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Raster&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

/// World position of a cell center.
inline Vec2 cell_center(Cell c, double resolution) {
  return {(c.cx + 0.5) * resolution, (c.cy + 0.5) * resolution};
}

/// Cell containing a world position (points on a cell boundary belong to the
/// cell with the larger index, matching floor()).
inline Cell cell_at(Vec2 p, double resolution) {
  return {static_cast<int>(std::floor(p.x / resolution)),
          static_cast<int>(std::floor(p.y / resolution))};
}

}  // namespace explore
