#pragma once

#include <cmath>
#include <compare>

namespace explore {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
};

inline Vec2 operator*(double k, const Vec2& v) { return v * k; }

inline Vec2 unit_from_angle(double a) { return {std::cos(a), std::sin(a)}; }

/// Wraps an angle to [-pi, pi).
inline double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a < 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

struct Cell {
  int cx = 0;
  int cy = 0;
  auto operator<=>(const Cell&) const = default;
};

}  // namespace explore
