#include "explore/world.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "explore/ray.hpp"

namespace explore {

int GroundTruthWorld::free_cell_count() const {
  return static_cast<int>(
      std::count(occupied.data().begin(), occupied.data().end(), 0));
}

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("world parse error, line " + std::to_string(line) + ": " + what);
}

}  // namespace

GroundTruthWorld load_world(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) fail(1, "empty file, expected `resolution <meters>`");
  line_no = 1;
  std::istringstream header(line);
  std::string key;
  double resolution = 0.0;
  if (!(header >> key >> resolution) || key != "resolution")
    fail(1, "expected `resolution <meters>`, got `" + line + "`");
  if (!(resolution > 0.0)) fail(1, "resolution must be > 0");

  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!rows.empty() && line.size() != rows.front().size())
      fail(line_no, "ragged row: expected " + std::to_string(rows.front().size()) +
                        " columns, got " + std::to_string(line.size()));
    for (char c : line)
      if (c != '#' && c != '.')
        fail(line_no, std::string("invalid character `") + c + "`");
    rows.push_back(line);
  }
  if (rows.empty()) fail(line_no + 1, "no map rows");

  const int width = static_cast<int>(rows.front().size());
  const int height = static_cast<int>(rows.size());

  GroundTruthWorld world;
  world.resolution = resolution;
  world.occupied = Raster<unsigned char>(width, height, 0);
  // File row 0 is the top (max-y) row; raster row 0 is the bottom.
  for (int file_row = 0; file_row < height; ++file_row) {
    const int cy = height - 1 - file_row;
    for (int cx = 0; cx < width; ++cx)
      world.occupied.at(cx, cy) = rows[file_row][cx] == '#' ? 1 : 0;
  }

  for (int cx = 0; cx < width; ++cx) {
    if (!world.occupied.at(cx, 0) || !world.occupied.at(cx, height - 1))
      fail(2, "open border: every boundary cell must be `#`");
  }
  for (int cy = 0; cy < height; ++cy) {
    if (!world.occupied.at(0, cy) || !world.occupied.at(width - 1, cy))
      fail(2 + (height - 1 - cy), "open border: every boundary cell must be `#`");
  }
  return world;
}

GroundTruthWorld load_world_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open world file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_world(ss.str());
}

RayHit ray_cast(const GroundTruthWorld& world, Vec2 origin, double bearing,
                double max_range) {
  const Cell start = cell_at(origin, world.resolution);
  if (!world.occupied.in_bounds(start) || world.is_occupied(start))
    throw std::invalid_argument("ray_cast: origin is not inside a free cell");

  RayHit result{max_range, false};
  for_each_segment_cell(origin, bearing, max_range, world.resolution,
                        [&](Cell c, double t_entry) {
                          if (!world.occupied.in_bounds(c)) return false;
                          if (world.is_occupied(c)) {
                            result = {t_entry, true};
                            return false;
                          }
                          return true;
                        });
  return result;
}

RangeScan simulate_scan(const GroundTruthWorld& world, Vec2 position) {
  RangeScan scan;
  scan.origin = position;
  scan.bearings.reserve(world.beam_count);
  scan.ranges.reserve(world.beam_count);
  scan.hit_flags.reserve(world.beam_count);
  for (int k = 0; k < world.beam_count; ++k) {
    const double bearing = 2.0 * M_PI * k / world.beam_count;
    const RayHit hit = ray_cast(world, position, bearing, world.sensing_range);
    scan.bearings.push_back(bearing);
    scan.ranges.push_back(hit.distance);
    scan.hit_flags.push_back(hit.hit);
  }
  return scan;
}

}  // namespace explore
