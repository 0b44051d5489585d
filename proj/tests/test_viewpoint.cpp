#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "explore/viewpoint.hpp"
#include "oracles.hpp"

using namespace explore;

namespace {

// Cell-unit fixture (resolution 1.0) so range boundaries are exact.
struct CellScaleFixture {
  OccupancyGrid grid;
  SafeSpaces spaces;
  ViewpointQuery query;

  explicit CellScaleFixture(const std::string& art)
      : grid(oracle::grid_from_ascii(art, 1.0)) {
    spaces = safe_spaces(grid, 1.5, 0.5);  // erode free space by 2 cells
    query.sensing_range = 15.0;
    query.visibility_tolerance = 2.0;
    query.info_threshold = 0.0;
  }
};

std::string open_room(int w, int h) {
  std::string art;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) art += '.';
    art += '\n';
  }
  return art;
}

}  // namespace

TEST_CASE("a frontier at exactly R - eta straight ahead is visible") {
  // 40x9 free strip, unknown to the right of column 30.
  std::string art = open_room(40, 9);
  for (int r = 0; r < 9; ++r)
    for (int c = 31; c < 40; ++c) art[r * 41 + c] = '?';
  CellScaleFixture f(art);

  const auto frontiers = detect_frontiers(f.grid);
  REQUIRE(!frontiers.empty());
  // Frontier column is 30; viewpoint 13 = R - eta cells to its left.
  const Vec2 v = cell_center({17, 4}, 1.0);
  const auto visible = visible_frontiers(f.grid, frontiers, v, f.query);
  CHECK(std::find(visible.begin(), visible.end(), Cell{30, 4}) != visible.end());

  // One cell farther is out of reliable range.
  const Vec2 far = cell_center({16, 4}, 1.0);
  const auto visible_far = visible_frontiers(f.grid, frontiers, far, f.query);
  CHECK(std::find(visible_far.begin(), visible_far.end(), Cell{30, 4}) ==
        visible_far.end());
}

TEST_CASE("frontiers behind an occupied wall are not visible") {
  std::string art = open_room(30, 15);
  for (int r = 0; r < 15; ++r) {
    art[r * 31 + 20] = '#';             // vertical wall
    for (int c = 22; c < 30; ++c) art[r * 31 + c] = '?';
  }
  art[7 * 31 + 20] = '.';  // one-cell slit
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  const Vec2 v = cell_center({10, 2}, 1.0);
  for (const Cell& c : visible_frontiers(f.grid, frontiers, v, f.query)) {
    // Anything past the wall must be seen through the slit, which the probe
    // ring around a distant viewpoint cannot do; nothing qualifies here.
    CHECK(c.cx < 20);
  }
}

TEST_CASE("visible frontiers match the brute-force definition") {
  std::string art = open_room(26, 20);
  for (int r = 0; r < 20; ++r)
    for (int c = 0; c < 26; ++c)
      if (r >= 12 && c >= 8 && c <= 13) art[r * 27 + c] = '?';
  for (int c = 4; c <= 9; ++c) art[9 * 27 + c] = '#';
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  for (int cy = 0; cy < 20; cy += 2) {
    for (int cx = 0; cx < 26; cx += 2) {
      if (!f.spaces.in_planning({cx, cy})) continue;
      const Vec2 v = cell_center({cx, cy}, 1.0);
      auto fast = visible_frontiers(f.grid, frontiers, v, f.query);
      auto slow = oracle::brute_visible_frontiers(f.grid, frontiers, v, f.query);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("viewpoint set membership in an open room") {
  std::string art = open_room(24, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 18; c < 24; ++c) art[r * 25 + c] = '?';
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  REQUIRE(regions.size() == 1);

  const auto members = viewpoint_set(f.grid, regions[0], f.spaces, f.query);
  CHECK(!members.empty());
  // A planning cell right next to the region sees it.
  CHECK(std::find(members.begin(), members.end(), Cell{14, 8}) != members.end());
  // Everything in the set matches the brute-force definition.
  auto slow = oracle::brute_viewpoint_set(f.grid, regions[0], f.spaces, f.query);
  auto fast = members;
  std::sort(fast.begin(), fast.end());
  std::sort(slow.begin(), slow.end());
  CHECK(fast == slow);
}

TEST_CASE("a region sealed behind a wall has no viewpoints in a closed corridor") {
  // Corridor on the left, solid wall, unknown pocket on the right whose only
  // free neighbors are also right of the wall.
  std::string art;
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 24; ++c) {
      char ch = '.';
      if (c == 12 || c == 13) ch = '#';
      if (c > 13) ch = (r >= 6 && r <= 9 && c >= 16 && c <= 19) ? '.' : '?';
      art += ch;
    }
    art += '\n';
  }
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  REQUIRE(!regions.empty());
  for (const auto& region : regions) {
    // Regions right of the wall: no planning cell left of the wall sees them.
    if (region.min_cell().cx > 13) {
      for (const Cell& v : viewpoint_set(f.grid, region, f.spaces, f.query))
        CHECK(v.cx > 13);
    }
  }
}

TEST_CASE("select_viewpoint picks the reachable sum-distance minimizer") {
  std::string art = open_room(24, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 18; c < 24; ++c) art[r * 25 + c] = '?';
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  REQUIRE(regions.size() == 1);

  CostField field = build_cost_field(f.grid, f.spaces, 30.0, 10.0);
  const Vec2 robot = cell_center({4, 8}, 1.0);
  const ShortestPathField reach = shortest_paths(field, robot);
  const auto fast = select_viewpoint(f.grid, regions[0], f.spaces, reach, f.query);
  const auto slow =
      oracle::brute_select_viewpoint(f.grid, regions[0], f.spaces, {4, 8}, f.query);
  REQUIRE(fast.has_value());
  REQUIRE(slow.has_value());
  CHECK(fast->x == slow->x);
  CHECK(fast->y == slow->y);
}

TEST_CASE("single-cell region: viewpoint is the nearest reachable seeing cell") {
  std::string art = open_room(20, 20);
  // A lone unknown cell in the middle creates a small frontier ring.
  art[10 * 21 + 10] = '?';
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  REQUIRE(regions.size() == 1);
  CostField field = build_cost_field(f.grid, f.spaces, 30.0, 10.0);
  const Vec2 robot = cell_center({3, 3}, 1.0);
  const auto vp = select_viewpoint(f.grid, regions[0], f.spaces,
                                   shortest_paths(field, robot), f.query);
  const auto slow = oracle::brute_select_viewpoint(f.grid, regions[0], f.spaces,
                                                   {3, 3}, f.query);
  REQUIRE(vp.has_value());
  CHECK(vp->x == slow->x);
  CHECK(vp->y == slow->y);
}

TEST_CASE("actionable info vanishes for unreachable regions") {
  // Sealed room on the right; the robot plans from the left component.
  std::string art;
  for (int r = 0; r < 18; ++r) {
    for (int c = 0; c < 30; ++c) {
      char ch = '.';
      if (c == 15 || c == 16) ch = '#';
      if (c > 16 && (r < 3 || r > 14 || c > 26)) ch = '?';
      art += ch;
    }
    art += '\n';
  }
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  CostField field = build_cost_field(f.grid, f.spaces, 30.0, 10.0);
  const ShortestPathField reach = shortest_paths(field, cell_center({4, 9}, 1.0));
  bool saw_sealed_region = false;
  for (const auto& region : regions) {
    if (region.min_cell().cx > 16) {
      saw_sealed_region = true;
      CHECK(actionable_info(f.grid, region, frontiers, f.spaces, reach, f.query) == 0.0);
    }
  }
  CHECK(saw_sealed_region);
}

TEST_CASE("actionable info equals region volume when fully visible, and is bounded") {
  // Full-height unknown slab: the frontier is one straight column, entirely
  // visible from the selected viewpoint.
  std::string art = open_room(24, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 18; c < 24; ++c) art[r * 25 + c] = '?';
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  REQUIRE(regions.size() == 1);
  CostField field = build_cost_field(f.grid, f.spaces, 30.0, 10.0);
  const ShortestPathField reach = shortest_paths(field, cell_center({4, 8}, 1.0));
  const double info =
      actionable_info(f.grid, regions[0], frontiers, f.spaces, reach, f.query);
  CHECK(info == doctest::Approx(regions[0].volume));
  CHECK(info <= frontiers.size() * f.grid.cell_area());
}

TEST_CASE("is_near is a closed ball test") {
  const double eta = 0.2;
  CHECK(is_near({0.0, 0.0}, {0.0, 0.0}, eta));
  CHECK(is_near({0.2, 0.0}, {0.0, 0.0}, eta));           // exactly eta
  CHECK_FALSE(is_near({0.3, 0.0}, {0.0, 0.0}, eta));     // eta + resolution
}

TEST_CASE("is_informative thresholds the visible frontier volume") {
  std::string art = open_room(24, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 18; c < 24; ++c) art[r * 25 + c] = '?';
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);

  const Vec2 near_frontier = cell_center({13, 8}, 1.0);
  CHECK(is_informative(f.grid, frontiers, near_frontier, f.query));
  CHECK(is_informative(f.grid, near_frontier, f.query));

  // Far corner: every frontier is beyond R - eta.
  const Vec2 corner = cell_center({2, 2}, 1.0);
  bool any_in_range = false;
  for (const Cell& c : frontiers)
    if ((cell_center(c, 1.0) - corner).norm() <=
        f.query.sensing_range - f.query.visibility_tolerance)
      any_in_range = true;
  if (!any_in_range) CHECK_FALSE(is_informative(f.grid, frontiers, corner, f.query));

  ViewpointQuery strict = f.query;
  strict.info_threshold = 1e9;
  CHECK_FALSE(is_informative(f.grid, frontiers, near_frontier, strict));
}

TEST_CASE("is_complete: vacuous, informative, and sealed cases") {
  // Fully classified map: no frontiers at all.
  std::string closed = open_room(16, 12);
  CellScaleFixture done(closed);
  CostField field_done = build_cost_field(done.grid, done.spaces, 30.0, 10.0);
  CHECK(is_complete(done.grid, done.spaces, field_done, cell_center({8, 6}, 1.0),
                    done.query));

  // One reachable informative region.
  std::string art = open_room(24, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 18; c < 24; ++c) art[r * 25 + c] = '?';
  CellScaleFixture f(art);
  CostField field = build_cost_field(f.grid, f.spaces, 30.0, 10.0);
  CHECK_FALSE(is_complete(f.grid, f.spaces, field, cell_center({8, 8}, 1.0), f.query));

  // All remaining regions sealed off.
  std::string sealed;
  for (int r = 0; r < 18; ++r) {
    for (int c = 0; c < 30; ++c) {
      char ch = '.';
      if (c == 15 || c == 16) ch = '#';
      if (c > 16) ch = (r >= 6 && r <= 9 && c >= 19 && c <= 24) ? '.' : '?';
      sealed += ch;
    }
    sealed += '\n';
  }
  CellScaleFixture s(sealed);
  CostField sealed_field = build_cost_field(s.grid, s.spaces, 30.0, 10.0);
  CHECK(is_complete(s.grid, s.spaces, sealed_field, cell_center({5, 9}, 1.0), s.query));
}

TEST_CASE("select_target_region prefers cheaper equally-informative regions") {
  // Two identical unknown slabs, one near and one far.
  std::string art = open_room(60, 14);
  for (int r = 5; r < 9; ++r) {
    for (int c = 18; c < 22; ++c) art[r * 61 + c] = '?';
    for (int c = 52; c < 56; ++c) art[r * 61 + c] = '?';
  }
  CellScaleFixture f(art);
  f.query.sensing_range = 10.0;  // keep the two regions' viewpoints distinct
  f.query.nav_kind = NavCost::Geodesic;
  f.query.info_kind = InfoMeasure::Volume;
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  REQUIRE(regions.size() == 2);
  CostField field = build_cost_field(f.grid, f.spaces, 20.0, 10.0);
  const Vec2 robot = cell_center({5, 7}, 1.0);
  const ShortestPathField reach = shortest_paths(field, robot);
  const auto target = select_target_region(f.grid, regions, frontiers, f.spaces,
                                           field, reach, f.query);
  REQUIRE(target.has_value());
  // The near slab starts at column 18; its region id sorts first.
  CHECK(target->region_id == 0);
  CHECK(target->viewpoint.x < 30.0);
}

TEST_CASE("uniform navigation cost reduces selection to the info argmax") {
  std::string art = open_room(60, 14);
  // Small slab near, large slab far.
  for (int r = 6; r < 8; ++r)
    for (int c = 18; c < 20; ++c) art[r * 61 + c] = '?';
  for (int r = 3; r < 11; ++r)
    for (int c = 50; c < 56; ++c) art[r * 61 + c] = '?';
  CellScaleFixture f(art);
  f.query.sensing_range = 10.0;
  f.query.nav_kind = NavCost::Uniform;
  f.query.info_kind = InfoMeasure::Volume;
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  REQUIRE(regions.size() == 2);
  CostField field = build_cost_field(f.grid, f.spaces, 20.0, 10.0);
  const ShortestPathField reach = shortest_paths(field, cell_center({5, 7}, 1.0));
  const auto target = select_target_region(f.grid, regions, frontiers, f.spaces,
                                           field, reach, f.query);
  REQUIRE(target.has_value());

  // Direct info argmax among qualifying regions.
  int best_id = -1;
  double best_info = -1.0;
  for (const auto& region : regions) {
    if (actionable_info(f.grid, region, frontiers, f.spaces, reach, f.query) <=
        f.query.info_threshold)
      continue;
    const double info = info_measure(f.grid, region, InfoMeasure::Volume);
    if (info > best_info) {
      best_info = info;
      best_id = region.id;
    }
  }
  CHECK(target->region_id == best_id);
}

TEST_CASE("selection is invariant to positive rescaling of the information measure") {
  // With one shared cell probability, entropy is a positive multiple of
  // volume, so the two measures must select the same region.
  std::string art = open_room(60, 14);
  for (int r = 5; r < 9; ++r)
    for (int c = 18; c < 21; ++c) art[r * 61 + c] = '?';
  for (int r = 2; r < 12; ++r)
    for (int c = 50; c < 56; ++c) art[r * 61 + c] = '?';
  CellScaleFixture f(art);
  f.query.sensing_range = 10.0;
  f.query.nav_kind = NavCost::Geodesic;
  const auto frontiers = detect_frontiers(f.grid);
  const auto regions = cluster_frontiers(frontiers, f.grid);
  CostField field = build_cost_field(f.grid, f.spaces, 20.0, 10.0);
  const ShortestPathField reach = shortest_paths(field, cell_center({5, 7}, 1.0));

  f.query.info_kind = InfoMeasure::Volume;
  const auto by_volume = select_target_region(f.grid, regions, frontiers, f.spaces,
                                              field, reach, f.query);
  f.query.info_kind = InfoMeasure::Entropy;
  const auto by_entropy = select_target_region(f.grid, regions, frontiers, f.spaces,
                                               field, reach, f.query);
  REQUIRE(by_volume.has_value());
  REQUIRE(by_entropy.has_value());
  CHECK(by_volume->region_id == by_entropy->region_id);
}

TEST_CASE("no frontier within R around x implies empty visible sets on the eta ball") {
  std::string art = open_room(40, 20);
  for (int r = 0; r < 20; ++r)
    for (int c = 36; c < 40; ++c) art[r * 41 + c] = '?';
  CellScaleFixture f(art);
  const auto frontiers = detect_frontiers(f.grid);
  const Vec2 x = cell_center({8, 10}, 1.0);
  double nearest = 1e18;
  for (const Cell& c : frontiers)
    nearest = std::min(nearest, (cell_center(c, 1.0) - x).norm());
  REQUIRE(nearest > f.query.sensing_range);
  for (int k = 0; k < 12; ++k) {
    const Vec2 v = x + f.query.visibility_tolerance *
                           unit_from_angle(2.0 * M_PI * k / 12.0) * (k % 2 ? 1.0 : 0.5);
    CHECK(visible_frontiers(f.grid, frontiers, v, f.query).empty());
  }
}
