#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "explore/experiment.hpp"
#include "oracles.hpp"

using namespace explore;
namespace fs = std::filesystem;

namespace {

std::string world_path(const std::string& name) {
  return std::string(EXPLORE_WORLDS_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "explore_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("the embedded demo world matches the bundled file") {
  CHECK(std::string(demo_world_text()) == read_file(world_path("demo.world")));
}

TEST_CASE("an empty config resolves to the all-defaults demo spec") {
  const ExperimentSpec spec = validate_config("");
  CHECK(spec.world_source == "demo");
  CHECK(spec.world.width_cells() == 60);
  CHECK(spec.poses.size() == 1);
  CHECK(spec.combos.size() == 1);
  CHECK(spec.combos[0].strategy == Strategy::Preventive);
  CHECK(spec.base.p_free == 0.2);
  CHECK(spec.base.p_occ == 0.8);
  CHECK(spec.base.robot_radius == 0.35);
  CHECK(spec.base.clearance == 0.1);
  CHECK(spec.base.query.sensing_range == 1.5);
  CHECK(spec.base.query.visibility_tolerance == doctest::Approx(0.2));
  CHECK(spec.base.query.info_threshold == 0.0);
  CHECK(spec.base.alpha_max == doctest::Approx(3.0));
  CHECK(spec.base.beta_max == doctest::Approx(2.25));
  CHECK(spec.base.control.kappa_v == 1.0);
  CHECK(spec.base.control.kappa_w == 2.0);
  CHECK(spec.base.control.v_max == 1.0);
  CHECK(spec.base.control.w_max == 1.0);
  CHECK(spec.base.control.dt == 0.1);
  CHECK(spec.base.replan_period == 1.0);
}

TEST_CASE("out-of-range values are rejected naming the key") {
  CHECK_THROWS_WITH_AS(validate_config("eta = -0.1\n"), doctest::Contains("eta"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(validate_config("p_free = 0.9\np_occ = 0.8\n"),
                       doctest::Contains("p_free"), ConfigError);
  CHECK_THROWS_WITH_AS(validate_config("dt = 0\n"), doctest::Contains("dt"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(validate_config("mu = -1\n"), doctest::Contains("mu"),
                       ConfigError);
}

TEST_CASE("unknown keys are rejected by name") {
  CHECK_THROWS_WITH_AS(validate_config("speling = 1\n"),
                       doctest::Contains("speling"), ConfigError);
  CHECK_THROWS_WITH_AS(validate_config("", {{"nope", "3"}}),
                       doctest::Contains("nope"), ConfigError);
}

TEST_CASE("online strategy without replan_period gets the 1 s default") {
  const ExperimentSpec spec =
      validate_config("combos = online:volume:geodesic\n");
  CHECK(spec.base.replan_period == 1.0);
  CHECK(dump_config(spec).find("replan_period = 1\n") != std::string::npos);
}

TEST_CASE("combos and poses parse and validate") {
  const ExperimentSpec spec = validate_config(
      "combos = persistent:uniform:euclidean ; online:entropy:geodesic\n"
      "poses = 1.5 1.5 0 ; 4.5 6.5 1.57\n");
  REQUIRE(spec.combos.size() == 2);
  CHECK(spec.combos[0].strategy == Strategy::Persistent);
  CHECK(spec.combos[0].info == InfoMeasure::Uniform);
  CHECK(spec.combos[0].nav == NavCost::Euclidean);
  CHECK(spec.combos[1].strategy == Strategy::Online);
  REQUIRE(spec.poses.size() == 2);
  CHECK(spec.poses[1].theta == doctest::Approx(1.57));

  CHECK_THROWS_WITH_AS(validate_config("combos = sideways:volume:geodesic\n"),
                       doctest::Contains("sideways"), ConfigError);
  // A pose inside a wall is rejected.
  CHECK_THROWS_WITH_AS(validate_config("poses = 0.05 0.05 0\n"),
                       doctest::Contains("pose 0"), ConfigError);
}

TEST_CASE("overrides apply on top of the file text") {
  const ExperimentSpec spec = validate_config("mu = 0.02\n", {{"mu", "0.05"}});
  CHECK(spec.base.query.info_threshold == 0.05);
}

TEST_CASE("a dumped config replays to the same resolved spec") {
  const ExperimentSpec spec = validate_config(
      "world = demo\n"
      "poses = 1.55 1.55 0.25\n"
      "combos = preventive:volume:geodesic\n"
      "eta = 0.25\n"
      "mu = 0.001\n"
      "v_max = 0.7\n");
  const std::string dump = dump_config(spec);
  const ExperimentSpec again = validate_config(dump);
  CHECK(dump_config(again) == dump);
  CHECK(again.base.query.visibility_tolerance == spec.base.query.visibility_tolerance);
  CHECK(again.base.control.v_max == spec.base.control.v_max);
  CHECK(again.poses[0].theta == spec.poses[0].theta);
}

TEST_CASE("run_experiment emits one run directory per (pose, combo)") {
  const fs::path out = fresh_dir("matrix");
  ExperimentSpec spec = validate_config(
      "poses = 1.55 1.55 0 ; 4.05 6.05 0\n"
      "combos = persistent:volume:geodesic ; preventive:volume:geodesic\n"
      "snapshot_milestones = 0.5\n");
  const ExperimentResult result = run_experiment(spec, out.string());
  CHECK(result.rows.size() == 4);  // cartesian product
  CHECK_FALSE(result.any_safety_violation);
  for (const SummaryRow& row : result.rows) {
    CHECK(row.outcome == Outcome::Complete);
    CHECK(fs::exists(fs::path(row.run_dir) / "metrics.csv"));
    CHECK(fs::exists(fs::path(row.run_dir) / "replans.csv"));
    CHECK(fs::exists(fs::path(row.run_dir) / "trajectory.csv"));
    CHECK(fs::exists(fs::path(row.run_dir) / "config.resolved"));
    CHECK(fs::exists(fs::path(row.run_dir) / "map_final.pgm"));
    CHECK(fs::exists(fs::path(row.run_dir) / "map_050.pgm"));
  }
  CHECK(fs::exists(out / "summary.csv"));
  CHECK(fs::exists(out / "curve_persistent-volume-geodesic.csv"));
  CHECK(fs::exists(out / "curve_preventive-volume-geodesic.csv"));

  // Paired preventive-vs-persistent comparison, one row per pose with the
  // distance ratio in the last column.
  const std::string paired = read_file((out / "paired_preventive_vs_persistent.csv").string());
  CHECK(paired.find("ratio") != std::string::npos);
  std::istringstream lines(paired);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    const double ratio = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(ratio > 0.0);
    ++rows;
  }
  CHECK(rows == 2);

  // The summary is deterministic row-ordered: combo index, then pose index.
  const std::string summary = read_file((out / "summary.csv").string());
  CHECK(summary.find("persistent-volume-geodesic,persistent") <
        summary.find("preventive-volume-geodesic,preventive"));
}

TEST_CASE("identical specs produce byte-identical metrics") {
  ExperimentSpec spec = validate_config(
      "poses = 1.55 1.55 0\ncombos = preventive:volume:geodesic\n");
  const fs::path out_a = fresh_dir("det_a");
  const fs::path out_b = fresh_dir("det_b");
  run_experiment(spec, out_a.string());
  run_experiment(spec, out_b.string());
  const std::string run = "runs/preventive-volume-geodesic__pose0/metrics.csv";
  CHECK(read_file((out_a / run).string()) == read_file((out_b / run).string()));
}

TEST_CASE("map snapshots are well-formed P2 graymaps") {
  const fs::path out = fresh_dir("pgm");
  ExperimentSpec spec = validate_config(
      "poses = 1.55 1.55 0\ncombos = preventive:volume:geodesic\n"
      "snapshot_milestones = 0.5\n");
  run_experiment(spec, out.string());
  const fs::path run_dir = out / "runs" / "preventive-volume-geodesic__pose0";
  for (const char* name : {"map_050.pgm", "map_final.pgm"}) {
    std::istringstream in(read_file((run_dir / name).string()));
    std::string magic;
    int width = 0, height = 0, maxval = 0;
    REQUIRE((in >> magic >> width >> height >> maxval));
    CHECK(magic == "P2");
    CHECK(width == 60);
    CHECK(height == 80);
    CHECK(maxval == 255);
    long count = 0;
    int value = 0;
    while (in >> value) {
      CHECK((value == 0 || value == 128 || value == 255));
      ++count;
    }
    CHECK(count == 60 * 80);
  }
}

TEST_CASE("an entropy-information combination runs to completion") {
  const fs::path out = fresh_dir("entropy");
  ExperimentSpec spec = validate_config(
      "poses = 1.55 1.55 0\ncombos = persistent:entropy:geodesic\n");
  const ExperimentResult result = run_experiment(spec, out.string());
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].outcome == Outcome::Complete);
}

TEST_CASE("the worker pool does not change any output") {
  ExperimentSpec spec = validate_config(
      "poses = 1.55 1.55 0 ; 4.05 6.05 0\n"
      "combos = persistent:volume:geodesic ; preventive:volume:geodesic\n");
  const fs::path serial = fresh_dir("jobs1");
  const fs::path parallel = fresh_dir("jobs3");
  run_experiment(spec, serial.string(), {.jobs = 1});
  run_experiment(spec, parallel.string(), {.jobs = 3});
  CHECK(read_file((serial / "summary.csv").string()) ==
        read_file((parallel / "summary.csv").string()));
  for (const char* run : {"persistent-volume-geodesic__pose0",
                          "preventive-volume-geodesic__pose1"}) {
    CHECK(read_file((serial / "runs" / run / "metrics.csv").string()) ==
          read_file((parallel / "runs" / run / "metrics.csv").string()));
  }
}

TEST_CASE("a single-run config.resolved replays the run byte for byte") {
  ExperimentSpec spec = validate_config(
      "poses = 1.55 1.55 0\ncombos = persistent:volume:geodesic\n");
  const fs::path out = fresh_dir("replay");
  run_experiment(spec, out.string());
  const fs::path run_dir = out / "runs" / "persistent-volume-geodesic__pose0";
  const ExperimentSpec replay =
      validate_config(read_file((run_dir / "config.resolved").string()));
  const fs::path out2 = fresh_dir("replay2");
  run_experiment(replay, out2.string());
  CHECK(read_file((run_dir / "metrics.csv").string()) ==
        read_file((out2 / "runs/persistent-volume-geodesic__pose0/metrics.csv").string()));
}
