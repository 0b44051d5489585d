#pragma once

#include <string>
#include <utility>
#include <vector>

#include "explore/explorer.hpp"

namespace explore {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The bundled demo world (same text as worlds/demo.world).
const char* demo_world_text();

struct StartPose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
};

struct Combo {
  Strategy strategy = Strategy::Preventive;
  InfoMeasure info = InfoMeasure::Volume;
  NavCost nav = NavCost::Geodesic;

  std::string name() const;
};

/// Fully resolved experiment description: the world, the start poses, the
/// (strategy, info, nav) combinations, and every numeric parameter.
struct ExperimentSpec {
  std::string world_source = "demo";  // "demo" or a file path
  GroundTruthWorld world;
  std::vector<StartPose> poses;
  std::vector<Combo> combos;
  ExplorationConfig base;
  std::vector<double> snapshot_milestones{0.25, 0.5, 0.75};
};

/// Parses flat `key = value` configuration text, fills defaults, and checks
/// ranges. Unknown keys and out-of-range values raise ConfigError naming the
/// key. `overrides` are applied on top of the parsed text.
ExperimentSpec validate_config(const std::string& text);
ExperimentSpec validate_config(
    const std::string& text,
    const std::vector<std::pair<std::string, std::string>>& overrides);

ExperimentSpec load_config_file(const std::string& path);

/// Flat key = value dump of a resolved spec; parseable by validate_config,
/// so a run directory's dump replays the run.
std::string dump_config(const ExperimentSpec& spec);

}  // namespace explore
