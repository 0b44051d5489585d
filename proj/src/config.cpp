#include "explore/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace explore {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_double(const std::string& key, const std::string& value) {
  size_t pos = 0;
  double d = 0.0;
  try {
    d = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config key `" + key + "`: not a number: `" + value + "`");
  }
  if (pos != value.size())
    throw ConfigError("config key `" + key + "`: trailing junk in `" + value + "`");
  return d;
}

long parse_long(const std::string& key, const std::string& value) {
  const double d = parse_double(key, value);
  if (d != std::floor(d))
    throw ConfigError("config key `" + key + "`: expected an integer, got `" + value + "`");
  return static_cast<long>(d);
}

Strategy parse_strategy(const std::string& s) {
  if (s == "persistent") return Strategy::Persistent;
  if (s == "preventive") return Strategy::Preventive;
  if (s == "online") return Strategy::Online;
  throw ConfigError("unknown strategy `" + s + "` (persistent|preventive|online)");
}

InfoMeasure parse_info(const std::string& s) {
  if (s == "uniform") return InfoMeasure::Uniform;
  if (s == "volume") return InfoMeasure::Volume;
  if (s == "entropy") return InfoMeasure::Entropy;
  throw ConfigError("unknown info measure `" + s + "` (uniform|volume|entropy)");
}

NavCost parse_nav(const std::string& s) {
  if (s == "uniform") return NavCost::Uniform;
  if (s == "euclidean") return NavCost::Euclidean;
  if (s == "geodesic") return NavCost::Geodesic;
  throw ConfigError("unknown navigation cost `" + s + "` (uniform|euclidean|geodesic)");
}

void check_range(const std::string& key, bool ok) {
  if (!ok) throw ConfigError("config key `" + key + "`: value out of range");
}

// Shortest representation that parses back to the same double, so a dumped
// config replays the run exactly.
std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "world", "poses", "combos", "p_free", "p_occ", "logodds_free",
      "logodds_occupied", "logodds_clamp", "robot_radius", "clearance",
      "sensing_range", "beam_count", "scan_period", "alpha_max", "beta_max",
      "eta", "mu", "kappa_v", "kappa_omega", "k_zeta", "k_s", "v_max", "w_max",
      "dt", "replan_period", "step_budget", "snapshot_milestones"};
  return keys;
}

}  // namespace

std::string Combo::name() const {
  return to_string(strategy) + "-" + to_string(info) + "-" + to_string(nav);
}

ExperimentSpec validate_config(const std::string& text) {
  return validate_config(text, {});
}

ExperimentSpec validate_config(
    const std::string& text,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected `key = value`, got `" + stripped + "`");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end())
      throw ConfigError("unknown config key `" + key + "`");
    kv[key] = value;
  }
  for (const auto& [key, value] : overrides) {
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end())
      throw ConfigError("unknown config key `" + key + "`");
    kv[key] = value;
  }

  const auto get = [&](const std::string& key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  const auto get_double = [&](const std::string& key, double fallback) {
    const std::string* v = get(key);
    return v ? parse_double(key, *v) : fallback;
  };

  ExperimentSpec spec;
  if (const std::string* w = get("world")) spec.world_source = *w;
  spec.world = spec.world_source == "demo" ? load_world(demo_world_text())
                                           : load_world_file(spec.world_source);

  ExplorationConfig& base = spec.base;
  base.p_free = get_double("p_free", 0.2);
  base.p_occ = get_double("p_occ", 0.8);
  check_range("p_free", 0.0 <= base.p_free && base.p_free < base.p_occ);
  check_range("p_occ", base.p_occ <= 1.0);
  base.mapping.logodds_free = get_double("logodds_free", -0.85);
  check_range("logodds_free", base.mapping.logodds_free < 0.0);
  base.mapping.logodds_occupied = get_double("logodds_occupied", 2.2);
  check_range("logodds_occupied", base.mapping.logodds_occupied > 0.0);
  base.mapping.logodds_clamp = get_double("logodds_clamp", 4.6);
  check_range("logodds_clamp", base.mapping.logodds_clamp > 0.0);

  base.robot_radius = get_double("robot_radius", 0.35);
  check_range("robot_radius", base.robot_radius > 0.0);
  base.clearance = get_double("clearance", 0.1);
  check_range("clearance", base.clearance > 0.0);

  spec.world.sensing_range = get_double("sensing_range", 1.5);
  check_range("sensing_range", spec.world.sensing_range > base.robot_radius);
  spec.world.beam_count = static_cast<int>(
      get("beam_count") ? parse_long("beam_count", *get("beam_count")) : 360);
  check_range("beam_count", spec.world.beam_count >= 4);
  base.scan_period = get_double("scan_period", 0.1);
  check_range("scan_period", base.scan_period > 0.0);

  base.alpha_max = get_double("alpha_max", 2.0 * spec.world.sensing_range);
  check_range("alpha_max", base.alpha_max > 0.0);
  base.beta_max =
      get_double("beta_max", 5.0 * (base.robot_radius + base.clearance));
  check_range("beta_max", base.beta_max > 0.0);

  base.query.sensing_range = spec.world.sensing_range;
  base.query.visibility_tolerance = get_double("eta", 2.0 * spec.world.resolution);
  check_range("eta", 0.0 < base.query.visibility_tolerance &&
                         base.query.visibility_tolerance < spec.world.sensing_range);
  base.query.info_threshold = get_double("mu", 0.0);
  check_range("mu", base.query.info_threshold >= 0.0);

  base.control.kappa_v = get_double("kappa_v", 1.0);
  base.control.kappa_w = get_double("kappa_omega", 2.0);
  base.control.k_safety = get_double("k_zeta", 1.0);
  base.control.k_s = get_double("k_s", 1.0);
  check_range("kappa_v", base.control.kappa_v > 0.0);
  check_range("kappa_omega", base.control.kappa_w > 0.0);
  check_range("k_zeta", base.control.k_safety > 0.0);
  check_range("k_s", base.control.k_s > 0.0);
  base.control.v_max = get_double("v_max", 1.0);
  base.control.w_max = get_double("w_max", 1.0);
  base.control.dt = get_double("dt", 0.1);
  check_range("v_max", base.control.v_max > 0.0);
  check_range("w_max", base.control.w_max > 0.0);
  check_range("dt", base.control.dt > 0.0);

  base.replan_period = get_double("replan_period", 1.0);
  check_range("replan_period", base.replan_period > 0.0);
  base.step_budget = get("step_budget") ? parse_long("step_budget", *get("step_budget")) : 0;
  check_range("step_budget", base.step_budget >= 0);

  if (const std::string* m = get("snapshot_milestones")) {
    spec.snapshot_milestones.clear();
    for (const std::string& tok : split(*m, ' ')) {
      const double v = parse_double("snapshot_milestones", tok);
      check_range("snapshot_milestones", 0.0 < v && v <= 1.0);
      spec.snapshot_milestones.push_back(v);
    }
  }
  base.snapshot_milestones = spec.snapshot_milestones;

  if (const std::string* p = get("poses")) {
    for (const std::string& entry : split(*p, ';')) {
      std::istringstream ps(entry);
      StartPose pose;
      if (!(ps >> pose.x >> pose.y))
        throw ConfigError("config key `poses`: expected `x y [theta]`, got `" + entry + "`");
      ps >> pose.theta;
      ps.clear();
      std::string rest;
      if (ps >> rest)
        throw ConfigError("config key `poses`: trailing junk in `" + entry + "`");
      spec.poses.push_back(pose);
    }
  } else if (spec.world_source == "demo") {
    spec.poses.push_back({1.5, 1.5, 0.0});
  }
  if (spec.poses.empty())
    throw ConfigError("config key `poses`: at least one start pose is required");
  for (size_t i = 0; i < spec.poses.size(); ++i) {
    const Cell c = cell_at({spec.poses[i].x, spec.poses[i].y}, spec.world.resolution);
    if (!spec.world.occupied.in_bounds(c) || spec.world.is_occupied(c))
      throw ConfigError("config key `poses`: pose " + std::to_string(i) +
                        " is not in ground-truth free space");
  }

  if (const std::string* c = get("combos")) {
    for (const std::string& entry : split(*c, ';')) {
      const std::vector<std::string> parts = split(entry, ':');
      if (parts.size() != 3)
        throw ConfigError("config key `combos`: expected `strategy:info:nav`, got `" +
                          entry + "`");
      spec.combos.push_back({parse_strategy(parts[0]), parse_info(parts[1]),
                             parse_nav(parts[2])});
    }
  } else {
    spec.combos.push_back({Strategy::Preventive, InfoMeasure::Volume, NavCost::Geodesic});
  }
  return spec;
}

ExperimentSpec load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return validate_config(ss.str());
}

std::string dump_config(const ExperimentSpec& spec) {
  std::ostringstream out;
  const ExplorationConfig& base = spec.base;
  out << "world = " << spec.world_source << "\n";
  out << "poses = ";
  for (size_t i = 0; i < spec.poses.size(); ++i) {
    if (i) out << " ; ";
    out << format_double(spec.poses[i].x) << " " << format_double(spec.poses[i].y)
        << " " << format_double(spec.poses[i].theta);
  }
  out << "\n";
  out << "combos = ";
  for (size_t i = 0; i < spec.combos.size(); ++i) {
    if (i) out << " ; ";
    out << to_string(spec.combos[i].strategy) << ":" << to_string(spec.combos[i].info)
        << ":" << to_string(spec.combos[i].nav);
  }
  out << "\n";
  out << "p_free = " << format_double(base.p_free) << "\n";
  out << "p_occ = " << format_double(base.p_occ) << "\n";
  out << "logodds_free = " << format_double(base.mapping.logodds_free) << "\n";
  out << "logodds_occupied = " << format_double(base.mapping.logodds_occupied) << "\n";
  out << "logodds_clamp = " << format_double(base.mapping.logodds_clamp) << "\n";
  out << "robot_radius = " << format_double(base.robot_radius) << "\n";
  out << "clearance = " << format_double(base.clearance) << "\n";
  out << "sensing_range = " << format_double(spec.world.sensing_range) << "\n";
  out << "beam_count = " << spec.world.beam_count << "\n";
  out << "scan_period = " << format_double(base.scan_period) << "\n";
  out << "alpha_max = " << format_double(base.alpha_max) << "\n";
  out << "beta_max = " << format_double(base.beta_max) << "\n";
  out << "eta = " << format_double(base.query.visibility_tolerance) << "\n";
  out << "mu = " << format_double(base.query.info_threshold) << "\n";
  out << "kappa_v = " << format_double(base.control.kappa_v) << "\n";
  out << "kappa_omega = " << format_double(base.control.kappa_w) << "\n";
  out << "k_zeta = " << format_double(base.control.k_safety) << "\n";
  out << "k_s = " << format_double(base.control.k_s) << "\n";
  out << "v_max = " << format_double(base.control.v_max) << "\n";
  out << "w_max = " << format_double(base.control.w_max) << "\n";
  out << "dt = " << format_double(base.control.dt) << "\n";
  out << "replan_period = " << format_double(base.replan_period) << "\n";
  out << "step_budget = " << base.step_budget << "\n";
  out << "snapshot_milestones = ";
  for (size_t i = 0; i < spec.snapshot_milestones.size(); ++i) {
    if (i) out << " ";
    out << format_double(spec.snapshot_milestones[i]);
  }
  out << "\n";
  return out.str();
}

}  // namespace explore
