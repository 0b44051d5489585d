#pragma once

#include <stdexcept>

#include "explore/costmap.hpp"

namespace explore {

struct SafetyViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnicycleState {
  Vec2 position;
  double heading = 0.0;     // radians in [-pi, pi)
  double path_param = 0.0;  // s in [0, 1], non-decreasing within one path
};

struct ControlParams {
  double kappa_v = 1.0;   // linear velocity gain, 1/s
  double kappa_w = 2.0;   // angular velocity gain, 1/s
  double k_safety = 1.0;  // path parameter gain on predicted clearance
  double k_s = 1.0;       // path parameter gain on remaining parameter
  double v_max = 1.0;     // m/s
  double w_max = 1.0;     // rad/s
  double dt = 0.1;        // s
};

struct ControlCommand {
  double v = 0.0;
  double w = 0.0;
  double s_rate = 0.0;
  double predicted_clearance = 0.0;  // dist_to_unsafe of the motion prediction
};

/// Region guaranteed to contain the closed-loop position trajectory toward a
/// fixed target: the convex hull of the current position and the disc around
/// the target with the lateral-offset radius when the target is ahead, or the
/// disc around the target through the current position otherwise.
struct MotionPrediction {
  bool forward = true;  // hull-of-point-and-disc branch
  Vec2 position;        // hull apex (robot position); unused for the disc branch
  Vec2 target;
  double radius = 0.0;

  bool contains(Vec2 p) const;
};

MotionPrediction motion_prediction(const UnicycleState& state, Vec2 target);

/// Minimum distance-transform value over samples of the region's boundary and
/// spine (spacing <= resolution/2); 0 as soon as any sample leaves the safe
/// control space.
double dist_to_unsafe(const MotionPrediction& region, const SafeSpaces& spaces,
                      double resolution);

/// Safe persistent path-following law: chase p(s) with clipped forward
/// velocity and bearing feedback, and advance s at the rate allowed by the
/// predicted clearance and the remaining parameter. Throws
/// SafetyViolationError when the state is outside the control space.
ControlCommand control_law(const UnicycleState& state, const PathPlan& path,
                           const SafeSpaces& spaces, const ControlParams& params,
                           double resolution);

/// Explicit Euler integration of a held command over dt.
UnicycleState integrate(const UnicycleState& state, const ControlCommand& cmd,
                        double dt);

/// Explicit Euler step of the closed-loop dynamics over params.dt.
UnicycleState step(const UnicycleState& state, const PathPlan& path,
                   const SafeSpaces& spaces, const ControlParams& params,
                   double resolution);

}  // namespace explore
