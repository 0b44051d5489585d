#include "explore/unicycle.hpp"

#include <algorithm>
#include <cmath>

namespace explore {

namespace {

double clearance_at(const SafeSpaces& spaces, Vec2 p, double resolution) {
  const Cell c = cell_at(p, resolution);
  if (!spaces.in_control(c)) return 0.0;
  return spaces.control_clearance_m.at(c);
}

}  // namespace

bool MotionPrediction::contains(Vec2 p) const {
  const double eps = 1e-9;
  if ((p - target).norm() <= radius + eps) return true;
  if (!forward) return false;
  // Hull of the apex and the disc = disc plus the triangle formed by the
  // apex and the two tangent points.
  const Vec2 d = target - position;
  const double dist = d.norm();
  if (dist <= radius) return (p - position).norm() <= eps;
  const double base = std::atan2(d.y, d.x);
  const double half = std::asin(std::min(1.0, radius / dist));
  const double tangent_len = std::sqrt(std::max(0.0, dist * dist - radius * radius));
  const Vec2 t1 = position + tangent_len * unit_from_angle(base + half);
  const Vec2 t2 = position + tangent_len * unit_from_angle(base - half);
  const auto side = [&](Vec2 a, Vec2 b) {
    return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  };
  const double scale = eps * (1.0 + dist);
  const double s1 = side(position, t1);
  const double s2 = side(t1, t2);
  const double s3 = side(t2, position);
  const bool all_left = s1 >= -scale && s2 >= -scale && s3 >= -scale;
  const bool all_right = s1 <= scale && s2 <= scale && s3 <= scale;
  return all_left || all_right;
}

MotionPrediction motion_prediction(const UnicycleState& state, Vec2 target) {
  const Vec2 fwd = unit_from_angle(state.heading);
  const Vec2 lat{-fwd.y, fwd.x};
  const Vec2 delta = target - state.position;
  MotionPrediction region;
  region.position = state.position;
  region.target = target;
  if (fwd.dot(delta) >= 0.0) {
    region.forward = true;
    region.radius = std::abs(lat.dot(delta));
  } else {
    region.forward = false;
    region.radius = delta.norm();
  }
  return region;
}

double dist_to_unsafe(const MotionPrediction& region, const SafeSpaces& spaces,
                      double resolution) {
  const double spacing = resolution / 2.0;
  double min_clearance = std::numeric_limits<double>::infinity();
  const auto sample = [&](Vec2 p) {
    min_clearance = std::min(min_clearance, clearance_at(spaces, p, resolution));
  };
  const auto sample_segment = [&](Vec2 a, Vec2 b) {
    const double len = (b - a).norm();
    const int n = std::max(1, static_cast<int>(std::ceil(len / spacing)));
    for (int i = 0; i <= n; ++i) sample(a + (b - a) * (static_cast<double>(i) / n));
  };
  const auto sample_circle = [&](Vec2 center, double radius) {
    if (radius <= 0.0) {
      sample(center);
      return;
    }
    const int n = std::max(8, static_cast<int>(std::ceil(2.0 * M_PI * radius / spacing)));
    for (int i = 0; i < n; ++i)
      sample(center + radius * unit_from_angle(2.0 * M_PI * i / n));
  };

  if (region.forward) {
    sample_segment(region.position, region.target);  // spine
    sample_circle(region.target, region.radius);
    if (region.radius > 0.0) {
      // Tangent lines from the apex to the disc bound the hull.
      const Vec2 d = region.target - region.position;
      const double dist = d.norm();
      if (dist > region.radius) {
        const double angle = std::atan2(d.y, d.x);
        const double half = std::asin(std::min(1.0, region.radius / dist));
        const double tangent_len = std::sqrt(std::max(0.0, dist * dist - region.radius * region.radius));
        sample_segment(region.position,
                       region.position + tangent_len * unit_from_angle(angle + half));
        sample_segment(region.position,
                       region.position + tangent_len * unit_from_angle(angle - half));
      }
    }
  } else {
    sample_segment(region.position, region.target);  // spine
    sample_circle(region.target, region.radius);
  }
  return min_clearance;
}

ControlCommand control_law(const UnicycleState& state, const PathPlan& path,
                           const SafeSpaces& spaces, const ControlParams& params,
                           double resolution) {
  const Cell c = cell_at(state.position, resolution);
  if (!spaces.in_control(c))
    throw SafetyViolationError("control_law: robot position left the safe control space");

  const Vec2 target = path.point_at(state.path_param);
  const Vec2 fwd = unit_from_angle(state.heading);
  const Vec2 lat{-fwd.y, fwd.x};
  const Vec2 delta = target - state.position;
  const double e_fwd = fwd.dot(delta);
  const double e_lat = lat.dot(delta);

  ControlCommand cmd;
  cmd.v = std::min(params.v_max, params.kappa_v * std::max(0.0, e_fwd));
  const double bearing_error = (e_fwd == 0.0 && e_lat == 0.0) ? 0.0 : std::atan2(e_lat, e_fwd);
  cmd.w = std::clamp(params.kappa_w * bearing_error, -params.w_max, params.w_max);

  const MotionPrediction prediction = motion_prediction(state, target);
  cmd.predicted_clearance = dist_to_unsafe(prediction, spaces, resolution);
  cmd.s_rate = std::min(params.k_safety * cmd.predicted_clearance,
                        params.k_s * (1.0 - state.path_param));

  // Discrete governor guard: the continuous law keeps the prediction region
  // strictly clear of the unsafe set at all times, but a full Euler step of s
  // can overshoot around corners. Halve the advance until the predicted
  // region for the stepped parameter stays clear.
  for (int attempt = 0; cmd.s_rate > 0.0; ++attempt) {
    const double s_next =
        std::min(1.0, state.path_param + params.dt * cmd.s_rate);
    const MotionPrediction stepped = motion_prediction(state, path.point_at(s_next));
    if (dist_to_unsafe(stepped, spaces, resolution) > 0.0) break;
    cmd.s_rate = attempt < 4 ? 0.5 * cmd.s_rate : 0.0;
  }
  return cmd;
}

UnicycleState integrate(const UnicycleState& state, const ControlCommand& cmd,
                        double dt) {
  UnicycleState next;
  next.position = state.position + dt * cmd.v * unit_from_angle(state.heading);
  next.heading = wrap_angle(state.heading + dt * cmd.w);
  next.path_param = std::clamp(state.path_param + dt * cmd.s_rate, 0.0, 1.0);
  return next;
}

UnicycleState step(const UnicycleState& state, const PathPlan& path,
                   const SafeSpaces& spaces, const ControlParams& params,
                   double resolution) {
  return integrate(state, control_law(state, path, spaces, params, resolution),
                   params.dt);
}

}  // namespace explore
