#pragma once

#include <memory>

#include "dwe/core/types.hpp"
#include "dwe/sim/medium.hpp"

namespace dwe {

// Parametric scatterer motion. All kinds compose over time, i.e.
// displacement(p, dt1 + dt2) equals chaining the two steps.
struct MotionModel {
  enum class Kind { none, rigid_rotation, translation, radial_contraction, sampled_field };

  Kind kind = Kind::none;
  Vec2 center{};                  // [m] rotation / contraction centre
  double omega = 0.0;             // [rad/s] rigid rotation rate (ccw in the x-z plane)
  Vec2 velocity{};                // [m/s] translation
  double contraction_rate = 0.0;  // [1/s] radial scale decays as exp(-rate*t)
  std::shared_ptr<const MotionField> field;  // sampled velocities (vector / interframe_dt)

  static MotionModel make_none() { return {}; }
  static MotionModel make_rotation(Vec2 center, double omega);
  static MotionModel make_translation(Vec2 velocity);
  static MotionModel make_contraction(Vec2 center, double rate);
  static MotionModel make_sampled(std::shared_ptr<const MotionField> field);
};

// Displacement of a material point at p over dt (dt may be negative for the
// analytic kinds; sampled fields extrapolate linearly).
Vec2 displacement(const MotionModel& model, Vec2 p, double dt);

// New medium with every scatterer moved by the model; reflectivities and
// labels are carried over unchanged.
ScattererMedium advance_medium(const ScattererMedium& medium, const MotionModel& model,
                               double dt);

// Exact model displacement sampled at every grid node (mask all-valid).
MotionField true_motion_on_grid(const MotionModel& model, const ScanGrid& grid, double dt);

// Same, at caller-provided points.
MotionField true_motion_at_points(const MotionModel& model, const std::vector<Vec2>& points,
                                  double dt);

}  // namespace dwe
