#include "dwe/sim/motion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dwe/core/geometry.hpp"

namespace dwe {

MotionModel MotionModel::make_rotation(Vec2 center, double omega) {
  MotionModel m;
  m.kind = Kind::rigid_rotation;
  m.center = center;
  m.omega = omega;
  return m;
}

MotionModel MotionModel::make_translation(Vec2 velocity) {
  MotionModel m;
  m.kind = Kind::translation;
  m.velocity = velocity;
  return m;
}

MotionModel MotionModel::make_contraction(Vec2 center, double rate) {
  MotionModel m;
  m.kind = Kind::radial_contraction;
  m.center = center;
  m.contraction_rate = rate;
  return m;
}

MotionModel MotionModel::make_sampled(std::shared_ptr<const MotionField> field) {
  if (!field) throw std::invalid_argument("sampled motion: null field");
  if (!(field->interframe_dt > 0)) throw std::invalid_argument("sampled motion: dt must be positive");
  validate(*field);
  MotionModel m;
  m.kind = Kind::sampled_field;
  m.field = std::move(field);
  return m;
}

Vec2 displacement(const MotionModel& model, Vec2 p, double dt) {
  switch (model.kind) {
    case MotionModel::Kind::none:
      return {0.0, 0.0};
    case MotionModel::Kind::rigid_rotation: {
      const double a = model.omega * dt;
      const double ca = std::cos(a);
      const double sa = std::sin(a);
      const Vec2 r = p - model.center;
      return {r.x * ca - r.z * sa - r.x, r.x * sa + r.z * ca - r.z};
    }
    case MotionModel::Kind::translation:
      return {model.velocity.x * dt, model.velocity.z * dt};
    case MotionModel::Kind::radial_contraction: {
      const double scale = std::exp(-model.contraction_rate * dt);
      const Vec2 r = p - model.center;
      return {(scale - 1.0) * r.x, (scale - 1.0) * r.z};
    }
    case MotionModel::Kind::sampled_field: {
      // Nearest valid measurement defines the local velocity.
      const MotionField& f = *model.field;
      double best = std::numeric_limits<double>::max();
      Vec2 v{0.0, 0.0};
      for (size_t k = 0; k < f.points.size(); ++k) {
        if (!f.mask[k]) continue;
        const double dx = f.points[k].x - p.x;
        const double dz = f.points[k].z - p.z;
        const double d2 = dx * dx + dz * dz;
        if (d2 < best) {
          best = d2;
          v = f.vectors[k];
        }
      }
      const double s = dt / f.interframe_dt;
      return {s * v.x, s * v.z};
    }
  }
  return {0.0, 0.0};
}

ScattererMedium advance_medium(const ScattererMedium& medium, const MotionModel& model,
                               double dt) {
  if (dt < 0) throw std::invalid_argument("advance_medium: dt must be >= 0");
  validate(medium);
  ScattererMedium out = medium;
  if (model.kind == MotionModel::Kind::none || dt == 0.0) return out;
  for (auto& p : out.positions) {
    p = p + displacement(model, p, dt);
  }
  return out;
}

MotionField true_motion_on_grid(const MotionModel& model, const ScanGrid& grid, double dt) {
  MotionField f;
  f.interframe_dt = dt;
  f.points.reserve(static_cast<size_t>(grid.n_depth) * grid.n_angle);
  for (int i = 0; i < grid.n_depth; ++i) {
    for (int j = 0; j < grid.n_angle; ++j) {
      f.points.push_back(grid_to_cartesian(grid, i, j));
    }
  }
  f.vectors.reserve(f.points.size());
  for (const auto& p : f.points) f.vectors.push_back(displacement(model, p, dt));
  f.mask.assign(f.points.size(), 1);
  return f;
}

MotionField true_motion_at_points(const MotionModel& model, const std::vector<Vec2>& points,
                                  double dt) {
  MotionField f;
  f.interframe_dt = dt;
  f.points = points;
  f.vectors.reserve(points.size());
  for (const auto& p : points) f.vectors.push_back(displacement(model, p, dt));
  f.mask.assign(points.size(), 1);
  return f;
}

}  // namespace dwe
