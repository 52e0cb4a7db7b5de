#include "dwe/core/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace dwe {

Vec2 grid_to_cartesian(const ScanGrid& grid, double i, double j) {
  const double depth = grid.depth_min + i * grid.depth_step();
  const double angle = grid.angle_min + j * grid.angle_step();
  return {depth * std::sin(angle), depth * std::cos(angle)};
}

Vec2 grid_to_cartesian(const ScanGrid& grid, int i, int j) {
  if (i < 0 || i >= grid.n_depth || j < 0 || j >= grid.n_angle) {
    throw std::out_of_range("grid_to_cartesian: index outside grid");
  }
  return grid_to_cartesian(grid, static_cast<double>(i), static_cast<double>(j));
}

void cartesian_to_grid(const ScanGrid& grid, Vec2 p, double& i, double& j) {
  const double depth = std::hypot(p.x, p.z);
  const double angle = std::atan2(p.x, p.z);
  i = (depth - grid.depth_min) / grid.depth_step();
  j = (angle - grid.angle_min) / grid.angle_step();
}

std::vector<double> make_evenly_spaced_angles(int n, double half_span) {
  if (n < 1) throw std::invalid_argument("make_evenly_spaced_angles: n must be >= 1");
  if (n == 1) return {0.0};
  std::vector<double> angles(n);
  const double step = 2.0 * half_span / (n - 1);
  for (int k = 0; k < n; ++k) angles[k] = -half_span + k * step;
  return angles;
}

}  // namespace dwe
