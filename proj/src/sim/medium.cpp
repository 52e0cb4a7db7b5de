#include "dwe/sim/medium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dwe/core/rng.hpp"

namespace dwe {

void validate(const ScattererMedium& m) {
  if (m.positions.size() != m.reflectivities.size()) {
    throw std::invalid_argument("medium: positions/reflectivities length mismatch");
  }
  if (!m.region_labels.empty() && m.region_labels.size() != m.positions.size()) {
    throw std::invalid_argument("medium: region_labels length mismatch");
  }
}

namespace {

// Bilinear template lookup with the image stretched over the sector; indices
// are clamped so guard-margin scatterers read the sector edge.
double sample_template(const Mat<uint8_t>& tpl, const ScanGrid& grid, Vec2 pos) {
  const double depth = std::hypot(pos.x, pos.z);
  const double angle = std::atan2(pos.x, pos.z);
  double r = (depth - grid.depth_min) / (grid.depth_max - grid.depth_min) * (tpl.rows - 1);
  double c = (angle - grid.angle_min) / (grid.angle_max - grid.angle_min) * (tpl.cols - 1);
  r = std::clamp(r, 0.0, static_cast<double>(tpl.rows - 1));
  c = std::clamp(c, 0.0, static_cast<double>(tpl.cols - 1));
  const int r0 = std::min(static_cast<int>(r), tpl.rows - 2 >= 0 ? tpl.rows - 2 : 0);
  const int c0 = std::min(static_cast<int>(c), tpl.cols - 2 >= 0 ? tpl.cols - 2 : 0);
  const double fr = r - r0;
  const double fc = c - c0;
  const int r1 = std::min(r0 + 1, tpl.rows - 1);
  const int c1 = std::min(c0 + 1, tpl.cols - 1);
  return (1 - fr) * ((1 - fc) * tpl(r0, c0) + fc * tpl(r0, c1)) +
         fr * ((1 - fc) * tpl(r1, c0) + fc * tpl(r1, c1));
}

}  // namespace

ScattererMedium make_medium_from_template(const Mat<uint8_t>& tpl, const ScanGrid& grid,
                                          const TemplateMediumParams& params, double wavelength,
                                          uint64_t seed) {
  validate(grid);
  if (tpl.rows < 1 || tpl.cols < 1) throw std::invalid_argument("template: empty image");
  if (!(params.density_per_lambda2 > 0)) throw std::invalid_argument("template: density must be positive");
  if (!(params.gamma > 0)) throw std::invalid_argument("template: gamma must be positive");
  if (!(wavelength > 0)) throw std::invalid_argument("template: wavelength must be positive");

  const double r_lo = std::max(0.0, grid.depth_min - params.depth_margin);
  const double r_hi = grid.depth_max + params.depth_margin;
  const double a_lo = grid.angle_min - params.angle_margin;
  const double a_hi = grid.angle_max + params.angle_margin;
  const double area = 0.5 * (a_hi - a_lo) * (r_hi * r_hi - r_lo * r_lo);
  if (!(area > 0)) throw std::invalid_argument("template: empty sector");

  Rng rng(seed);
  const double mean_count = area * params.density_per_lambda2 / (wavelength * wavelength);
  const uint64_t count = rng.poisson(mean_count);

  ScattererMedium medium;
  medium.positions.reserve(count);
  medium.reflectivities.reserve(count);
  const double inv_gamma = 1.0 / params.gamma;
  for (uint64_t k = 0; k < count; ++k) {
    // Uniform over the annular sector: radius via inverse-cdf, angle uniform.
    const double r = std::sqrt(r_lo * r_lo + rng.uniform() * (r_hi * r_hi - r_lo * r_lo));
    const double a = rng.uniform(a_lo, a_hi);
    const Vec2 pos{r * std::sin(a), r * std::cos(a)};
    const double intensity = sample_template(tpl, grid, pos);
    const double rc = std::pow(intensity / 255.0, inv_gamma) * rng.normal();
    medium.positions.push_back(pos);
    medium.reflectivities.push_back(rc);
  }
  return medium;
}

void validate(const DiskPhantomParams& p) {
  if (!(p.radius > 0)) throw std::invalid_argument("disk: radius must be positive");
  if (!(p.density_per_lambda2 > 0)) throw std::invalid_argument("disk: density must be positive");
  if (p.cyst_radii.size() != p.cyst_centers.size()) {
    throw std::invalid_argument("disk: cyst radii/centers length mismatch");
  }
  for (size_t k = 0; k < p.cyst_radii.size(); ++k) {
    if (!(p.cyst_radii[k] > 0)) throw std::invalid_argument("disk: cyst radius must be positive");
    const double dist = std::hypot(p.cyst_centers[k].x, p.cyst_centers[k].z);
    if (dist + p.cyst_radii[k] > p.radius) {
      throw std::invalid_argument("disk: cyst extends outside the disk");
    }
  }
}

ScattererMedium make_disk_phantom(const DiskPhantomParams& params, double wavelength,
                                  uint64_t seed) {
  validate(params);
  if (!(wavelength > 0)) throw std::invalid_argument("disk: wavelength must be positive");

  Rng rng(seed);
  const double area = M_PI * params.radius * params.radius;
  const uint64_t count = rng.poisson(area * params.density_per_lambda2 / (wavelength * wavelength));

  ScattererMedium medium;
  medium.positions.reserve(count);
  medium.reflectivities.reserve(count);
  for (uint64_t k = 0; k < count; ++k) {
    const double r = params.radius * std::sqrt(rng.uniform());
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const Vec2 rel{r * std::cos(phi), r * std::sin(phi)};
    const double rc = rng.normal();
    bool in_cyst = false;
    for (size_t c = 0; c < params.cyst_radii.size(); ++c) {
      const double d = std::hypot(rel.x - params.cyst_centers[c].x, rel.z - params.cyst_centers[c].z);
      if (d < params.cyst_radii[c]) {
        in_cyst = true;
        break;
      }
    }
    if (in_cyst) continue;  // anechoic: dropped, not resampled
    medium.positions.push_back(params.center + rel);
    medium.reflectivities.push_back(rc);
  }
  return medium;
}

}  // namespace dwe
