#pragma once

#include <cstdint>
#include <vector>

#include "dwe/core/mat.hpp"
#include "dwe/core/types.hpp"

namespace dwe {

// Point-scatterer medium. region_labels is optional (empty or one per point).
struct ScattererMedium {
  std::vector<Vec2> positions;
  std::vector<double> reflectivities;
  std::vector<int32_t> region_labels;
};

void validate(const ScattererMedium& m);

struct TemplateMediumParams {
  double density_per_lambda2 = 10.0;  // scatterers per squared wavelength
  double gamma = 2.2;                 // template gamma-compression constant
  double depth_margin = 1.5e-3;       // [m] guard band sampled beyond the sector
  double angle_margin = 0.02;         // [rad]
};

// Scatterers uniformly distributed over the sector (plus guard margins) with
// reflectivities (I/255)^(1/gamma) * N(0,1), I bilinearly sampled from the
// grayscale template stretched over the sector.
ScattererMedium make_medium_from_template(const Mat<uint8_t>& tpl, const ScanGrid& grid,
                                          const TemplateMediumParams& params, double wavelength,
                                          uint64_t seed);

struct DiskPhantomParams {
  double radius = 0.022;       // [m]
  Vec2 center = {0.0, 0.045};  // [m] disk centre in the imaging plane
  std::vector<double> cyst_radii;    // [m]
  std::vector<Vec2> cyst_centers;    // [m] relative to the disk centre
  double density_per_lambda2 = 10.0;
};

void validate(const DiskPhantomParams& p);

// Tissue-mimicking disk with anechoic cysts: uniform scatterers inside the
// disk, none inside any cyst, reflectivities standard normal.
ScattererMedium make_disk_phantom(const DiskPhantomParams& params, double wavelength,
                                  uint64_t seed);

}  // namespace dwe
