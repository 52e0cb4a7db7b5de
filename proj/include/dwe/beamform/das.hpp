#pragma once

#include <vector>

#include "dwe/core/types.hpp"
#include "dwe/sim/transmit.hpp"

namespace dwe {

enum class Apodization { rectangular, hann };

struct DASConfig {
  double f_number = 1.0;
  Apodization apodization = Apodization::hann;  // receive side only
  // carrier used for the phase rotation; 0 selects the probe centre frequency
  double phase_rotation_frequency = 0.0;
};

void validate(const DASConfig& cfg);

// Delay-and-sum on baseband data: per pixel, apodized linear interpolation of
// each in-aperture channel at the two-way delay, rotated by exp(+j 2 pi f0 tau).
// Delays outside the record window contribute zero.
IQImage das_beamform(const RawChannelData& baseband, const ProbeConfig& probe,
                     const ScanGrid& grid, const DASConfig& cfg = {});

// Element-wise complex mean of a stack sharing one grid.
IQImage compound(const std::vector<IQImage>& images);

// Element-wise modulus.
RMat envelope(const IQImage& image);

// 20 log10(envelope / max envelope), clipped to [-dynamic_range_db, 0].
RMat bmode(const IQImage& image, double dynamic_range_db = 60.0);

}  // namespace dwe
