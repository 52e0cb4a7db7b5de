#pragma once

#include <vector>

#include "dwe/core/types.hpp"

namespace dwe {

struct TrackConfig {
  std::vector<int> window_sizes = {32, 16, 8};  // [px] coarse to fine
  double overlap = 0.5;                         // window overlap fraction
  std::vector<int> search_margins = {10, 6, 3}; // [px] per level
  double min_correlation = 0.3;                 // validity gate on the NCC peak
};

void validate(const TrackConfig& cfg);

// Pixel-space result of one pyramid pass; used by the tests and converted to
// metres by track_pair.
struct PixelField {
  std::vector<double> center_i, center_j;  // window centres, fractional pixels
  std::vector<double> di, dj;              // displacement a -> b in pixels
  std::vector<uint8_t> mask;
  int lattice_rows = 0, lattice_cols = 0;
};

PixelField track_pair_pixels(const RMat& env_a, const RMat& env_b, const TrackConfig& cfg);

// Coarse-to-fine block matching between two consecutive frames on one grid:
// envelope images, FFT NCC per overlapping window, parabolic subpixel fit,
// bilinear warping between pyramid levels. Displacements are reported in
// Cartesian metres at the window centres.
MotionField track_pair(const IQImage& frame_a, const IQImage& frame_b, const TrackConfig& cfg);

// track_pair over consecutive pairs.
std::vector<MotionField> track_sequence(const std::vector<IQImage>& frames,
                                        const TrackConfig& cfg);

}  // namespace dwe
