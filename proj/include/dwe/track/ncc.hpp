#pragma once

#include "dwe/core/mat.hpp"

namespace dwe {

// Normalized cross-correlation surface for integer lags (u, v) with
// |u| <= margin_i, |v| <= margin_j. Lag (u, v) compares a(r, c) against
// b(r + u, c + v) over their overlap, each window normalized by the overlap
// mean and variance.
struct NccSurface {
  bool valid = false;  // false when either block has (near) zero variance
  int margin_i = 0;
  int margin_j = 0;
  RMat values;  // (2*margin_i + 1) x (2*margin_j + 1)

  double at(int u, int v) const { return values(u + margin_i, v + margin_j); }
};

// FFT-accelerated NCC (product sums via FFT, normalization via running sums).
NccSurface ncc_map(const RMat& a, const RMat& b, int margin_i, int margin_j);

// Direct spatial-domain evaluation of the same definition; the reference the
// FFT path is checked against.
NccSurface ncc_map_direct(const RMat& a, const RMat& b, int margin_i, int margin_j);

// Parabolic three-point peak interpolation along one axis:
// delta = (c_m - c_p) / (2 (c_m - 2 c_0 + c_p)), clamped to [-0.5, 0.5];
// flat or sub-noise numerators give 0.
double parabolic_offset(double c_m, double c_0, double c_p);

// Offsets for both axes around the integer peak of a correlation surface.
struct SubpixelOffset {
  double di = 0.0;
  double dj = 0.0;
};
SubpixelOffset subpixel_peak(const NccSurface& surface, int peak_u, int peak_v);

}  // namespace dwe
