#pragma once

#include <vector>

#include "dwe/core/mat.hpp"
#include "dwe/core/types.hpp"

namespace dwe {

// Pixel sets for contrast metrics; cyst and background must be disjoint and
// non-empty.
struct RegionMasks {
  Mat<uint8_t> cyst;
  Mat<uint8_t> background;
};

void validate(const RegionMasks& r);

// Peak signal-to-noise ratio in dB; identical inputs return +infinity.
double psnr(const RMat& estimate, const RMat& reference);

struct SsimOptions {
  bool windowed = false;  // 11x11 sliding-window variant; default is global
  int window = 11;
};

// Structural similarity with C1 = (0.01 L)^2, C2 = (0.03 L)^2, L = max(reference).
double ssim(const RMat& estimate, const RMat& reference, const SsimOptions& opt = {});

// 20 log10(|mu_c - mu_b| / sqrt(var_c + var_b)); equal means return -infinity.
double cnr(const RMat& image, const RegionMasks& regions);

// 1 - sum_k min(p_c(k), p_b(k)) over equal-width bins spanning both regions.
double gcnr(const RMat& image, const RegionMasks& regions, int histogram_bins = 256);

// Euclidean endpoint error between two displacement vectors. [m]
double epe(Vec2 estimated, Vec2 truth);

// Mean EPE over the intersection of both validity masks. [m]
double mepe(const MotionField& estimated, const MotionField& truth);

// Relative angular velocity error of a tracked rotation: per-point angular
// velocity from the tangential displacement component, averaged over valid
// points at radius >= min_radius from the centre.
double rave(const MotionField& estimated, Vec2 center, double omega_true, double min_radius);

// Mean endpoint difference between two estimated fields (comparison measure).
double mepd(const MotionField& a, const MotionField& b);

// Doppler-Nyquist velocity limit of motion-compensated compounding:
// c * PRF / (8 f0). [m/s]
double moco_nyquist_velocity(const ProbeConfig& probe, double prf);

}  // namespace dwe
