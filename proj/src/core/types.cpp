#include "dwe/core/types.hpp"

#include <cmath>
#include <stdexcept>

namespace dwe {

void validate(const ProbeConfig& p) {
  if (p.element_count < 2) throw std::invalid_argument("probe: element_count must be >= 2");
  if (p.pitch <= 0 || p.kerf <= 0 || p.center_frequency <= 0 || p.sampling_frequency <= 0 ||
      p.sound_speed <= 0 || p.bandwidth_low <= 0 || p.bandwidth_high <= 0) {
    throw std::invalid_argument("probe: all quantities must be strictly positive");
  }
  if (p.kerf >= p.pitch) throw std::invalid_argument("probe: kerf must be smaller than pitch");
  if (p.center_frequency < p.bandwidth_low || p.center_frequency > p.bandwidth_high) {
    throw std::invalid_argument("probe: bandwidth must contain the center frequency");
  }
}

void validate(const TransmitScheme& s) {
  if (s.angles.empty()) throw std::invalid_argument("scheme: angles must be non-empty");
  for (double a : s.angles) {
    if (!(std::abs(a) < M_PI / 2)) {
      throw std::invalid_argument("scheme: angles must lie in (-pi/2, pi/2)");
    }
  }
  if (!(s.prf > 0)) throw std::invalid_argument("scheme: prf must be positive");
}

void validate(const ScanGrid& g) {
  if (g.n_depth < 2 || g.n_angle < 2) throw std::invalid_argument("grid: need at least 2x2 nodes");
  if (g.depth_min < 0) throw std::invalid_argument("grid: depth_min must be >= 0");
  if (!(g.depth_max > g.depth_min)) throw std::invalid_argument("grid: empty depth range");
  if (!(g.angle_max > g.angle_min)) throw std::invalid_argument("grid: empty angle range");
  if (g.angle_min <= -M_PI / 2 || g.angle_max >= M_PI / 2) {
    throw std::invalid_argument("grid: angle range must lie within (-pi/2, pi/2)");
  }
}

ScanGrid default_grid(const ProbeConfig& probe) {
  ScanGrid g;
  const double step = probe.wavelength() / 2.0;
  const int n = 1 + static_cast<int>(std::ceil((g.depth_max - g.depth_min) / step));
  g.n_depth = n;
  g.n_angle = n;
  return g;
}

void validate(const IQImage& img) {
  validate(img.grid);
  if (img.samples.rows != img.grid.n_depth || img.samples.cols != img.grid.n_angle) {
    throw std::invalid_argument("iq image: sample dimensions do not match the grid");
  }
  for (const auto& z : img.samples.v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("iq image: non-finite sample");
    }
  }
}

void validate(const MotionField& f) {
  if (f.points.size() != f.vectors.size() || f.points.size() != f.mask.size()) {
    throw std::invalid_argument("motion field: points/vectors/mask length mismatch");
  }
  for (size_t i = 0; i < f.vectors.size(); ++i) {
    if (f.mask[i] && (!std::isfinite(f.vectors[i].x) || !std::isfinite(f.vectors[i].z))) {
      throw std::invalid_argument("motion field: non-finite valid vector");
    }
  }
}

}  // namespace dwe
