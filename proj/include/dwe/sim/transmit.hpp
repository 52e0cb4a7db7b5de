#pragma once

#include <vector>

#include "dwe/core/mat.hpp"
#include "dwe/core/types.hpp"
#include "dwe/sim/medium.hpp"

namespace dwe {

// Per-transmit element data, real RF or complex baseband after demodulation.
struct RawChannelData {
  enum class Domain { rf, baseband };

  Domain domain = Domain::rf;
  CMat samples;     // element x time sample (rf keeps imag = 0)
  double t0 = 0.0;  // [s] time of the first sample
  double fs = 0.0;  // [Hz]
  double angle = 0.0;      // [rad] steering tilt of this transmit
  Vec2 virtual_source{};   // [m]
  double timestamp = 0.0;  // [s] acquisition time within the sequence
};

void validate(const RawChannelData& d);

struct SimOptions {
  bool element_directivity = true;      // cosine receive directivity
  double directivity_cutoff = 1.3962634015954636;  // [rad] hard cutoff (80 deg)
};

// Two-way Gaussian-modulated cosine pulse at the probe centre frequency, with
// the -6 dB width matching the probe bandwidth. Evaluated through an
// oversampled lookup table.
class GaussianPulse {
 public:
  GaussianPulse(double f0, double bandwidth, double fs, int oversample = 64);

  double half_duration() const { return half_duration_; }
  double sigma() const { return sigma_; }

  // Linear-interpolated pulse value; zero outside +/- half_duration.
  double operator()(double t) const {
    const double u = (t + half_duration_) * inv_step_;
    if (u < 0.0) return 0.0;
    const auto idx = static_cast<size_t>(u);
    if (idx + 1 >= table_.size()) return 0.0;
    const double frac = u - static_cast<double>(idx);
    return table_[idx] + frac * (table_[idx + 1] - table_[idx]);
  }

 private:
  double sigma_ = 0.0;
  double half_duration_ = 0.0;
  double inv_step_ = 0.0;
  std::vector<double> table_;
};

// Virtual source placed behind the array on the steering line; depth chosen
// for a 90 degree insonified sector.
double default_virtual_source_depth(const ProbeConfig& probe);
Vec2 virtual_source_position(double angle, double virtual_source_depth);

// Single diverging-wave transmit through the point-scatterer model: exact
// two-way delays from the virtual source, 1/sqrt(r) spreading both ways,
// optional cosine element directivity, sampled at probe.sampling_frequency.
// The record window covers two-way times for [depth_min, depth_max].
RawChannelData simulate_transmit(const ScattererMedium& medium, const ProbeConfig& probe,
                                 double angle, double virtual_source_depth, double depth_min,
                                 double depth_max, const SimOptions& options = {});

// RF -> complex baseband: mix down at f0 and low-pass with a linear-phase FIR
// (cutoff = bandwidth/2) applied as a centred same-size convolution.
RawChannelData demodulate(const RawChannelData& rf, const ProbeConfig& probe);

}  // namespace dwe
