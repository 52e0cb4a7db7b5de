#include "dwe/sim/transmit.hpp"

#include <cmath>
#include <stdexcept>

#include "dwe/core/parallel.hpp"

namespace dwe {

void validate(const RawChannelData& d) {
  if (d.samples.rows < 1 || d.samples.cols < 1) {
    throw std::invalid_argument("channel data: empty sample matrix");
  }
  if (!(d.fs > 0)) throw std::invalid_argument("channel data: fs must be positive");
  for (const auto& z : d.samples.v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("channel data: non-finite sample");
    }
  }
}

GaussianPulse::GaussianPulse(double f0, double bandwidth, double fs, int oversample) {
  if (!(f0 > 0) || !(bandwidth > 0) || !(fs > 0) || oversample < 2) {
    throw std::invalid_argument("pulse: invalid parameters");
  }
  // -6 dB full bandwidth B of a Gaussian spectrum: sigma_f = B / (2 sqrt(2 ln 2)).
  const double sigma_f = bandwidth / (2.0 * std::sqrt(2.0 * std::log(2.0)));
  sigma_ = 1.0 / (2.0 * M_PI * sigma_f);
  half_duration_ = 4.0 * sigma_;
  const double step = 1.0 / (oversample * fs);
  inv_step_ = 1.0 / step;
  const auto n = static_cast<size_t>(std::ceil(2.0 * half_duration_ * inv_step_)) + 2;
  table_.resize(n);
  for (size_t k = 0; k < n; ++k) {
    const double t = -half_duration_ + static_cast<double>(k) * step;
    table_[k] = std::exp(-t * t / (2.0 * sigma_ * sigma_)) * std::cos(2.0 * M_PI * f0 * t);
  }
}

double default_virtual_source_depth(const ProbeConfig& probe) {
  // aperture / (2 tan(sector/2)) with a 90 degree sector
  return probe.aperture() / 2.0;
}

Vec2 virtual_source_position(double angle, double virtual_source_depth) {
  return {-virtual_source_depth * std::sin(angle), -virtual_source_depth * std::cos(angle)};
}

RawChannelData simulate_transmit(const ScattererMedium& medium, const ProbeConfig& probe,
                                 double angle, double virtual_source_depth, double depth_min,
                                 double depth_max, const SimOptions& options) {
  validate(medium);
  validate(probe);
  if (!(std::abs(angle) < M_PI / 2)) throw std::invalid_argument("transmit: |angle| must be < pi/2");
  if (!(virtual_source_depth > 0)) throw std::invalid_argument("transmit: vs depth must be positive");
  if (!(depth_max > depth_min) || depth_min < 0) throw std::invalid_argument("transmit: bad depth range");

  const double c = probe.sound_speed;
  const double fs = probe.sampling_frequency;
  const GaussianPulse pulse(probe.center_frequency, probe.bandwidth_high - probe.bandwidth_low, fs);

  const Vec2 vs = virtual_source_position(angle, virtual_source_depth);
  const double vs_norm = virtual_source_depth;

  // Record window: two-way times for the depth range plus slack for steering,
  // off-centre elements and the pulse tails.
  const double guard = (2.0 * virtual_source_depth + probe.aperture()) / c + pulse.half_duration();
  const double t_start = 2.0 * depth_min / c - guard;
  const double t_end = 2.0 * depth_max / c + guard;
  const int n_samples = static_cast<int>(std::ceil((t_end - t_start) * fs)) + 1;

  RawChannelData out;
  out.domain = RawChannelData::Domain::rf;
  out.samples = CMat(probe.element_count, n_samples);
  out.t0 = t_start;
  out.fs = fs;
  out.angle = angle;
  out.virtual_source = vs;

  const size_t n_scat = medium.positions.size();
  if (n_scat == 0) return out;  // empty medium: all-zero channels

  // Transmit-leg quantities are element independent.
  std::vector<double> tau_tx(n_scat), amp_tx(n_scat);
  for (size_t s = 0; s < n_scat; ++s) {
    const Vec2 p = medium.positions[s];
    const double d_tx = std::max(std::hypot(p.x - vs.x, p.z - vs.z), 1e-6);
    tau_tx[s] = (d_tx - vs_norm) / c;
    amp_tx[s] = medium.reflectivities[s] / std::sqrt(d_tx);
  }

  const double cos_cutoff = std::cos(options.directivity_cutoff);
  const double half = pulse.half_duration();

  parallel_for(probe.element_count, [&](int64_t e_begin, int64_t e_end) {
    std::vector<double> rf(static_cast<size_t>(n_samples));
    for (int64_t e = e_begin; e < e_end; ++e) {
      std::fill(rf.begin(), rf.end(), 0.0);
      const double ex = probe.element_x(static_cast<int>(e));
      for (size_t s = 0; s < n_scat; ++s) {
        const Vec2 p = medium.positions[s];
        const double dx = p.x - ex;
        const double d_rx = std::max(std::sqrt(dx * dx + p.z * p.z), 1e-6);
        double amp = amp_tx[s] / std::sqrt(d_rx);
        if (options.element_directivity) {
          const double cos_phi = p.z / d_rx;
          if (cos_phi < cos_cutoff) continue;
          amp *= cos_phi;
        }
        if (amp == 0.0) continue;
        const double tau = tau_tx[s] + d_rx / c;
        const double rel = tau - t_start;
        int n0 = static_cast<int>(std::ceil((rel - half) * fs));
        int n1 = static_cast<int>(std::floor((rel + half) * fs));
        if (n0 < 0) n0 = 0;
        if (n1 >= n_samples) n1 = n_samples - 1;
        for (int n = n0; n <= n1; ++n) {
          rf[static_cast<size_t>(n)] += amp * pulse(static_cast<double>(n) / fs - rel);
        }
      }
      auto* row = out.samples.row(static_cast<int>(e));
      for (int n = 0; n < n_samples; ++n) row[n] = {rf[static_cast<size_t>(n)], 0.0};
    }
  });

  return out;
}

RawChannelData demodulate(const RawChannelData& rf, const ProbeConfig& probe) {
  if (rf.domain != RawChannelData::Domain::rf) {
    throw std::invalid_argument("demodulate: input is already baseband");
  }
  validate(rf);
  const double fs = rf.fs;
  const double f0 = probe.center_frequency;
  const double cutoff = (probe.bandwidth_high - probe.bandwidth_low) / 2.0;

  // Linear-phase Hamming-windowed sinc, unit DC gain; centred convolution so
  // the group delay cancels.
  constexpr int kTaps = 63;
  constexpr int kMid = kTaps / 2;
  std::vector<double> taps(kTaps);
  double tap_sum = 0.0;
  for (int k = 0; k < kTaps; ++k) {
    const double m = k - kMid;
    const double x = 2.0 * cutoff / fs * m;
    const double sinc = x == 0.0 ? 1.0 : std::sin(M_PI * x) / (M_PI * x);
    const double win = 0.54 - 0.46 * std::cos(2.0 * M_PI * k / (kTaps - 1));
    taps[k] = 2.0 * cutoff / fs * sinc * win;
    tap_sum += taps[k];
  }
  for (auto& t : taps) t /= tap_sum;

  const int n_samples = rf.samples.cols;
  RawChannelData out = rf;
  out.domain = RawChannelData::Domain::baseband;

  parallel_for(rf.samples.rows, [&](int64_t e_begin, int64_t e_end) {
    std::vector<std::complex<double>> mixed(static_cast<size_t>(n_samples));
    for (int64_t e = e_begin; e < e_end; ++e) {
      const auto* in_row = rf.samples.row(static_cast<int>(e));
      for (int n = 0; n < n_samples; ++n) {
        const double t = rf.t0 + n / fs;
        const double phase = -2.0 * M_PI * f0 * t;
        // factor 2 restores the analytic-signal amplitude removed by mixing
        mixed[static_cast<size_t>(n)] =
            2.0 * in_row[n].real() * std::complex<double>(std::cos(phase), std::sin(phase));
      }
      auto* out_row = out.samples.row(static_cast<int>(e));
      for (int n = 0; n < n_samples; ++n) {
        std::complex<double> acc{0.0, 0.0};
        const int k0 = std::max(0, kMid - n);
        const int k1 = std::min(kTaps - 1, n_samples - 1 - n + kMid);
        for (int k = k0; k <= k1; ++k) {
          acc += taps[static_cast<size_t>(k)] * mixed[static_cast<size_t>(n + k - kMid)];
        }
        out_row[n] = acc;
      }
    }
  });

  return out;
}

}  // namespace dwe
