#include "dwe/beamform/das.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dwe/core/geometry.hpp"
#include "dwe/core/parallel.hpp"

namespace dwe {

void validate(const DASConfig& cfg) {
  if (!(cfg.f_number > 0)) throw std::invalid_argument("das: f_number must be positive");
  if (cfg.phase_rotation_frequency < 0) {
    throw std::invalid_argument("das: phase rotation frequency must be >= 0");
  }
}

IQImage das_beamform(const RawChannelData& baseband, const ProbeConfig& probe,
                     const ScanGrid& grid, const DASConfig& cfg) {
  if (baseband.domain != RawChannelData::Domain::baseband) {
    throw std::invalid_argument("das: input must be demodulated baseband");
  }
  validate(cfg);
  validate(grid);
  if (baseband.samples.rows != probe.element_count) {
    throw std::invalid_argument("das: channel count does not match the probe");
  }

  const double c = probe.sound_speed;
  const double fs = baseband.fs;
  const double f0 =
      cfg.phase_rotation_frequency > 0 ? cfg.phase_rotation_frequency : probe.center_frequency;
  const Vec2 vs = baseband.virtual_source;
  const double vs_norm = std::hypot(vs.x, vs.z);
  const int n_samples = baseband.samples.cols;
  const double x_first = probe.element_x(0);
  const double x_last = probe.element_x(probe.element_count - 1);

  IQImage out;
  out.grid = grid;
  out.samples = CMat(grid.n_depth, grid.n_angle);
  out.frame_time = baseband.timestamp;

  parallel_for(grid.n_depth, [&](int64_t i_begin, int64_t i_end) {
    for (int64_t i = i_begin; i < i_end; ++i) {
      auto* out_row = out.samples.row(static_cast<int>(i));
      for (int j = 0; j < grid.n_angle; ++j) {
        const Vec2 p = grid_to_cartesian(grid, static_cast<double>(i), static_cast<double>(j));
        const double range = std::hypot(p.x, p.z);
        const double tau_tx = (std::hypot(p.x - vs.x, p.z - vs.z) - vs_norm) / c;

        // Aperture grows with range; centred on the pixel, clamped to the array.
        const double half_ap = range / (2.0 * cfg.f_number);
        const double x_c = std::clamp(p.x, x_first, x_last);
        int e_lo = static_cast<int>(std::ceil((x_c - half_ap - x_first) / probe.pitch));
        int e_hi = static_cast<int>(std::floor((x_c + half_ap - x_first) / probe.pitch));
        e_lo = std::max(e_lo, 0);
        e_hi = std::min(e_hi, probe.element_count - 1);

        std::complex<double> acc{0.0, 0.0};
        double weight_sum = 0.0;
        for (int e = e_lo; e <= e_hi; ++e) {
          const double ex = probe.element_x(e);
          const double tau = tau_tx + std::hypot(p.x - ex, p.z) / c;
          const double sample_pos = (tau - baseband.t0) * fs;
          const int s0 = static_cast<int>(std::floor(sample_pos));
          if (s0 < 0 || s0 + 1 >= n_samples) continue;  // outside the record window
          const double frac = sample_pos - s0;
          const auto* ch = baseband.samples.row(e);
          const std::complex<double> val = (1.0 - frac) * ch[s0] + frac * ch[s0 + 1];
          double w = 1.0;
          if (cfg.apodization == Apodization::hann) {
            const double u = (ex - x_c) / half_ap;  // in [-1, 1] within the aperture
            w = 0.5 * (1.0 + std::cos(M_PI * std::clamp(u, -1.0, 1.0)));
          }
          const double phase = 2.0 * M_PI * f0 * tau;
          acc += w * val * std::complex<double>(std::cos(phase), std::sin(phase));
          weight_sum += w;
        }
        out_row[j] = weight_sum > 0.0 ? acc / weight_sum : std::complex<double>{0.0, 0.0};
      }
    }
  });

  return out;
}

IQImage compound(const std::vector<IQImage>& images) {
  if (images.empty()) throw std::invalid_argument("compound: empty image list");
  const ScanGrid& grid = images.front().grid;
  for (const auto& img : images) {
    if (!(img.grid == grid)) throw std::invalid_argument("compound: grid mismatch");
  }
  IQImage out;
  out.grid = grid;
  out.frame_time = images.front().frame_time;
  out.samples = CMat(grid.n_depth, grid.n_angle);
  const double inv_n = 1.0 / static_cast<double>(images.size());
  for (const auto& img : images) {
    for (size_t k = 0; k < out.samples.size(); ++k) out.samples.v[k] += img.samples.v[k];
  }
  for (auto& z : out.samples.v) z *= inv_n;
  return out;
}

RMat envelope(const IQImage& image) {
  RMat env(image.samples.rows, image.samples.cols);
  for (size_t k = 0; k < env.size(); ++k) env.v[k] = std::abs(image.samples.v[k]);
  return env;
}

RMat bmode(const IQImage& image, double dynamic_range_db) {
  if (!(dynamic_range_db > 0)) throw std::invalid_argument("bmode: dynamic range must be positive");
  RMat env = envelope(image);
  const double peak = *std::max_element(env.v.begin(), env.v.end());
  if (!(peak > 0)) throw std::invalid_argument("bmode: image is identically zero");
  for (auto& v : env.v) {
    const double db = v > 0 ? 20.0 * std::log10(v / peak) : -dynamic_range_db;
    v = std::clamp(db, -dynamic_range_db, 0.0);
  }
  return env;
}

}  // namespace dwe
