#include "dwe/track/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dwe/beamform/das.hpp"
#include "dwe/core/geometry.hpp"
#include "dwe/core/parallel.hpp"
#include "dwe/track/ncc.hpp"

namespace dwe {

void validate(const TrackConfig& cfg) {
  if (cfg.window_sizes.empty()) throw std::invalid_argument("track: no window sizes");
  for (size_t l = 0; l < cfg.window_sizes.size(); ++l) {
    if (cfg.window_sizes[l] < 4) throw std::invalid_argument("track: window size too small");
    if (l > 0 && cfg.window_sizes[l] >= cfg.window_sizes[l - 1]) {
      throw std::invalid_argument("track: window sizes must be strictly decreasing");
    }
  }
  if (!(cfg.overlap >= 0.0 && cfg.overlap < 1.0)) {
    throw std::invalid_argument("track: overlap must be in [0, 1)");
  }
  if (cfg.search_margins.size() != cfg.window_sizes.size()) {
    throw std::invalid_argument("track: one search margin per level required");
  }
  for (int m : cfg.search_margins) {
    if (m < 1) throw std::invalid_argument("track: search margin must be >= 1");
  }
  if (!(cfg.min_correlation >= 0.0 && cfg.min_correlation <= 1.0)) {
    throw std::invalid_argument("track: min_correlation must be in [0, 1]");
  }
}

namespace {

struct Lattice {
  std::vector<int> starts_i, starts_j;
  int window = 0;
};

std::vector<int> make_starts(int extent, int window, int stride) {
  std::vector<int> starts;
  for (int s = 0; s + window <= extent; s += stride) starts.push_back(s);
  if (starts.empty()) starts.push_back(std::max(0, (extent - window) / 2));
  return starts;
}

Lattice make_lattice(int rows, int cols, int window, double overlap) {
  const int stride = std::max(1, static_cast<int>(std::lround(window * (1.0 - overlap))));
  return {make_starts(rows, window, stride), make_starts(cols, window, stride), window};
}

double bilinear(const RMat& img, double fi, double fj) {
  if (fi < 0.0 || fj < 0.0 || fi > img.rows - 1 || fj > img.cols - 1) return 0.0;
  int i0 = static_cast<int>(fi);
  int j0 = static_cast<int>(fj);
  if (i0 == img.rows - 1) --i0;
  if (j0 == img.cols - 1) --j0;
  if (i0 < 0) i0 = 0;
  if (j0 < 0) j0 = 0;
  const double di = fi - i0;
  const double dj = fj - j0;
  return (1 - di) * ((1 - dj) * img(i0, j0) + dj * img(i0, j0 + 1)) +
         di * ((1 - dj) * img(i0 + 1, j0) + dj * img(i0 + 1, j0 + 1));
}

// Bilinear interpolation over a window-centre lattice with clamped edges.
double interp_lattice(const std::vector<double>& values, const Lattice& lat, int n_j,
                      double ci, double cj) {
  auto locate = [](const std::vector<int>& starts, int window, double c, int& k0, double& f) {
    const double first = starts.front() + (window - 1) / 2.0;
    const double stride = starts.size() > 1 ? static_cast<double>(starts[1] - starts[0]) : 1.0;
    double u = (c - first) / stride;
    u = std::clamp(u, 0.0, static_cast<double>(starts.size() - 1));
    k0 = std::min(static_cast<int>(u), static_cast<int>(starts.size()) - 2);
    if (k0 < 0) k0 = 0;
    f = starts.size() > 1 ? u - k0 : 0.0;
  };
  int i0, j0;
  double fi, fj;
  locate(lat.starts_i, lat.window, ci, i0, fi);
  locate(lat.starts_j, lat.window, cj, j0, fj);
  const int i1 = std::min<int>(i0 + 1, static_cast<int>(lat.starts_i.size()) - 1);
  const int j1 = std::min<int>(j0 + 1, static_cast<int>(lat.starts_j.size()) - 1);
  auto v = [&](int i, int j) { return values[static_cast<size_t>(i) * n_j + j]; };
  return (1 - fi) * ((1 - fj) * v(i0, j0) + fj * v(i0, j1)) +
         fi * ((1 - fj) * v(i1, j0) + fj * v(i1, j1));
}

}  // namespace

PixelField track_pair_pixels(const RMat& env_a, const RMat& env_b, const TrackConfig& cfg) {
  validate(cfg);
  if (!env_a.same_shape(env_b)) throw std::invalid_argument("track: frame size mismatch");

  Lattice prev_lat;
  std::vector<double> prev_di, prev_dj;
  std::vector<uint8_t> prev_mask;

  for (size_t level = 0; level < cfg.window_sizes.size(); ++level) {
    const Lattice lat = make_lattice(env_a.rows, env_a.cols, cfg.window_sizes[level], cfg.overlap);
    const int n_i = static_cast<int>(lat.starts_i.size());
    const int n_j = static_cast<int>(lat.starts_j.size());
    const int margin = cfg.search_margins[level];
    const int window = lat.window;

    // Prior displacement at the new window centres.
    std::vector<double> cur_di(static_cast<size_t>(n_i) * n_j, 0.0);
    std::vector<double> cur_dj(static_cast<size_t>(n_i) * n_j, 0.0);
    std::vector<uint8_t> cur_mask(static_cast<size_t>(n_i) * n_j, 1);
    if (level > 0) {
      const int prev_nj = static_cast<int>(prev_lat.starts_j.size());
      for (int wi = 0; wi < n_i; ++wi) {
        for (int wj = 0; wj < n_j; ++wj) {
          const double ci = lat.starts_i[wi] + (window - 1) / 2.0;
          const double cj = lat.starts_j[wj] + (window - 1) / 2.0;
          const size_t k = static_cast<size_t>(wi) * n_j + wj;
          cur_di[k] = interp_lattice(prev_di, prev_lat, prev_nj, ci, cj);
          cur_dj[k] = interp_lattice(prev_dj, prev_lat, prev_nj, ci, cj);
        }
      }
    }

    // Warp frame b by the prior field (sampled at every pixel).
    RMat warped(env_b.rows, env_b.cols);
    const bool prior_zero = level == 0;
    if (prior_zero) {
      warped = env_b;
    } else {
      const int prev_nj = static_cast<int>(prev_lat.starts_j.size());
      parallel_for(env_b.rows, [&](int64_t r0, int64_t r1) {
        for (int64_t i = r0; i < r1; ++i) {
          for (int j = 0; j < env_b.cols; ++j) {
            const double di = interp_lattice(prev_di, prev_lat, prev_nj, static_cast<double>(i),
                                             static_cast<double>(j));
            const double dj = interp_lattice(prev_dj, prev_lat, prev_nj, static_cast<double>(i),
                                             static_cast<double>(j));
            warped(static_cast<int>(i), j) = bilinear(env_b, i + di, j + dj);
          }
        }
      });
    }

    parallel_for(static_cast<int64_t>(n_i) * n_j, [&](int64_t k0, int64_t k1) {
      RMat win_a(window, window), win_b(window, window);
      for (int64_t k = k0; k < k1; ++k) {
        const int wi = static_cast<int>(k / n_j);
        const int wj = static_cast<int>(k % n_j);
        const int si = lat.starts_i[wi];
        const int sj = lat.starts_j[wj];
        for (int r = 0; r < window; ++r) {
          for (int c = 0; c < window; ++c) {
            win_a(r, c) = env_a(si + r, sj + c);
            win_b(r, c) = warped(si + r, sj + c);
          }
        }
        const NccSurface surf = ncc_map(win_a, win_b, margin, margin);
        if (!surf.valid) {
          cur_mask[static_cast<size_t>(k)] = 0;
          continue;
        }
        int best_u = 0, best_v = 0;
        double best = surf.at(0, 0);
        for (int u = -margin; u <= margin; ++u) {
          for (int v = -margin; v <= margin; ++v) {
            if (surf.at(u, v) > best) {
              best = surf.at(u, v);
              best_u = u;
              best_v = v;
            }
          }
        }
        if (best < cfg.min_correlation) {
          cur_mask[static_cast<size_t>(k)] = 0;
          continue;  // keep the prior estimate for coarser context
        }
        const SubpixelOffset sub = subpixel_peak(surf, best_u, best_v);
        cur_di[static_cast<size_t>(k)] += best_u + sub.di;
        cur_dj[static_cast<size_t>(k)] += best_v + sub.dj;
      }
    });

    prev_lat = lat;
    prev_di = std::move(cur_di);
    prev_dj = std::move(cur_dj);
    prev_mask = std::move(cur_mask);
  }

  PixelField out;
  out.lattice_rows = static_cast<int>(prev_lat.starts_i.size());
  out.lattice_cols = static_cast<int>(prev_lat.starts_j.size());
  const int n_j = out.lattice_cols;
  for (int wi = 0; wi < out.lattice_rows; ++wi) {
    for (int wj = 0; wj < n_j; ++wj) {
      const size_t k = static_cast<size_t>(wi) * n_j + wj;
      out.center_i.push_back(prev_lat.starts_i[wi] + (prev_lat.window - 1) / 2.0);
      out.center_j.push_back(prev_lat.starts_j[wj] + (prev_lat.window - 1) / 2.0);
      out.di.push_back(prev_di[k]);
      out.dj.push_back(prev_dj[k]);
      out.mask.push_back(prev_mask[k]);
    }
  }
  return out;
}

MotionField track_pair(const IQImage& frame_a, const IQImage& frame_b, const TrackConfig& cfg) {
  if (!(frame_a.grid == frame_b.grid)) throw std::invalid_argument("track: grid mismatch");
  const RMat env_a = envelope(frame_a);
  const RMat env_b = envelope(frame_b);
  const PixelField px = track_pair_pixels(env_a, env_b, cfg);

  MotionField field;
  field.interframe_dt = frame_b.frame_time - frame_a.frame_time;
  const size_t n = px.di.size();
  field.points.reserve(n);
  field.vectors.reserve(n);
  field.mask.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    const Vec2 p0 = grid_to_cartesian(frame_a.grid, px.center_i[k], px.center_j[k]);
    const Vec2 p1 =
        grid_to_cartesian(frame_a.grid, px.center_i[k] + px.di[k], px.center_j[k] + px.dj[k]);
    field.points.push_back(p0);
    field.vectors.push_back(p1 - p0);
    field.mask.push_back(px.mask[k]);
  }
  return field;
}

std::vector<MotionField> track_sequence(const std::vector<IQImage>& frames,
                                        const TrackConfig& cfg) {
  if (frames.size() < 2) throw std::invalid_argument("track: need at least 2 frames");
  std::vector<MotionField> fields;
  fields.reserve(frames.size() - 1);
  for (size_t k = 0; k + 1 < frames.size(); ++k) {
    fields.push_back(track_pair(frames[k], frames[k + 1], cfg));
  }
  return fields;
}

}  // namespace dwe
