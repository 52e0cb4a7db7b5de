#include "dwe/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dwe {

void validate(const RegionMasks& r) {
  if (!r.cyst.same_shape(r.background)) {
    throw std::invalid_argument("regions: mask shape mismatch");
  }
  size_t n_cyst = 0, n_bg = 0;
  for (size_t k = 0; k < r.cyst.size(); ++k) {
    if (r.cyst.v[k] && r.background.v[k]) {
      throw std::invalid_argument("regions: cyst and background overlap");
    }
    n_cyst += r.cyst.v[k] != 0;
    n_bg += r.background.v[k] != 0;
  }
  if (n_cyst == 0 || n_bg == 0) throw std::invalid_argument("regions: empty region");
}

namespace {

void require_same_shape(const RMat& a, const RMat& b, const char* what) {
  if (!a.same_shape(b)) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

struct Moments {
  double mean = 0.0;
  double var = 0.0;  // population variance
};

Moments moments(const RMat& img, const Mat<uint8_t>& mask) {
  double sum = 0.0, sum2 = 0.0;
  size_t n = 0;
  for (size_t k = 0; k < img.size(); ++k) {
    if (!mask.v[k]) continue;
    sum += img.v[k];
    sum2 += img.v[k] * img.v[k];
    ++n;
  }
  const double mean = sum / static_cast<double>(n);
  return {mean, sum2 / static_cast<double>(n) - mean * mean};
}

}  // namespace

double psnr(const RMat& estimate, const RMat& reference) {
  require_same_shape(estimate, reference, "psnr");
  const double peak = *std::max_element(reference.v.begin(), reference.v.end());
  if (!(peak > 0)) throw std::invalid_argument("psnr: reference is all zero");
  double sq = 0.0;
  for (size_t k = 0; k < estimate.size(); ++k) {
    const double d = estimate.v[k] - reference.v[k];
    sq += d * d;
  }
  if (sq == 0.0) return std::numeric_limits<double>::infinity();
  const double rmse = std::sqrt(sq / static_cast<double>(estimate.size()));
  return 20.0 * std::log10(peak / rmse);
}

double ssim(const RMat& estimate, const RMat& reference, const SsimOptions& opt) {
  require_same_shape(estimate, reference, "ssim");
  const double peak = *std::max_element(reference.v.begin(), reference.v.end());
  const double c1 = (0.01 * peak) * (0.01 * peak);
  const double c2 = (0.03 * peak) * (0.03 * peak);

  auto ssim_over = [&](size_t begin_r, size_t end_r, size_t begin_c, size_t end_c) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
    size_t n = 0;
    for (size_t r = begin_r; r < end_r; ++r) {
      for (size_t c = begin_c; c < end_c; ++c) {
        const double x = estimate(static_cast<int>(r), static_cast<int>(c));
        const double y = reference(static_cast<int>(r), static_cast<int>(c));
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
        ++n;
      }
    }
    const double nd = static_cast<double>(n);
    const double mx = sx / nd, my = sy / nd;
    const double vx = sxx / nd - mx * mx;
    const double vy = syy / nd - my * my;
    const double cov = sxy / nd - mx * my;
    return ((2 * mx * my + c1) * (2 * cov + c2)) / ((mx * mx + my * my + c1) * (vx + vy + c2));
  };

  if (!opt.windowed) {
    return ssim_over(0, estimate.rows, 0, estimate.cols);
  }
  const int w = opt.window;
  if (estimate.rows < w || estimate.cols < w) {
    throw std::invalid_argument("ssim: image smaller than the window");
  }
  double acc = 0.0;
  size_t count = 0;
  for (int r = 0; r + w <= estimate.rows; ++r) {
    for (int c = 0; c + w <= estimate.cols; ++c) {
      acc += ssim_over(r, r + w, c, c + w);
      ++count;
    }
  }
  return acc / static_cast<double>(count);
}

double cnr(const RMat& image, const RegionMasks& regions) {
  validate(regions);
  if (!image.same_shape(regions.cyst)) throw std::invalid_argument("cnr: mask shape mismatch");
  const Moments mc = moments(image, regions.cyst);
  const Moments mb = moments(image, regions.background);
  const double denom = std::sqrt(mc.var + mb.var);
  if (!(denom > 0)) throw std::invalid_argument("cnr: both region variances are zero");
  const double num = std::abs(mc.mean - mb.mean);
  if (num == 0.0) return -std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(num / denom);
}

double gcnr(const RMat& image, const RegionMasks& regions, int histogram_bins) {
  validate(regions);
  if (!image.same_shape(regions.cyst)) throw std::invalid_argument("gcnr: mask shape mismatch");
  if (histogram_bins < 2) throw std::invalid_argument("gcnr: need at least 2 bins");

  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (size_t k = 0; k < image.size(); ++k) {
    if (!regions.cyst.v[k] && !regions.background.v[k]) continue;
    lo = std::min(lo, image.v[k]);
    hi = std::max(hi, image.v[k]);
  }
  if (!(hi > lo)) return 0.0;  // all pooled samples share one value: full overlap

  std::vector<double> pc(static_cast<size_t>(histogram_bins), 0.0);
  std::vector<double> pb(static_cast<size_t>(histogram_bins), 0.0);
  size_t nc = 0, nb = 0;
  const double scale = histogram_bins / (hi - lo);
  for (size_t k = 0; k < image.size(); ++k) {
    const bool in_c = regions.cyst.v[k] != 0;
    const bool in_b = regions.background.v[k] != 0;
    if (!in_c && !in_b) continue;
    int bin = static_cast<int>((image.v[k] - lo) * scale);
    bin = std::clamp(bin, 0, histogram_bins - 1);
    if (in_c) {
      pc[static_cast<size_t>(bin)] += 1.0;
      ++nc;
    } else {
      pb[static_cast<size_t>(bin)] += 1.0;
      ++nb;
    }
  }
  double overlap = 0.0;
  for (int k = 0; k < histogram_bins; ++k) {
    overlap += std::min(pc[static_cast<size_t>(k)] / static_cast<double>(nc),
                        pb[static_cast<size_t>(k)] / static_cast<double>(nb));
  }
  return 1.0 - overlap;
}

double epe(Vec2 estimated, Vec2 truth) {
  return std::hypot(estimated.x - truth.x, estimated.z - truth.z);
}

double mepe(const MotionField& estimated, const MotionField& truth) {
  if (estimated.points.size() != truth.points.size()) {
    throw std::invalid_argument("mepe: fields measure different point sets");
  }
  double acc = 0.0;
  size_t n = 0;
  for (size_t k = 0; k < estimated.points.size(); ++k) {
    if (!estimated.mask[k] || !truth.mask[k]) continue;
    acc += epe(estimated.vectors[k], truth.vectors[k]);
    ++n;
  }
  if (n == 0) throw std::invalid_argument("mepe: no valid points after mask intersection");
  return acc / static_cast<double>(n);
}

double rave(const MotionField& estimated, Vec2 center, double omega_true, double min_radius) {
  if (omega_true == 0.0) throw std::invalid_argument("rave: omega_true must be non-zero");
  if (!(estimated.interframe_dt > 0)) throw std::invalid_argument("rave: interframe_dt unknown");
  double acc = 0.0;
  size_t n = 0;
  for (size_t k = 0; k < estimated.points.size(); ++k) {
    if (!estimated.mask[k]) continue;
    const Vec2 r = estimated.points[k] - center;
    const double radius = std::hypot(r.x, r.z);
    if (radius < min_radius) continue;
    // unit tangent for ccw rotation in the x-z plane
    const Vec2 tangent{-r.z / radius, r.x / radius};
    const double tangential = estimated.vectors[k].x * tangent.x + estimated.vectors[k].z * tangent.z;
    acc += tangential / radius / estimated.interframe_dt;
    ++n;
  }
  if (n == 0) throw std::invalid_argument("rave: empty ROI");
  const double omega_est = acc / static_cast<double>(n);
  return std::abs(omega_est - omega_true) / std::abs(omega_true);
}

double mepd(const MotionField& a, const MotionField& b) {
  if (a.points.size() != b.points.size()) {
    throw std::invalid_argument("mepd: fields measure different point sets");
  }
  double acc = 0.0;
  size_t n = 0;
  for (size_t k = 0; k < a.points.size(); ++k) {
    if (!a.mask[k] || !b.mask[k]) continue;
    acc += epe(a.vectors[k], b.vectors[k]);
    ++n;
  }
  if (n == 0) throw std::invalid_argument("mepd: no valid points after mask intersection");
  return acc / static_cast<double>(n);
}

double moco_nyquist_velocity(const ProbeConfig& probe, double prf) {
  if (!(prf > 0)) throw std::invalid_argument("moco_nyquist_velocity: prf must be positive");
  return probe.sound_speed * prf / (8.0 * probe.center_frequency);
}

}  // namespace dwe
