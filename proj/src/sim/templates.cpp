#include "dwe/sim/templates.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dwe/core/rng.hpp"

namespace dwe {

namespace {

void separable_blur(Mat<double>& img, int radius) {
  if (radius < 1) return;
  const double inv = 1.0 / (2 * radius + 1);
  Mat<double> tmp(img.rows, img.cols);
  for (int r = 0; r < img.rows; ++r) {
    for (int c = 0; c < img.cols; ++c) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        acc += img(r, std::clamp(c + k, 0, img.cols - 1));
      }
      tmp(r, c) = acc * inv;
    }
  }
  for (int c = 0; c < img.cols; ++c) {
    for (int r = 0; r < img.rows; ++r) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        acc += tmp(std::clamp(r + k, 0, img.rows - 1), c);
      }
      img(r, c) = acc * inv;
    }
  }
}

}  // namespace

Mat<uint8_t> make_synthetic_template(int rows, int cols, uint64_t seed) {
  if (rows < 8 || cols < 8) throw std::invalid_argument("template: too small");
  Rng rng(seed);
  Mat<double> img(rows, cols, 0.0);

  // Low-frequency background texture from a handful of cosine gratings.
  struct Grating {
    double fr, fc, phase, amp;
  };
  std::vector<Grating> gratings;
  const int n_gratings = 4 + static_cast<int>(rng.bounded(4));
  for (int g = 0; g < n_gratings; ++g) {
    gratings.push_back({rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                        rng.uniform(0.0, 2.0 * M_PI), rng.uniform(8.0, 25.0)});
  }
  const double base = rng.uniform(70.0, 120.0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double u = static_cast<double>(r) / rows;
      const double v = static_cast<double>(c) / cols;
      double val = base;
      for (const auto& g : gratings) {
        val += g.amp * std::cos(2.0 * M_PI * (g.fr * u + g.fc * v) + g.phase);
      }
      img(r, c) = val;
    }
  }

  auto blend_ellipse = [&](double cr, double cc, double ar, double ac, double rot,
                           double value, double softness) {
    const double cs = std::cos(rot), sn = std::sin(rot);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const double dr = (r - cr) / ar;
        const double dc = (c - cc) / ac;
        const double x = dr * cs - dc * sn;
        const double y = dr * sn + dc * cs;
        const double d = std::sqrt(x * x + y * y);
        if (d >= 1.0 + softness) continue;
        const double m = d <= 1.0 - softness
                             ? 1.0
                             : 0.5 * (1.0 + std::cos(M_PI * (d - (1.0 - softness)) / (2 * softness)));
        img(r, c) = img(r, c) * (1.0 - m) + value * m;
      }
    }
  };

  // Dark pools (chamber-like) and bright bands.
  const int n_pools = 2 + static_cast<int>(rng.bounded(3));
  for (int p = 0; p < n_pools; ++p) {
    blend_ellipse(rng.uniform(0.15, 0.85) * rows, rng.uniform(0.15, 0.85) * cols,
                  rng.uniform(0.10, 0.28) * rows, rng.uniform(0.10, 0.28) * cols,
                  rng.uniform(0.0, M_PI), rng.uniform(3.0, 35.0), 0.25);
  }
  const int n_bands = 1 + static_cast<int>(rng.bounded(3));
  for (int b = 0; b < n_bands; ++b) {
    // A band is a bright ellipse with a concentric darker core cut back in.
    const double cr = rng.uniform(0.2, 0.8) * rows;
    const double cc = rng.uniform(0.2, 0.8) * cols;
    const double ar = rng.uniform(0.18, 0.40) * rows;
    const double ac = rng.uniform(0.18, 0.40) * cols;
    const double rot = rng.uniform(0.0, M_PI);
    const double bright = rng.uniform(150.0, 230.0);
    const double inner = rng.uniform(30.0, 90.0);
    const double thickness = rng.uniform(0.55, 0.8);
    blend_ellipse(cr, cc, ar, ac, rot, bright, 0.2);
    blend_ellipse(cr, cc, ar * thickness, ac * thickness, rot, inner, 0.2);
  }

  separable_blur(img, std::max(1, rows / 48));

  Mat<uint8_t> out(rows, cols);
  for (size_t k = 0; k < img.size(); ++k) {
    out.v[k] = static_cast<uint8_t>(std::clamp(img.v[k], 0.0, 255.0));
  }
  return out;
}

}  // namespace dwe
