#include "dwe/track/ncc.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dwe {

namespace {

// noise floor below which correlation differences are not meaningful
constexpr double kNccEps = 1e-12;

int next_fast_size(int n) {
  for (;; ++n) {
    int m = n;
    for (int f : {2, 3, 5}) {
      while (m % f == 0) m /= f;
    }
    if (m == 1) return n;
  }
}

// Cached FFTW plans per padded size. Plans are created once under a lock and
// executed through the new-array interface, which is thread-safe.
struct CorrPlans {
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;
};

CorrPlans& plans_for(int pr, int pc) {
  static std::map<std::pair<int, int>, CorrPlans> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[{pr, pc}];
  if (!entry.fwd) {
    std::vector<double> real(static_cast<size_t>(pr) * pc);
    std::vector<std::complex<double>> spec(static_cast<size_t>(pr) * (pc / 2 + 1));
    entry.fwd = fftw_plan_dft_r2c_2d(pr, pc, real.data(),
                                     reinterpret_cast<fftw_complex*>(spec.data()),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    entry.inv = fftw_plan_dft_c2r_2d(pr, pc, reinterpret_cast<fftw_complex*>(spec.data()),
                                     real.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!entry.fwd || !entry.inv) throw std::runtime_error("fftw plan creation failed");
  }
  return entry;
}

// Linear cross-correlation sum_ab(u, v) = sum_rc a(r,c) b(r+u, c+v) for all
// lags within the margins, computed on zero-padded arrays.
RMat cross_sums_fft(const RMat& a, const RMat& b, int mi, int mj) {
  const int pr = next_fast_size(a.rows + mi);
  const int pc = next_fast_size(a.cols + mj);
  const size_t n_real = static_cast<size_t>(pr) * pc;
  const size_t n_spec = static_cast<size_t>(pr) * (pc / 2 + 1);
  auto& plans = plans_for(pr, pc);

  std::vector<double> pad(n_real, 0.0);
  std::vector<std::complex<double>> fa(n_spec), fb(n_spec);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) pad[static_cast<size_t>(r) * pc + c] = a(r, c);
  }
  fftw_execute_dft_r2c(plans.fwd, pad.data(), reinterpret_cast<fftw_complex*>(fa.data()));
  std::fill(pad.begin(), pad.end(), 0.0);
  for (int r = 0; r < b.rows; ++r) {
    for (int c = 0; c < b.cols; ++c) pad[static_cast<size_t>(r) * pc + c] = b(r, c);
  }
  fftw_execute_dft_r2c(plans.fwd, pad.data(), reinterpret_cast<fftw_complex*>(fb.data()));

  for (size_t k = 0; k < n_spec; ++k) fa[k] = std::conj(fa[k]) * fb[k];
  fftw_execute_dft_c2r(plans.inv, reinterpret_cast<fftw_complex*>(fa.data()), pad.data());

  const double scale = 1.0 / n_real;
  RMat sums(2 * mi + 1, 2 * mj + 1);
  for (int u = -mi; u <= mi; ++u) {
    const int rr = u >= 0 ? u : pr + u;
    for (int v = -mj; v <= mj; ++v) {
      const int cc = v >= 0 ? v : pc + v;
      sums(u + mi, v + mj) = pad[static_cast<size_t>(rr) * pc + cc] * scale;
    }
  }
  return sums;
}

// Summed-area table with a zero first row/column.
RMat integral(const RMat& img, bool squared) {
  RMat sat(img.rows + 1, img.cols + 1, 0.0);
  for (int r = 0; r < img.rows; ++r) {
    double row_acc = 0.0;
    for (int c = 0; c < img.cols; ++c) {
      const double v = img(r, c);
      row_acc += squared ? v * v : v;
      sat(r + 1, c + 1) = sat(r, c + 1) + row_acc;
    }
  }
  return sat;
}

double rect_sum(const RMat& sat, int r0, int c0, int r1, int c1) {  // inclusive r1, c1
  return sat(r1 + 1, c1 + 1) - sat(r0, c1 + 1) - sat(r1 + 1, c0) + sat(r0, c0);
}

void check_blocks(const RMat& a, const RMat& b, int mi, int mj) {
  if (!a.same_shape(b)) throw std::invalid_argument("ncc: blocks must have equal size");
  if (a.rows < 2 || a.cols < 2) throw std::invalid_argument("ncc: blocks too small");
  if (mi < 0 || mj < 0 || mi >= a.rows || mj >= a.cols) {
    throw std::invalid_argument("ncc: margin outside the block");
  }
}

bool near_constant(const RMat& m) {
  double sum = 0.0, sum2 = 0.0;
  for (double v : m.v) {
    sum += v;
    sum2 += v * v;
  }
  const double n = static_cast<double>(m.size());
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  return !(var > kNccEps * std::max(1.0, mean * mean));
}

template <typename SumAbFn>
NccSurface ncc_common(const RMat& a, const RMat& b, int mi, int mj, SumAbFn&& sum_ab) {
  check_blocks(a, b, mi, mj);
  NccSurface out;
  out.margin_i = mi;
  out.margin_j = mj;
  out.values = RMat(2 * mi + 1, 2 * mj + 1, 0.0);
  if (near_constant(a) || near_constant(b)) {
    out.valid = false;
    return out;
  }
  out.valid = true;

  const RMat sat_a = integral(a, false);
  const RMat sat_a2 = integral(a, true);
  const RMat sat_b = integral(b, false);
  const RMat sat_b2 = integral(b, true);
  const int h = a.rows, w = a.cols;

  for (int u = -mi; u <= mi; ++u) {
    // overlap rows in a coordinates: a(r) against b(r + u)
    const int ra0 = std::max(0, -u);
    const int ra1 = std::min(h - 1, h - 1 - u);
    for (int v = -mj; v <= mj; ++v) {
      const int ca0 = std::max(0, -v);
      const int ca1 = std::min(w - 1, w - 1 - v);
      const double n = static_cast<double>((ra1 - ra0 + 1) * (ca1 - ca0 + 1));
      const double sa = rect_sum(sat_a, ra0, ca0, ra1, ca1);
      const double sa2 = rect_sum(sat_a2, ra0, ca0, ra1, ca1);
      const double sb = rect_sum(sat_b, ra0 + u, ca0 + v, ra1 + u, ca1 + v);
      const double sb2 = rect_sum(sat_b2, ra0 + u, ca0 + v, ra1 + u, ca1 + v);
      const double num = sum_ab(u, v) - sa * sb / n;
      const double var_a = sa2 - sa * sa / n;
      const double var_b = sb2 - sb * sb / n;
      const double den = std::sqrt(std::max(var_a, 0.0) * std::max(var_b, 0.0));
      out.values(u + mi, v + mj) = den > kNccEps ? num / den : 0.0;
    }
  }
  return out;
}

}  // namespace

NccSurface ncc_map(const RMat& a, const RMat& b, int margin_i, int margin_j) {
  check_blocks(a, b, margin_i, margin_j);
  const RMat sums = cross_sums_fft(a, b, margin_i, margin_j);
  return ncc_common(a, b, margin_i, margin_j,
                    [&](int u, int v) { return sums(u + margin_i, v + margin_j); });
}

NccSurface ncc_map_direct(const RMat& a, const RMat& b, int margin_i, int margin_j) {
  const int h = a.rows, w = a.cols;
  return ncc_common(a, b, margin_i, margin_j, [&](int u, int v) {
    double acc = 0.0;
    for (int r = std::max(0, -u); r <= std::min(h - 1, h - 1 - u); ++r) {
      for (int c = std::max(0, -v); c <= std::min(w - 1, w - 1 - v); ++c) {
        acc += a(r, c) * b(r + u, c + v);
      }
    }
    return acc;
  });
}

double parabolic_offset(double c_m, double c_0, double c_p) {
  if (!(c_0 >= c_m) || !(c_0 >= c_p)) {
    throw std::invalid_argument("parabolic_offset: centre must be the integer argmax");
  }
  const double num = c_m - c_p;
  const double den = 2.0 * (c_m - 2.0 * c_0 + c_p);
  if (den == 0.0 || std::abs(num) <= kNccEps) return 0.0;
  const double delta = num / den;
  return std::clamp(delta, -0.5, 0.5);
}

SubpixelOffset subpixel_peak(const NccSurface& surface, int peak_u, int peak_v) {
  SubpixelOffset off;
  const int mi = surface.margin_i, mj = surface.margin_j;
  if (peak_u > -mi && peak_u < mi) {
    off.di = parabolic_offset(surface.at(peak_u - 1, peak_v), surface.at(peak_u, peak_v),
                              surface.at(peak_u + 1, peak_v));
  }
  if (peak_v > -mj && peak_v < mj) {
    off.dj = parabolic_offset(surface.at(peak_u, peak_v - 1), surface.at(peak_u, peak_v),
                              surface.at(peak_u, peak_v + 1));
  }
  return off;
}

}  // namespace dwe
