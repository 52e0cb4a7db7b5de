#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dwe {

// Channel-major complex tensor stored as separate real/imag planes; the split
// layout keeps the convolution inner loops on contiguous doubles.
struct ComplexTensor {
  int ch = 0, h = 0, w = 0;
  std::vector<double> re, im;

  ComplexTensor() = default;
  ComplexTensor(int ch_, int h_, int w_)
      : ch(ch_), h(h_), w(w_), re(plane_count(), 0.0), im(plane_count(), 0.0) {
    if (ch_ < 0 || h_ <= 0 || w_ <= 0) throw std::invalid_argument("tensor: bad shape");
  }

  size_t plane() const { return static_cast<size_t>(h) * w; }
  size_t plane_count() const { return static_cast<size_t>(ch) * plane(); }

  double* re_plane(int c) { return re.data() + static_cast<size_t>(c) * plane(); }
  double* im_plane(int c) { return im.data() + static_cast<size_t>(c) * plane(); }
  const double* re_plane(int c) const { return re.data() + static_cast<size_t>(c) * plane(); }
  const double* im_plane(int c) const { return im.data() + static_cast<size_t>(c) * plane(); }

  std::complex<double> at(int c, int y, int x) const {
    const size_t k = static_cast<size_t>(c) * plane() + static_cast<size_t>(y) * w + x;
    return {re[k], im[k]};
  }
  void set(int c, int y, int x, std::complex<double> v) {
    const size_t k = static_cast<size_t>(c) * plane() + static_cast<size_t>(y) * w + x;
    re[k] = v.real();
    im[k] = v.imag();
  }

  bool same_shape(const ComplexTensor& o) const { return ch == o.ch && h == o.h && w == o.w; }
  void fill_zero() {
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
  }
};

}  // namespace dwe
