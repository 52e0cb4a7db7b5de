#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dwe {

// Dense row-major matrix, the basic pixel/sample container.
template <typename T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> v;

  Mat() = default;
  Mat(int r, int c, T fill = T{}) : rows(r), cols(c), v(static_cast<size_t>(r) * c, fill) {
    if (r < 0 || c < 0) throw std::invalid_argument("Mat: negative dimensions");
  }

  T& operator()(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }

  T* row(int i) { return v.data() + static_cast<size_t>(i) * cols; }
  const T* row(int i) const { return v.data() + static_cast<size_t>(i) * cols; }

  size_t size() const { return v.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

using RMat = Mat<double>;
using CMat = Mat<std::complex<double>>;

}  // namespace dwe
