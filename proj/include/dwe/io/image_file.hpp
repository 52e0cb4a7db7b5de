#pragma once

#include <cstdint>
#include <string>

#include "dwe/core/mat.hpp"

namespace dwe {

// 8-bit grayscale template input. PGM (P2/P5) and grayscale PNG supported;
// the format is picked from the file's magic bytes.
Mat<uint8_t> load_gray_image(const std::string& path);

void save_pgm(const std::string& path, const Mat<uint8_t>& img);
void save_png_gray(const std::string& path, const Mat<uint8_t>& img);

// RGB PNG used by the plot renderer; data is rows*cols*3 bytes.
void save_png_rgb(const std::string& path, int rows, int cols,
                  const std::vector<uint8_t>& rgb);

}  // namespace dwe
