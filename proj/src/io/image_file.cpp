#include "dwe/io/image_file.hpp"

#include <png.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dwe {

namespace {

Mat<uint8_t> load_pgm(std::ifstream& in, const std::string& path) {
  std::string magic;
  in >> magic;
  auto next_token = [&in, &path]() {
    std::string tok;
    for (;;) {
      if (!(in >> tok)) throw std::runtime_error("truncated pgm header: " + path);
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
  };
  const int cols = std::stoi(next_token());
  const int rows = std::stoi(next_token());
  const int maxval = std::stoi(next_token());
  if (cols <= 0 || rows <= 0) throw std::runtime_error("bad pgm dimensions: " + path);
  if (maxval != 255) throw std::runtime_error("pgm must be 8-bit (maxval 255): " + path);
  Mat<uint8_t> img(rows, cols);
  if (magic == "P5") {
    in.get();  // single whitespace after maxval
    in.read(reinterpret_cast<char*>(img.v.data()), static_cast<std::streamsize>(img.size()));
    if (!in) throw std::runtime_error("truncated pgm data: " + path);
  } else {  // P2
    for (auto& px : img.v) {
      int value = 0;
      if (!(in >> value)) throw std::runtime_error("truncated pgm data: " + path);
      if (value < 0 || value > 255) throw std::runtime_error("pgm value out of range: " + path);
      px = static_cast<uint8_t>(value);
    }
  }
  return img;
}

struct PngReadCtx {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* fp = nullptr;
  ~PngReadCtx() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

Mat<uint8_t> load_png(const std::string& path) {
  PngReadCtx ctx;
  ctx.fp = std::fopen(path.c_str(), "rb");
  if (!ctx.fp) throw std::runtime_error("cannot open: " + path);
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!ctx.png) throw std::runtime_error("png read init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw std::runtime_error("png info init failed");
  if (setjmp(png_jmpbuf(ctx.png))) throw std::runtime_error("png decode failed: " + path);
  png_init_io(ctx.png, ctx.fp);
  png_read_info(ctx.png, ctx.info);

  const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
  const int color = png_get_color_type(ctx.png, ctx.info);
  const int depth = png_get_bit_depth(ctx.png, ctx.info);

  // Normalize everything to 8-bit grayscale.
  if (depth == 16) png_set_strip_16(ctx.png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(ctx.png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(ctx.png);
  if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA ||
      color == PNG_COLOR_TYPE_PALETTE) {
    png_set_rgb_to_gray_fixed(ctx.png, 1, -1, -1);
  }
  png_read_update_info(ctx.png, ctx.info);

  Mat<uint8_t> img(static_cast<int>(h), static_cast<int>(w));
  std::vector<png_bytep> row_ptrs(h);
  for (png_uint_32 r = 0; r < h; ++r) row_ptrs[r] = img.row(static_cast<int>(r));
  png_read_image(ctx.png, row_ptrs.data());
  png_read_end(ctx.png, nullptr);
  return img;
}

struct PngWriteCtx {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* fp = nullptr;
  ~PngWriteCtx() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

void write_png(const std::string& path, int rows, int cols, int color_type,
               const uint8_t* data, int bytes_per_px) {
  PngWriteCtx ctx;
  ctx.fp = std::fopen(path.c_str(), "wb");
  if (!ctx.fp) throw std::runtime_error("cannot open for writing: " + path);
  ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!ctx.png) throw std::runtime_error("png write init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw std::runtime_error("png info init failed");
  if (setjmp(png_jmpbuf(ctx.png))) throw std::runtime_error("png encode failed: " + path);
  png_init_io(ctx.png, ctx.fp);
  png_set_IHDR(ctx.png, ctx.info, cols, rows, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(ctx.png, ctx.info);
  for (int r = 0; r < rows; ++r) {
    png_write_row(ctx.png, const_cast<png_bytep>(data + static_cast<size_t>(r) * cols * bytes_per_px));
  }
  png_write_end(ctx.png, nullptr);
}

}  // namespace

Mat<uint8_t> load_gray_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  char magic[2] = {0, 0};
  in.read(magic, 2);
  in.seekg(0);
  if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) return load_pgm(in, path);
  if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
    in.close();
    return load_png(path);
  }
  throw std::runtime_error("unsupported template format (need PGM or PNG): " + path);
}

void save_pgm(const std::string& path, const Mat<uint8_t>& img) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "P5\n" << img.cols << " " << img.rows << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.v.data()), static_cast<std::streamsize>(img.size()));
}

void save_png_gray(const std::string& path, const Mat<uint8_t>& img) {
  write_png(path, img.rows, img.cols, PNG_COLOR_TYPE_GRAY, img.v.data(), 1);
}

void save_png_rgb(const std::string& path, int rows, int cols, const std::vector<uint8_t>& rgb) {
  if (rgb.size() != static_cast<size_t>(rows) * cols * 3) {
    throw std::invalid_argument("save_png_rgb: buffer size mismatch");
  }
  write_png(path, rows, cols, PNG_COLOR_TYPE_RGB, rgb.data(), 3);
}

}  // namespace dwe
