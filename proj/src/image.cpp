// Copyright 2026  The nites authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "nites/image.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>

#include "nites/errors.hpp"

namespace nites {

namespace {

constexpr double kInv255 = 1.0 / 255.0;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// ---------------------------------------------------------------------------
// PNG

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

RgbImage load_png(std::FILE* f, const std::string& path) {
  PngReader r;
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!r.png) throw IoError("png: out of memory reading " + path);
  r.info = png_create_info_struct(r.png);
  if (!r.info) throw IoError("png: out of memory reading " + path);
  if (setjmp(png_jmpbuf(r.png))) {
    throw IoError("png: failed to decode " + path);
  }
  png_init_io(r.png, f);
  png_read_info(r.png, r.info);

  png_uint_32 width = png_get_image_width(r.png, r.info);
  png_uint_32 height = png_get_image_height(r.png, r.info);
  int color_type = png_get_color_type(r.png, r.info);
  int bit_depth = png_get_bit_depth(r.png, r.info);

  if (color_type == PNG_COLOR_TYPE_GRAY_ALPHA || color_type == PNG_COLOR_TYPE_RGB_ALPHA ||
      png_get_valid(r.png, r.info, PNG_INFO_tRNS)) {
    throw FormatError("png: " + path + " carries an alpha channel; expected RGB or grayscale");
  }
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
  if (color_type == PNG_COLOR_TYPE_GRAY) {
    if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(r.png);
    std::fprintf(stderr, "nites: %s is grayscale; replicating to 3 channels\n", path.c_str());
    png_set_gray_to_rgb(r.png);
  }
  if (bit_depth == 16) png_set_strip_16(r.png);
  png_set_interlace_handling(r.png);
  png_read_update_info(r.png, r.info);

  if (png_get_channels(r.png, r.info) != 3) {
    throw FormatError("png: " + path + " does not decode to 3 channels");
  }

  RgbImage image(static_cast<int>(width), static_cast<int>(height));
  std::vector<png_byte> row(static_cast<std::size_t>(width) * 3);
  std::vector<png_byte> raster(static_cast<std::size_t>(width) * height * 3);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = raster.data() + static_cast<std::size_t>(y) * width * 3;
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);

  for (std::size_t i = 0; i < raster.size(); ++i) image.data[i] = raster[i] * kInv255;
  return image;
}

void save_png(const RgbImage& image, const std::vector<png_byte>& raster, const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("cannot open " + path + " for writing");
  PngWriter w;
  w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!w.png) throw IoError("png: out of memory writing " + path);
  w.info = png_create_info_struct(w.png);
  if (!w.info) throw IoError("png: out of memory writing " + path);
  if (setjmp(png_jmpbuf(w.png))) {
    throw IoError("png: failed to encode " + path);
  }
  png_init_io(w.png, f.get());
  png_set_IHDR(w.png, w.info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  for (int y = 0; y < image.height; ++y) {
    png_write_row(w.png, const_cast<png_bytep>(raster.data() + static_cast<std::size_t>(y) * image.width * 3));
  }
  png_write_end(w.png, nullptr);
}

// ---------------------------------------------------------------------------
// PPM (P6, maxval 255)

int ppm_next_token(std::istream& in, std::string& tok) {
  tok.clear();
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) break;
  }
  if (c == EOF) return 0;
  do {
    tok.push_back(static_cast<char>(c));
    c = in.get();
  } while (c != EOF && !std::isspace(c));
  return 1;
}

RgbImage load_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string tok;
  if (!ppm_next_token(in, tok) || tok != "P6") throw FormatError("ppm: " + path + " is not a P6 file");
  long w = 0, h = 0, maxval = 0;
  try {
    if (!ppm_next_token(in, tok)) throw FormatError("");
    w = std::stol(tok);
    if (!ppm_next_token(in, tok)) throw FormatError("");
    h = std::stol(tok);
    if (!ppm_next_token(in, tok)) throw FormatError("");
    maxval = std::stol(tok);
  } catch (const std::exception&) {
    throw FormatError("ppm: malformed header in " + path);
  }
  if (w < 1 || h < 1) throw FormatError("ppm: bad dimensions in " + path);
  if (maxval != 255) throw FormatError("ppm: only maxval 255 supported (" + path + ")");

  RgbImage image(static_cast<int>(w), static_cast<int>(h));
  std::vector<unsigned char> raster(static_cast<std::size_t>(w) * h * 3);
  in.read(reinterpret_cast<char*>(raster.data()), static_cast<std::streamsize>(raster.size()));
  if (in.gcount() != static_cast<std::streamsize>(raster.size())) {
    throw IoError("ppm: truncated pixel data in " + path);
  }
  for (std::size_t i = 0; i < raster.size(); ++i) image.data[i] = raster[i] * kInv255;
  return image;
}

void save_ppm(const RgbImage& image, const std::vector<png_byte>& raster, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "P6\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(raster.data()), static_cast<std::streamsize>(raster.size()));
  if (!out) throw IoError("ppm: write failed for " + path);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

RgbImage load_image(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError("cannot open " + path);
  unsigned char magic[8] = {0};
  std::size_t got = std::fread(magic, 1, sizeof(magic), f.get());
  if (got >= 8 && png_sig_cmp(magic, 0, 8) == 0) {
    std::rewind(f.get());
    return load_png(f.get(), path);
  }
  if (got >= 2 && magic[0] == 'P' && magic[1] == '6') {
    f.reset();
    return load_ppm(path);
  }
  throw FormatError(path + ": not a PNG or P6 PPM file");
}

void save_image(const RgbImage& image, const std::string& path) {
  if (image.width < 1 || image.height < 1 ||
      image.data.size() != static_cast<std::size_t>(image.width) * image.height * 3) {
    throw ArgumentError("save_image: malformed image");
  }
  std::vector<png_byte> raster(image.data.size());
  for (std::size_t i = 0; i < raster.size(); ++i) {
    double v = std::clamp(image.data[i], 0.0, 1.0);
    raster[i] = static_cast<png_byte>(std::lround(v * 255.0));
  }
  const std::string tmp = path + ".tmp~";
  try {
    if (ends_with(path, ".ppm")) {
      save_ppm(image, raster, tmp);
    } else {
      save_png(image, raster, tmp);
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

}  // namespace nites
