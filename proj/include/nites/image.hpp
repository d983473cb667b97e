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

#ifndef NITES_IMAGE_HPP_
#define NITES_IMAGE_HPP_

#include <string>
#include <vector>

namespace nites {

// RGB image held as unit-interval reals, row-major, channel-interleaved.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // width * height * 3 values in [0,1]

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0.0) {}

  double& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  double at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
};

// Decodes a PNG (8-bit RGB; grayscale is replicated to three channels with
// a warning) or binary PPM (P6, maxval 255) file. The container format is
// detected from the file's leading bytes, not its name.
RgbImage load_image(const std::string& path);

// Quantizes to 8 bits per sample (values clamped to [0,1] first) and writes
// PNG, or PPM when the path ends in ".ppm". The file is written to a
// temporary name and renamed into place on success.
void save_image(const RgbImage& image, const std::string& path);

}  // namespace nites

#endif  // NITES_IMAGE_HPP_
