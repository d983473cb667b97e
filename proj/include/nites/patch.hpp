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

#ifndef NITES_PATCH_HPP_
#define NITES_PATCH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "nites/image.hpp"

namespace nites {

// Square RGB patch, same layout as RgbImage (row-major, interleaved).
struct Patch {
  int side = 0;
  std::vector<double> data;  // side * side * 3

  Patch() = default;
  explicit Patch(int s) : side(s), data(static_cast<std::size_t>(s) * s * 3, 0.0) {}

  double& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * side + x) * 3 + c];
  }
  double at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * side + x) * 3 + c];
  }
  int dim() const { return side * side * 3; }
};

// Training collection of patches cropped from one exemplar.
struct ExemplarPatchSet {
  std::vector<Patch> patches;

  int side() const { return patches.empty() ? 0 : patches.front().side; }
  int source_dim() const { return patches.empty() ? 0 : patches.front().dim(); }
};

// Top-left corners for `count` crops of a side*side window, drawn uniformly
// (with replacement) over every valid position. Deterministic given seed.
std::vector<std::pair<int, int>> crop_origins(int width, int height, int side, int count,
                                              std::uint64_t seed);

// Crops `count` random side*side patches out of `image`.
ExemplarPatchSet random_crops(const RgbImage& image, int side, int count, std::uint64_t seed);

// Copies a patch-sized window out of an image.
Patch crop(const RgbImage& image, int y0, int x0, int side);

// Converts a patch back to a standalone image (used by the CLI when
// writing generated patches to disk).
RgbImage patch_to_image(const Patch& patch);
Patch image_to_patch(const RgbImage& image);

}  // namespace nites

#endif  // NITES_PATCH_HPP_
