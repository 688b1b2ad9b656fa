// Copyright (c) 2026, the fovaug authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FOVAUG_IMAGE_HPP_
#define FOVAUG_IMAGE_HPP_

#include <span>
#include <vector>

#include "fovaug/errors.hpp"

namespace fovaug {

/// H x W x C raster, channel-interleaved, row-major. Pixel values live in
/// [0, 1]; every public transform keeps them there. Pixel centers sit at
/// integer coordinates, so the geometric center is ((W-1)/2, (H-1)/2).
class ImageBuffer {
 public:
  ImageBuffer() = default;

  ImageBuffer(int height, int width, int channels, float fill = 0.0f)
      : height_(height), width_(width), channels_(channels) {
    if (height < 1 || width < 1 || (channels != 1 && channels != 3)) {
      throw InvalidParameter("ImageBuffer: need H,W >= 1 and 1 or 3 channels");
    }
    data_.assign(static_cast<std::size_t>(height) * width * channels, fill);
  }

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  bool empty() const { return data_.empty(); }

  float& at(int y, int x, int c) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  float at(int y, int x, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  float* pixel(int y, int x) {
    return data_.data() + (static_cast<std::size_t>(y) * width_ + x) * channels_;
  }
  const float* pixel(int y, int x) const {
    return data_.data() + (static_cast<std::size_t>(y) * width_ + x) * channels_;
  }

  std::span<float> data() { return data_; }
  std::span<const float> data() const { return data_; }

  bool same_shape(const ImageBuffer& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

 private:
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<float> data_;
};

/// H x W scalar field (saliency maps, blend masks, gaze densities).
/// Stored in double so mask partitions and softmax sums hold to tight
/// tolerances.
class ScalarField {
 public:
  ScalarField() = default;

  ScalarField(int height, int width, double fill = 0.0)
      : height_(height), width_(width) {
    if (height < 1 || width < 1) {
      throw InvalidParameter("ScalarField: need H,W >= 1");
    }
    data_.assign(static_cast<std::size_t>(height) * width, fill);
  }

  int height() const { return height_; }
  int width() const { return width_; }
  bool empty() const { return data_.empty(); }

  double& at(int y, int x) {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  double at(int y, int x) const {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<double> data_;
};

/// Per-output-pixel continuous source coordinates of a warp. Entries may lie
/// outside the source image; the sampler clamps (replicate padding).
struct GridMap {
  int out_height = 0;
  int out_width = 0;
  std::vector<double> src_x;  // row-major, out_height * out_width
  std::vector<double> src_y;

  GridMap() = default;
  GridMap(int h, int w)
      : out_height(h),
        out_width(w),
        src_x(static_cast<std::size_t>(h) * w),
        src_y(static_cast<std::size_t>(h) * w) {}

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * out_width + j;
  }
};

}  // namespace fovaug

#endif  // FOVAUG_IMAGE_HPP_
