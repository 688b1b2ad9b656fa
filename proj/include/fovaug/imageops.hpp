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

#ifndef FOVAUG_IMAGEOPS_HPP_
#define FOVAUG_IMAGEOPS_HPP_

#include "fovaug/image.hpp"
#include "fovaug/rng.hpp"

namespace fovaug {

/// Blur sigmas below this are treated as the identity.
inline constexpr double kMinBlurSigma = 0.25;

/// Bilinear interpolation of the four neighbors of (x, y) in one channel.
/// Coordinates outside [0, W-1] x [0, H-1] are clamped to the boundary
/// (replicate padding); total on finite inputs.
float bilinear_sample(const ImageBuffer& image, double x, double y, int channel);
double bilinear_sample(const ScalarField& field, double x, double y);

/// All channels at once; `out` must hold image.channels() floats.
void bilinear_sample_pixel(const ImageBuffer& image, double x, double y,
                           float* out);

/// Separable Gaussian, kernel truncated at radius ceil(3*sigma) and
/// renormalized to sum 1, replicate padding at the borders. sigma below
/// kMinBlurSigma returns the input unchanged. Does not clamp: blurring an
/// in-range image stays in range because the kernel is a convex combination.
ImageBuffer gaussian_blur(const ImageBuffer& image, double sigma);

/// Mirror columns; an involution.
ImageBuffer hflip(const ImageBuffer& image);

/// Luma weights 0.299/0.587/0.114, replicated to all channels.
ImageBuffer to_grayscale(const ImageBuffer& image);

/// One draw of jitter factors. Brightness/contrast/saturation multiplicative
/// in [1 - 0.8s, 1 + 0.8s], hue rotation in [-0.2s, 0.2s] turns.
struct ColorJitterFactors {
  double brightness = 1.0;
  double contrast = 1.0;
  double saturation = 1.0;
  double hue_turns = 0.0;

  static ColorJitterFactors sample(Philox& rng, double strength);
};

/// Applies brightness, contrast, saturation, hue in that fixed order, then
/// clamps to [0, 1]. Factors exactly 1 (hue exactly 0) are skipped, so
/// strength 0 is the identity. Grayscale images see brightness/contrast only.
ImageBuffer color_jitter_with(const ImageBuffer& image,
                              const ColorJitterFactors& factors);
ImageBuffer color_jitter(const ImageBuffer& image, Philox& rng,
                         double strength);

/// Bilinear resize, half-pixel centers: src = (dst + 0.5) * scale - 0.5.
/// Identity when shapes match.
ImageBuffer resize_bilinear(const ImageBuffer& image, int out_height,
                            int out_width);
ScalarField resize_bilinear(const ScalarField& field, int out_height,
                            int out_width);

}  // namespace fovaug

#endif  // FOVAUG_IMAGEOPS_HPP_
