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

#ifndef FOVAUG_CORTMAGNIF_HPP_
#define FOVAUG_CORTMAGNIF_HPP_

#include "fovaug/fixation.hpp"
#include "fovaug/image.hpp"
#include "fovaug/rng.hpp"

namespace fovaug {

/// Radial cortical-to-retinal map. With C = scale, K = curvature and
/// r_fov = fovea_radius, the retinal eccentricity of cortical radius r is
///
///   e(r) = (1/C) * { r                                        r <  r_fov
///                  { (r+K)^2 / (2(r_fov+K)) + (r_fov-K)/2     r >= r_fov
///
/// which is C^1 at r_fov and strictly increasing iff K > -r_fov.
struct RadialTransform {
  double scale = 1.0;         // C
  double curvature = 20.0;    // K
  double fovea_radius = 30.0; // r_fov
};

/// Validates C > 0, r_fov > 0 (InvalidParameter) and K > -r_fov
/// (DegenerateWarp; the non-monotone "NA" region).
RadialTransform make_radial_transform(double scale, double curvature,
                                      double fovea_radius);

/// Cortical magnification factor, the reciprocal of e'(r):
///   CMF(r) = C for r < r_fov, C(r_fov+K)/(r+K) for r >= r_fov.
double cmf(double r, const RadialTransform& transform);

/// e(r) as above.
double ecc_of_radius(double r, const RadialTransform& transform);

/// Foveation-as-magnification stage parameters.
struct MagnifParams {
  double fovea_radius = 30.0;  // r_fov, in output-pixel units
  double curvature = 20.0;     // K
  double cover_lo = 0.05;
  double cover_hi = 0.35;
  int out_size = 96;           // square output, H_out = W_out
};

void validate(const MagnifParams& params);

/// Scale C for a requested cover ratio: with r_edge = out_size/2 and
/// h(r) = C*e(r) (independent of C), returns C = h(r_edge) / e_max where
/// e_max = sqrt(cover * W * H) / 2, so the warp's edge eccentricity spans a
/// square footprint of area cover * W * H on the source image.
double solve_scale_for_cover(double cover, int img_height, int img_width,
                             const MagnifParams& params);

/// Source coordinates for each output pixel: offset (u, v) from the output
/// center maps to fixation + (e(r)/r) * (u, v) with r = sqrt(u^2 + v^2)
/// (the center itself maps to the fixation). Entries may leave the image.
GridMap build_grid(FixationPoint fixation, const RadialTransform& transform,
                   int out_height, int out_width);

/// Bilinear clamp-to-edge resampling of the grid.
ImageBuffer warp_by_grid(const ImageBuffer& image, const GridMap& grid);

/// Deterministic core: build_grid + warp_by_grid.
ImageBuffer magnify_with_transform(const ImageBuffer& image,
                                   FixationPoint fixation,
                                   const RadialTransform& transform,
                                   int out_height, int out_width);

/// Values drawn/derived for one magnified view.
struct MagnifySample {
  double cover = 0.0;
  double scale = 0.0;  // solved C
};

/// Draws cover uniformly from [cover_lo, cover_hi], solves C, warps.
ImageBuffer magnify(const ImageBuffer& image, FixationPoint fixation,
                    const MagnifParams& params, Philox& rng,
                    MagnifySample* out_sample = nullptr);

}  // namespace fovaug

#endif  // FOVAUG_CORTMAGNIF_HPP_
