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

#ifndef FOVAUG_FOVBLUR_HPP_
#define FOVAUG_FOVBLUR_HPP_

#include <vector>

#include "fovaug/fixation.hpp"
#include "fovaug/image.hpp"
#include "fovaug/rng.hpp"

namespace fovaug {

/// Foveation as spatially-varying blur.
struct FovBlurParams {
  /// Foveal-area fraction range (ratio of unblurred pixels), subset of (0,1).
  double fov_area_lo = 0.01;
  double fov_area_hi = 0.5;
  /// Blur slope: pixels of sigma per pixel of eccentricity.
  double k_blur = 0.06;
  /// Number of blur belts outside the fovea.
  int n_belts = 5;
  /// Outer eccentricity in pixels; 0 means "distance from the fixation to
  /// the farthest image corner".
  double e_r = 0.0;
};

void validate(const FovBlurParams& params);

/// Blend masks for one fixation: masks[0] is the foveal (identity) layer,
/// masks[n+1] the n-th blur belt. The stack sums to 1 at every pixel.
struct BeltMaskStack {
  std::vector<ScalarField> masks;
  /// sigmas[0] = 0; sigmas[n+1] = k_blur * (belt-center eccentricity).
  std::vector<double> sigmas;
};

/// Piecewise cos^2 crossfade:
///   1 on [-1/4, 1/4]; cos^2(pi(x+1/4)) on [-3/4, -1/4];
///   1 - cos^2(pi(x-3/4)) on [1/4, 3/4]; 0 elsewhere.
/// Adjacent unit-shifted copies sum to 1 on their overlap.
double crossfade(double x);

/// Circular-equivalence foveal radius: e_0 = sqrt(fov_area * W * H / pi).
double fovea_radius_for_area(double fov_area, int width, int height);

/// Belt n weight at eccentricity e is
///   g_n(e) = crossfade((log e - [log e_0 + w_e (n+1)]) / w_e),
///   w_e = (log e_r - log e_0) / n_belts,
/// evaluated at each pixel's distance to the fixation. Eccentricities beyond
/// e_r are held at the e_r value (they stay in the outermost belt); the
/// foveal mask is the residual 1 - sum(belts), clamped to [0, 1].
BeltMaskStack belt_masks(int height, int width, FixationPoint fixation,
                         double e0, double er, int n_belts, double k_blur);

/// Deterministic core: blends the identity image with n_belts Gaussian-
/// blurred copies using the belt masks for the given foveal area fraction.
/// Pixels whose foveal mask is exactly 1 are returned bit-identical.
ImageBuffer foveate_blur_with(const ImageBuffer& image, FixationPoint fixation,
                              double fov_area, const FovBlurParams& params);

/// Draws fov_area uniformly from [fov_area_lo, fov_area_hi], then applies
/// foveate_blur_with. The drawn value can be retrieved via out_fov_area.
ImageBuffer foveate_blur(const ImageBuffer& image, FixationPoint fixation,
                         const FovBlurParams& params, Philox& rng,
                         double* out_fov_area = nullptr);

}  // namespace fovaug

#endif  // FOVAUG_FOVBLUR_HPP_
