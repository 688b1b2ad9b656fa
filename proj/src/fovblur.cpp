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

#include "fovaug/fovblur.hpp"

#include <algorithm>
#include <cmath>

#include "fovaug/imageops.hpp"

namespace fovaug {

namespace {

constexpr double kPi = 3.14159265358979323846;

double corner_distance(int height, int width, FixationPoint fixation) {
  double far = 0.0;
  for (const double cy : {0.0, static_cast<double>(height - 1)}) {
    for (const double cx : {0.0, static_cast<double>(width - 1)}) {
      far = std::max(far, std::hypot(cx - fixation.x, cy - fixation.y));
    }
  }
  return far;
}

}  // namespace

void validate(const FovBlurParams& params) {
  if (!(params.fov_area_lo > 0.0) || !(params.fov_area_hi < 1.0) ||
      !(params.fov_area_lo <= params.fov_area_hi)) {
    throw InvalidParameter("FovBlurParams: need 0 < lo <= hi < 1");
  }
  if (!(params.k_blur >= 0.0) || !std::isfinite(params.k_blur)) {
    throw InvalidParameter("FovBlurParams: k_blur must be >= 0");
  }
  if (params.n_belts < 1) {
    throw InvalidParameter("FovBlurParams: n_belts must be >= 1");
  }
  if (!(params.e_r >= 0.0) || !std::isfinite(params.e_r)) {
    throw InvalidParameter("FovBlurParams: e_r must be >= 0");
  }
}

double crossfade(double x) {
  if (x >= -0.25 && x <= 0.25) return 1.0;
  if (x >= -0.75 && x < -0.25) {
    const double c = std::cos(kPi * (x + 0.25));
    return c * c;
  }
  if (x > 0.25 && x <= 0.75) {
    const double c = std::cos(kPi * (x - 0.75));
    return 1.0 - c * c;
  }
  return 0.0;
}

double fovea_radius_for_area(double fov_area, int width, int height) {
  if (!(fov_area > 0.0) || !std::isfinite(fov_area)) {
    throw InvalidParameter("fovea_radius_for_area: fov_area must be > 0");
  }
  return std::sqrt(fov_area * width * height / kPi);
}

BeltMaskStack belt_masks(int height, int width, FixationPoint fixation,
                         double e0, double er, int n_belts, double k_blur) {
  if (height < 1 || width < 1) {
    throw InvalidParameter("belt_masks: bad shape");
  }
  if (!(e0 > 0.0)) throw InvalidParameter("belt_masks: e0 must be > 0");
  if (!(er > e0)) throw InvalidParameter("belt_masks: need e0 < e_r");
  if (n_belts < 1) throw InvalidParameter("belt_masks: n_belts must be >= 1");
  if (!(k_blur >= 0.0)) throw InvalidParameter("belt_masks: k_blur must be >= 0");

  const double log_e0 = std::log(e0);
  const double w_e = (std::log(er) - log_e0) / n_belts;

  BeltMaskStack stack;
  stack.masks.assign(n_belts + 1, ScalarField(height, width));
  stack.sigmas.assign(n_belts + 1, 0.0);
  for (int n = 0; n < n_belts; ++n) {
    stack.sigmas[n + 1] = k_blur * e0 * std::exp(w_e * (n + 1));
  }

  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double ecc = std::hypot(x - fixation.x, y - fixation.y);
      double belts_sum = 0.0;
      if (ecc > 0.0) {
        // s is the log-eccentricity position in belt units, held at the
        // outer edge so far pixels stay in the outermost belt.
        const double s =
            std::min((std::log(ecc) - log_e0) / w_e, static_cast<double>(n_belts));
        for (int n = 0; n < n_belts; ++n) {
          const double g = crossfade(s - (n + 1));
          stack.masks[n + 1].at(y, x) = g;
          belts_sum += g;
        }
      }
      stack.masks[0].at(y, x) = std::clamp(1.0 - belts_sum, 0.0, 1.0);
    }
  }
  return stack;
}

ImageBuffer foveate_blur_with(const ImageBuffer& image, FixationPoint fixation,
                              double fov_area, const FovBlurParams& params) {
  validate(params);
  if (image.empty()) throw InvalidParameter("foveate_blur_with: empty image");
  if (!(fov_area > 0.0 && fov_area < 1.0)) {
    throw InvalidParameter("foveate_blur_with: fov_area must be in (0,1)");
  }
  if (fixation.x < 0.0 || fixation.x > image.width() - 1 || fixation.y < 0.0 ||
      fixation.y > image.height() - 1) {
    throw InvalidParameter("foveate_blur_with: fixation outside image");
  }

  const double e0 = fovea_radius_for_area(fov_area, image.width(), image.height());
  const double er =
      params.e_r > 0.0 ? params.e_r : corner_distance(image.height(), image.width(), fixation);
  if (!(er > e0)) {
    throw InvalidParameter("foveate_blur_with: e_r must exceed the foveal radius");
  }

  const BeltMaskStack stack = belt_masks(image.height(), image.width(), fixation,
                                         e0, er, params.n_belts, params.k_blur);

  std::vector<ImageBuffer> layers;
  layers.reserve(stack.sigmas.size());
  layers.push_back(image);
  for (std::size_t i = 1; i < stack.sigmas.size(); ++i) {
    layers.push_back(gaussian_blur(image, stack.sigmas[i]));
  }

  ImageBuffer out(image.height(), image.width(), image.channels());
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      for (int c = 0; c < image.channels(); ++c) {
        double acc = 0.0;
        for (std::size_t i = 0; i < layers.size(); ++i) {
          acc += stack.masks[i].at(y, x) * layers[i].at(y, x, c);
        }
        out.at(y, x, c) = static_cast<float>(std::clamp(acc, 0.0, 1.0));
      }
    }
  }
  return out;
}

ImageBuffer foveate_blur(const ImageBuffer& image, FixationPoint fixation,
                         const FovBlurParams& params, Philox& rng,
                         double* out_fov_area) {
  validate(params);
  const double fov_area = rng.uniform(params.fov_area_lo, params.fov_area_hi);
  if (out_fov_area) *out_fov_area = fov_area;
  return foveate_blur_with(image, fixation, fov_area, params);
}

}  // namespace fovaug
