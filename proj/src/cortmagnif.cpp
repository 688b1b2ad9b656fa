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

#include "fovaug/cortmagnif.hpp"

#include <cmath>

#include "fovaug/imageops.hpp"

namespace fovaug {

RadialTransform make_radial_transform(double scale, double curvature,
                                      double fovea_radius) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidParameter("RadialTransform: scale C must be > 0");
  }
  if (!(fovea_radius > 0.0) || !std::isfinite(fovea_radius)) {
    throw InvalidParameter("RadialTransform: r_fov must be > 0");
  }
  if (!std::isfinite(curvature) || !(curvature > -fovea_radius)) {
    throw DegenerateWarp("RadialTransform: K must exceed -r_fov");
  }
  return RadialTransform{scale, curvature, fovea_radius};
}

double cmf(double r, const RadialTransform& t) {
  if (!(r >= 0.0)) throw InvalidParameter("cmf: r must be >= 0");
  if (r < t.fovea_radius) return t.scale;
  return t.scale * (t.fovea_radius + t.curvature) / (r + t.curvature);
}

double ecc_of_radius(double r, const RadialTransform& t) {
  if (!(r >= 0.0)) throw InvalidParameter("ecc_of_radius: r must be >= 0");
  if (r < t.fovea_radius) return r / t.scale;
  const double rk = r + t.curvature;
  return (rk * rk / (2.0 * (t.fovea_radius + t.curvature)) +
          (t.fovea_radius - t.curvature) / 2.0) /
         t.scale;
}

void validate(const MagnifParams& params) {
  if (!(params.fovea_radius > 0.0) || !std::isfinite(params.fovea_radius)) {
    throw InvalidParameter("MagnifParams: r_fov must be > 0");
  }
  if (!std::isfinite(params.curvature) ||
      !(params.curvature > -params.fovea_radius)) {
    throw DegenerateWarp("MagnifParams: K must exceed -r_fov");
  }
  if (!(params.cover_lo > 0.0) || !(params.cover_lo <= params.cover_hi) ||
      !std::isfinite(params.cover_hi)) {
    throw InvalidParameter("MagnifParams: need 0 < cover_lo <= cover_hi");
  }
  if (params.out_size < 1) {
    throw InvalidParameter("MagnifParams: out_size must be >= 1");
  }
}

double solve_scale_for_cover(double cover, int img_height, int img_width,
                             const MagnifParams& params) {
  validate(params);
  if (!(cover > 0.0) || !std::isfinite(cover)) {
    throw InvalidParameter("solve_scale_for_cover: cover must be > 0");
  }
  if (img_height < 1 || img_width < 1) {
    throw InvalidParameter("solve_scale_for_cover: bad image shape");
  }
  const RadialTransform unit{1.0, params.curvature, params.fovea_radius};
  const double r_edge = params.out_size / 2.0;
  const double h_edge = ecc_of_radius(r_edge, unit);
  const double e_max =
      std::sqrt(cover * static_cast<double>(img_width) * img_height) / 2.0;
  return h_edge / e_max;
}

GridMap build_grid(FixationPoint fixation, const RadialTransform& transform,
                   int out_height, int out_width) {
  if (out_height < 1 || out_width < 1) {
    throw InvalidParameter("build_grid: bad output shape");
  }
  make_radial_transform(transform.scale, transform.curvature,
                        transform.fovea_radius);
  const double cx = (out_width - 1) / 2.0;
  const double cy = (out_height - 1) / 2.0;
  GridMap grid(out_height, out_width);
  for (int i = 0; i < out_height; ++i) {
    for (int j = 0; j < out_width; ++j) {
      const double u = j - cx;
      const double v = i - cy;
      const double r = std::hypot(u, v);
      const std::size_t k = grid.index(i, j);
      if (r == 0.0) {
        grid.src_x[k] = fixation.x;
        grid.src_y[k] = fixation.y;
      } else {
        const double s = ecc_of_radius(r, transform) / r;
        grid.src_x[k] = fixation.x + s * u;
        grid.src_y[k] = fixation.y + s * v;
      }
    }
  }
  return grid;
}

ImageBuffer warp_by_grid(const ImageBuffer& image, const GridMap& grid) {
  if (image.empty()) throw InvalidParameter("warp_by_grid: empty image");
  ImageBuffer out(grid.out_height, grid.out_width, image.channels());
  for (int i = 0; i < grid.out_height; ++i) {
    for (int j = 0; j < grid.out_width; ++j) {
      const std::size_t k = grid.index(i, j);
      bilinear_sample_pixel(image, grid.src_x[k], grid.src_y[k],
                            out.pixel(i, j));
    }
  }
  return out;
}

ImageBuffer magnify_with_transform(const ImageBuffer& image,
                                   FixationPoint fixation,
                                   const RadialTransform& transform,
                                   int out_height, int out_width) {
  return warp_by_grid(image,
                      build_grid(fixation, transform, out_height, out_width));
}

ImageBuffer magnify(const ImageBuffer& image, FixationPoint fixation,
                    const MagnifParams& params, Philox& rng,
                    MagnifySample* out_sample) {
  validate(params);
  if (image.empty()) throw InvalidParameter("magnify: empty image");
  if (fixation.x < 0.0 || fixation.x > image.width() - 1 || fixation.y < 0.0 ||
      fixation.y > image.height() - 1) {
    throw InvalidParameter("magnify: fixation outside image");
  }
  const double cover = rng.uniform(params.cover_lo, params.cover_hi);
  const double scale =
      solve_scale_for_cover(cover, image.height(), image.width(), params);
  if (out_sample) {
    out_sample->cover = cover;
    out_sample->scale = scale;
  }
  const RadialTransform transform = make_radial_transform(
      scale, params.curvature, params.fovea_radius);
  return magnify_with_transform(image, fixation, transform, params.out_size,
                                params.out_size);
}

}  // namespace fovaug
